#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrw/errors.hpp"
#include "lrw/rational.hpp"

namespace lrw {

/// One ring variable; negative exponents are legal only when invertible.
struct Variable {
    std::string name;
    bool invertible = false;
};

/// Immutable description of the base ring A = Q[x1^(±1), ..., xn^(±1)].
class RingContext {
  public:
    explicit RingContext(std::vector<Variable> vars) : vars_(std::move(vars)) {}

    static std::shared_ptr<const RingContext> make(std::vector<Variable> vars) {
        return std::make_shared<const RingContext>(std::move(vars));
    }

    int num_vars() const { return static_cast<int>(vars_.size()); }
    const Variable& var(int i) const { return vars_.at(i); }
    const std::vector<Variable>& vars() const { return vars_; }

    bool same_as(const RingContext& o) const;
    std::optional<int> var_index(const std::string& name) const;

  private:
    std::vector<Variable> vars_;
};

using Context = std::shared_ptr<const RingContext>;
using Exponents = std::vector<int>;

/// Sparse exact Laurent polynomial over Q. Terms are kept in lexicographic
/// order of the exponent vector; no zero coefficients are stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Context ctx) : ctx_(std::move(ctx)) {}
    LaurentPoly(Context ctx, const Rational& c);
    LaurentPoly(Context ctx, const Exponents& e, const Rational& c);

    static LaurentPoly constant(Context ctx, const Rational& c) { return LaurentPoly(ctx, c); }
    static LaurentPoly variable(Context ctx, int i, int exp = 1);

    const Context& context() const { return ctx_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Rational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    /// Exact partial derivative d/dx_i (0-based index).
    LaurentPoly partial(int i) const;

    /// Splits into multidegree-homogeneous parts, one single-exponent term each.
    std::map<Exponents, LaurentPoly> grade_split() const;

    /// A unit is a single term c*x^v supported on invertible variables only.
    bool is_unit() const;
    LaurentPoly unit_inverse() const;

    /// Canonical text form, e.g. "3/2*x^-1*y^2 + 1", terms in lex order.
    std::string str() const;
    /// Parses the canonical text form (sums of rational*monomial terms).
    static LaurentPoly parse(Context ctx, const std::string& text);

  private:
    void check_exponents(const Exponents& e) const;
    void require_same_context(const LaurentPoly& o) const;

    Context ctx_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace lrw
