#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lrw/cochain.hpp"

namespace lrw {

/// Ordered generator monomial e_1^{p_1}...e_l^{p_l} (times z^{z_exp} in
/// central mode). Ordered by (total degree, lex, z) for stable iteration.
struct GenMonomial {
    std::vector<int> p;
    int z_exp = 0;

    int degree() const {
        int d = 0;
        for (int v : p)
            d += v;
        return d;
    }

    friend bool operator==(const GenMonomial& a, const GenMonomial& b) {
        return a.p == b.p && a.z_exp == b.z_exp;
    }
    friend bool operator<(const GenMonomial& a, const GenMonomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        if (a.p != b.p)
            return a.p < b.p;
        return a.z_exp < b.z_exp;
    }
};

/// Normal-form element of U(A,L,f): left A-coefficients on ordered monomials.
class UElement {
  public:
    UElement() = default;
    explicit UElement(Context ctx) : ctx_(std::move(ctx)) {}

    static UElement monomial(Context ctx, GenMonomial m, const Rational& c = Rational(1));
    static UElement one(Context ctx, int l);

    const Context& context() const { return ctx_; }
    const std::map<GenMonomial, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const GenMonomial& m, const LaurentPoly& c);
    LaurentPoly coefficient(const GenMonomial& m) const;

    UElement operator-() const;
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }

    /// Left multiplication by a ring element.
    UElement left_scaled(const LaurentPoly& a) const;

    /// Maximal |P| over terms (-1 for zero).
    int top_degree() const;

    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

  private:
    Context ctx_;
    std::map<GenMonomial, LaurentPoly> terms_;
};

/// Word in the free algebra on A-coefficients, generators and (central mode) z.
struct WordToken {
    enum class Kind { Coef, Gen, Z } kind;
    LaurentPoly coef;  // Kind::Coef
    int gen = -1;      // Kind::Gen, 0-based

    static WordToken coefficient(LaurentPoly a) {
        return WordToken{Kind::Coef, std::move(a), -1};
    }
    static WordToken generator(int i) { return WordToken{Kind::Gen, LaurentPoly(), i}; }
    static WordToken z() { return WordToken{Kind::Z, LaurentPoly(), -1}; }
};

using Word = std::vector<WordToken>;

enum class EnvelopingMode {
    Twisted,  // U(A,L,f): the f-term lands in A (z := 1)
    Central,  // U(A,L(f)): the f-term carries the central generator z
};

struct OverlapResult {
    std::string kind;  // "triple" or "coefficient"
    std::vector<int> generators;  // 1-based, leftmost first
    std::string coefficient;      // coefficient overlaps only
    bool resolved = true;
    UElement discrepancy;         // left-first minus right-first
};

struct ConfluenceReport {
    bool resolvable = true;
    std::vector<OverlapResult> overlaps;
};

/// PBW rewriting engine for U(A,L,f) / U(A,L(f)). Rules:
///   e_i a -> a e_i + alpha(e_i)(a)
///   e_j e_i -> e_i e_j + [e_j,e_i] + f(e_j,e_i) z^(mode)   (j > i)
/// Termination: each step lowers (word degree, inversion count) lexicographically.
class RewriteSystem {
  public:
    RewriteSystem(Presentation pres, Cochain twist, EnvelopingMode mode);

    const Presentation& presentation() const { return pres_; }
    const Cochain& twist() const { return f_; }
    EnvelopingMode mode() const { return mode_; }
    bool twist_is_cocycle() const { return twist_is_cocycle_; }

    UElement one() const { return UElement::one(pres_->context(), pres_->rank()); }

    /// Normal form of e_i * u.
    UElement gen_times(int i, const UElement& u) const;
    /// Normal form of an arbitrary word.
    UElement normal_form(const Word& word) const;
    /// Product of two normal forms.
    UElement mul(const UElement& u, const UElement& v) const;

    /// Coordinate projection onto monomials with lo <= |P| < hi.
    static UElement degree_window(const UElement& u, int lo, int hi);

    /// Checks every overlap ambiguity (e_k e_j e_i and e_j e_i a) by reducing
    /// one step in both positions and comparing full normal forms.
    ConfluenceReport diamond_check() const;

  private:
    UElement gen_times_monomial(int i, const GenMonomial& m) const;
    LaurentPoly twist_value(int i, int j) const;  // f(e_i, e_j), any order

    Presentation pres_;
    Cochain f_;
    EnvelopingMode mode_;
    bool twist_is_cocycle_;
};

}  // namespace lrw
