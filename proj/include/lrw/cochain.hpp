#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lrw/lie_presentation.hpp"
#include "lrw/linalg.hpp"

namespace lrw {

/// Alternating A-multilinear p-form on L, stored on strictly increasing
/// basis tuples (0-based indices internally, 1-based in JSON).
class Cochain {
  public:
    Cochain() = default;
    Cochain(Presentation pres, int degree);

    static Cochain zero(Presentation pres, int degree) { return Cochain(std::move(pres), degree); }
    static Cochain scalar(Presentation pres, const Rational& c);

    const Presentation& presentation() const { return pres_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, LaurentPoly>& values() const { return values_; }

    bool is_zero() const { return values_.empty(); }

    /// tuple must be strictly increasing.
    void set_value(const std::vector<int>& tuple, const LaurentPoly& v);
    void add_value(const std::vector<int>& tuple, const LaurentPoly& v);
    /// Value on a sorted tuple (zero poly if absent).
    LaurentPoly value(const std::vector<int>& tuple) const;
    /// Value on an arbitrary index sequence, with alternating sign.
    LaurentPoly value_signed(std::vector<int> indices) const;

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain scaled(const Rational& c) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.values_ == b.values_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }
    friend bool operator<(const Cochain& a, const Cochain& b) {
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return a.values_ < b.values_;
    }

  private:
    Presentation pres_;
    int degree_ = 0;
    std::map<std::vector<int>, LaurentPoly> values_;
};

/// Chevalley-Eilenberg-Rinehart differential.
Cochain ce_differential(const Cochain& w);
bool is_cocycle(const Cochain& w);

/// Alternating shuffle product.
Cochain wedge(const Cochain& a, const Cochain& b);

Cochain random_cochain(const Presentation& pres, int degree, std::mt19937_64& rng);

/// Element of the truncated even ring: one component per degree 0,2,...,2*floor(l/2).
class EvenClassPolynomial {
  public:
    EvenClassPolynomial() = default;
    explicit EvenClassPolynomial(Presentation pres);

    const Presentation& presentation() const { return pres_; }
    int num_components() const { return static_cast<int>(comps_.size()); }
    const Cochain& component(int m) const { return comps_.at(m); }  // degree 2m
    Cochain& component(int m) { return comps_.at(m); }

    bool is_zero() const;

    EvenClassPolynomial& operator+=(const EvenClassPolynomial& o);
    EvenClassPolynomial& operator-=(const EvenClassPolynomial& o);
    friend EvenClassPolynomial operator+(EvenClassPolynomial a, const EvenClassPolynomial& b) {
        return a += b;
    }
    friend EvenClassPolynomial operator-(EvenClassPolynomial a, const EvenClassPolynomial& b) {
        return a -= b;
    }
    EvenClassPolynomial scaled(const Rational& c) const;
    /// Truncated graded product (wedge on components).
    friend EvenClassPolynomial operator*(const EvenClassPolynomial& a,
                                         const EvenClassPolynomial& b);

    friend bool operator==(const EvenClassPolynomial& a, const EvenClassPolynomial& b) {
        return a.comps_ == b.comps_;
    }

    static EvenClassPolynomial unit(Presentation pres);

  private:
    Presentation pres_;
    std::vector<Cochain> comps_;
};

/// exp(x) = sum x^i / i!, truncated above degree l. Requires a cocycle.
EvenClassPolynomial exp_class(const Cochain& x);

/// Representative plus the window bound used for class comparisons.
struct CohomologyClass {
    Cochain representative;
    int window = 1;
};

/// Multidegree-w piece of a cochain: weight(term (T, x^e)) = e - sum deg(e_i).
std::map<Exponents, Cochain> weight_decompose(const Cochain& w);

struct WeightCohomology {
    Exponents weight;
    int dimension = 0;
    std::vector<Cochain> representatives;
    // Span of [image basis | representatives] in the C^p_w coordinate order,
    // kept for expressing arbitrary cocycles in this basis.
    std::vector<std::vector<int>> tuple_basis;
    QMatrix im_and_reps;  // columns: image generators then representatives
    int num_image_cols = 0;
};

/// Exact cohomology of the weight-w graded pieces with |w_i| <= D.
struct CohomologyWindow {
    int p = 0;
    int D = 0;
    int dimension = 0;
    std::vector<WeightCohomology> weights;  // sorted by weight
    std::vector<Cochain> representatives;   // concatenated in weight order

    /// Coordinates of a cocycle's class in the representative basis; nullopt
    /// when some weight piece lies outside the computed window.
    std::optional<std::vector<Rational>> coordinates(const Cochain& z) const;
};

CohomologyWindow cohomology_window(const Presentation& pres, int p, int D);

/// Exact per-multidegree test that a - b is a coboundary.
bool class_equal(const Cochain& a, const Cochain& b);
bool class_is_zero(const Cochain& a);

struct CharRingResult {
    int dimension = 0;
    bool inputs_independent = true;
    int h2_dimension = 0;
};

/// Dimension over Q of the span of {exp(x_b)} in window cohomology coordinates.
CharRingResult char_ring_dim(const Presentation& pres, const std::vector<Cochain>& basis, int D);

}  // namespace lrw
