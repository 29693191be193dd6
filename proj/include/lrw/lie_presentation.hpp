#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lrw/laurent.hpp"

namespace lrw {

/// Element of L in the chosen free basis: exactly l coefficient polynomials.
using LElement = std::vector<LaurentPoly>;

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample, empty when passed
};

struct AxiomReport {
    std::uint64_t seed = 0;
    std::vector<AxiomCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

/// Free-basis presentation of a Lie-Rinehart algebra alpha: L -> Der(A).
/// anchor[i][j] is the coefficient of d/dx_j in alpha(e_i); brackets are
/// structure functions stored for i < j and extended by antisymmetry.
class LiePresentation {
  public:
    LiePresentation(Context ctx, int rank_l, std::vector<std::vector<LaurentPoly>> anchor,
                    std::map<std::pair<int, int>, LElement> brackets);

    static std::shared_ptr<const LiePresentation> torus(int n);
    static std::shared_ptr<const LiePresentation> affine(int n);
    static std::shared_ptr<const LiePresentation> point_abelian(int l);

    const Context& context() const { return ctx_; }
    int rank() const { return rank_l_; }
    const LaurentPoly& anchor_coeff(int i, int j) const { return anchor_[i][j]; }

    LaurentPoly zero_poly() const { return LaurentPoly(ctx_); }
    LElement zero_element() const { return LElement(rank_l_, LaurentPoly(ctx_)); }
    LElement basis_element(int i) const;

    /// alpha(e_i)(a)
    LaurentPoly anchor_basis_apply(int i, const LaurentPoly& a) const;
    /// alpha(xi)(a)
    LaurentPoly anchor_apply(const LElement& xi, const LaurentPoly& a) const;

    /// [e_i, e_j] as an LElement (any i, j; antisymmetric, zero on diagonal).
    LElement bracket_basis(int i, int j) const;
    /// Full bracket with the Leibniz correction terms.
    LElement bracket(const LElement& xi, const LElement& eta) const;

    LElement add(const LElement& a, const LElement& b) const;
    LElement sub(const LElement& a, const LElement& b) const;
    LElement scale(const LaurentPoly& a, const LElement& v) const;
    bool is_zero(const LElement& v) const;

    AxiomReport check_axioms(std::uint64_t seed = 1) const;

    /// Multidegree of each basis generator when the presentation is graded
    /// (anchor rows and brackets homogeneous); nullopt otherwise.
    const std::optional<std::vector<Exponents>>& generator_degrees() const {
        return gen_degrees_;
    }
    /// Throws GradingError when not multidegree-homogeneous.
    const std::vector<Exponents>& require_graded() const;

  private:
    void detect_grading();

    Context ctx_;
    int rank_l_;
    std::vector<std::vector<LaurentPoly>> anchor_;          // l x n
    std::map<std::pair<int, int>, LElement> brackets_;      // keys i < j, 0-based
    std::optional<std::vector<Exponents>> gen_degrees_;
};

using Presentation = std::shared_ptr<const LiePresentation>;

/// kind: "torus" | "affine" | "point-abelian"
Presentation make_standard_algebra(const std::string& kind, int size);

/// Seeded random polynomial, deterministic across platforms.
LaurentPoly random_poly(const Context& ctx, std::mt19937_64& rng, int max_terms = 3,
                        int max_abs_exp = 2, long max_abs_num = 5);

}  // namespace lrw
