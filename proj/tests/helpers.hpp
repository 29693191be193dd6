#pragma once

#include "lrw/lie_presentation.hpp"

namespace lrw::testing {

/// Rank-3 algebra of vector fields (d, x d, x^2 d) on Q[x]: the graded
/// nonzero-bracket instance used across the suites.
inline Presentation line_fields() {
    Context ctx = RingContext::make({{"x", false}});
    std::vector<std::vector<LaurentPoly>> anchor(3);
    anchor[0].push_back(LaurentPoly::constant(ctx, Rational(1)));
    anchor[1].push_back(LaurentPoly::variable(ctx, 0));
    anchor[2].push_back(LaurentPoly(ctx, {2}, Rational(1)));
    std::map<std::pair<int, int>, LElement> br;
    LElement b12(3, LaurentPoly(ctx)), b13(3, LaurentPoly(ctx)), b23(3, LaurentPoly(ctx));
    b12[0] = LaurentPoly::constant(ctx, Rational(1));
    b13[1] = LaurentPoly::constant(ctx, Rational(2));
    b23[2] = LaurentPoly::constant(ctx, Rational(1));
    br.emplace(std::make_pair(0, 1), b12);
    br.emplace(std::make_pair(0, 2), b13);
    br.emplace(std::make_pair(1, 2), b23);
    return std::make_shared<const LiePresentation>(ctx, 3, anchor, br);
}

}  // namespace lrw::testing
