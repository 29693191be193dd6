#pragma once

#include <memory>
#include <vector>

#include "lrw/connection.hpp"
#include "lrw/enveloping.hpp"
#include "lrw/kledger.hpp"

namespace lrw {

/// C(l+k+i-1, l) - C(l+k-1, l): number of monomials with k <= |P| < k+i.
long window_rank_formula(int l, int k, int i);

struct RankCheck {
    bool matches = false;
    long enumerated = 0;
    long formula = 0;
};
RankCheck window_rank_check(int l, int k, int i);

/// Filtration window module: PBW monomials of degree in [k, k+i) with the
/// connection induced by left multiplication followed by window projection.
struct WindowModule {
    std::shared_ptr<const RewriteSystem> system;  // twisted mode
    int k = 1, i = 1;
    std::vector<GenMonomial> basis;  // (degree, lex) order
    Connection connection;

    int window_lo() const { return k; }
    int window_hi() const { return k + i; }
};

WindowModule build_window_module(std::shared_ptr<const RewriteSystem> system, int k, int i);

struct WindowCurvatureReport {
    int k = 1, i = 1;
    long rank = 0;
    /// Matrix-calculus curvature equals the interleaved rewriting-engine one.
    bool routes_agree = false;
    /// Unprojected engine commutator acts as f * Id on the window.
    bool relation_holds = false;
    bool scalar_type = false;  // deviation identically zero
    CurvatureForm deviation;   // R - f * Id
    std::vector<bool> interior;  // per basis monomial: no intermediate escaped
    bool interior_scalar = true; // deviation vanishes on interior columns
};

WindowCurvatureReport window_curvature_report(const WindowModule& module);

/// Section of c1: the class of the window module built from c/r, as an atom
/// of rank r with first Chern representative exactly c.
KClass c1_section(const Presentation& pres, const Cochain& c, int k, int i);

/// Atom of the d-th exterior power of the window module built from F:
/// rank C(rho,d), scalar of type d*F, c1 = C(rho,d)*d*F (rho = window rank).
KClass wedge_line_class(const Presentation& pres, const Cochain& F, int k, int i, int d);

/// Rank-1 top exterior power normalized so that c1 is exactly the class of F.
KAtom invertible_line_atom(const Presentation& pres, const Cochain& F, int k, int i);

}  // namespace lrw
