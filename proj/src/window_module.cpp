#include "lrw/window_module.hpp"

#include <functional>
#include <sstream>

namespace lrw {

long window_rank_formula(int l, int k, int i) {
    if (l < 1 || k < 1 || i < 1)
        throw InputError("window_rank_formula: need l, k, i >= 1");
    return binomial_long(static_cast<unsigned long>(l + k + i - 1), static_cast<unsigned long>(l)) -
           binomial_long(static_cast<unsigned long>(l + k - 1), static_cast<unsigned long>(l));
}

namespace {

void enumerate_monomials(int l, int lo, int hi, std::vector<GenMonomial>& out) {
    // all p in N^l with lo <= |p| < hi, in (degree, lex) order
    for (int d = lo; d < hi; ++d) {
        std::vector<int> p(l, 0);
        // first composition of d in lex-minimal monomial order
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == l - 1) {
                p[pos] = remaining;
                out.push_back(GenMonomial{p, 0});
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                p[pos] = v;
                rec(pos + 1, remaining - v);
            }
            p[pos] = 0;
        };
        rec(0, d);
    }
}

}  // namespace

RankCheck window_rank_check(int l, int k, int i) {
    std::vector<GenMonomial> monos;
    enumerate_monomials(l, k, k + i, monos);
    RankCheck r;
    r.enumerated = static_cast<long>(monos.size());
    r.formula = window_rank_formula(l, k, i);
    r.matches = r.enumerated == r.formula;
    return r;
}

WindowModule build_window_module(std::shared_ptr<const RewriteSystem> system, int k, int i) {
    if (k < 1 || i < 1)
        throw InputError("build_window_module: need k, i >= 1");
    if (system->mode() != EnvelopingMode::Twisted)
        throw InputError("build_window_module: twisted-mode rewrite system required");
    if (!system->twist_is_cocycle())
        throw PreconditionError("build_window_module: twist cochain is not a cocycle");

    const Presentation& pres = system->presentation();
    WindowModule mod;
    mod.system = system;
    mod.k = k;
    mod.i = i;
    enumerate_monomials(pres->rank(), k, k + i, mod.basis);
    // basis is already sorted in GenMonomial order (degree, then lex)

    const int r = static_cast<int>(mod.basis.size());
    std::map<GenMonomial, int> index_of;
    for (int c = 0; c < r; ++c)
        index_of.emplace(mod.basis[static_cast<size_t>(c)], c);

    mod.connection = Connection(pres, r);
    for (int dir = 0; dir < pres->rank(); ++dir) {
        PolyMatrix& om = mod.connection.omega[dir];
        for (int c = 0; c < r; ++c) {
            UElement prod = system->gen_times(
                dir, UElement::monomial(pres->context(), mod.basis[static_cast<size_t>(c)]));
            UElement proj = RewriteSystem::degree_window(prod, k, k + i);
            for (const auto& [m, coeff] : proj.terms())
                om.at(index_of.at(m), c) = coeff;
        }
    }
    return mod;
}

WindowCurvatureReport window_curvature_report(const WindowModule& mod) {
    const RewriteSystem& sys = *mod.system;
    const Presentation& pres = sys.presentation();
    const Cochain& f = sys.twist();
    const int lo = mod.window_lo(), hi = mod.window_hi();
    const int l = pres->rank();
    const int r = static_cast<int>(mod.basis.size());

    WindowCurvatureReport report;
    report.k = mod.k;
    report.i = mod.i;
    report.rank = r;

    std::map<GenMonomial, int> index_of;
    for (int c = 0; c < r; ++c)
        index_of.emplace(mod.basis[static_cast<size_t>(c)], c);

    // interior tracking: a basis monomial is interior when no intermediate
    // term escapes the window during any curvature evaluation
    report.interior.assign(static_cast<size_t>(r), true);
    auto project_tracked = [&](const UElement& u, int col) {
        UElement proj = RewriteSystem::degree_window(u, lo, hi);
        if (!(u - proj).is_zero())
            report.interior[static_cast<size_t>(col)] = false;
        return proj;
    };

    CurvatureForm engine;
    engine.pres = pres;
    engine.rank = r;
    report.routes_agree = true;
    report.relation_holds = true;

    CurvatureForm conn_R = curvature(mod.connection);

    for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b) {
            PolyMatrix engine_m(pres->context(), r, r);
            // bracket coefficients of [e_a, e_b]
            LElement br = pres->bracket_basis(a, b);
            for (int c = 0; c < r; ++c) {
                UElement base =
                    UElement::monomial(pres->context(), mod.basis[static_cast<size_t>(c)]);
                // interleaved (module-action) route
                UElement nb = project_tracked(sys.gen_times(b, base), c);
                UElement nab = project_tracked(sys.gen_times(a, nb), c);
                UElement na = project_tracked(sys.gen_times(a, base), c);
                UElement nba = project_tracked(sys.gen_times(b, na), c);
                UElement bracket_action(pres->context());
                for (int m = 0; m < l; ++m)
                    if (!br[m].is_zero())
                        bracket_action += sys.gen_times(m, base).left_scaled(br[m]);
                UElement col = nab - nba - project_tracked(bracket_action, c);
                for (const auto& [mono, coeff] : col.terms()) {
                    auto it = index_of.find(mono);
                    if (it != index_of.end())
                        engine_m.at(it->second, c) = coeff;
                }

                // unprojected route: the commutator identity in the full algebra
                UElement full = sys.gen_times(a, sys.gen_times(b, base)) -
                                sys.gen_times(b, sys.gen_times(a, base)) - bracket_action;
                UElement expect = base.left_scaled(f.value({a, b}));
                if (!(RewriteSystem::degree_window(full, lo, hi) - expect).is_zero())
                    report.relation_holds = false;
            }
            if (!(engine_m == conn_R.at(a, b)))
                report.routes_agree = false;
            engine.value.emplace(std::make_pair(a, b), std::move(engine_m));
        }

    CurvatureTypeResult type = is_curvature_type(mod.connection, f);
    report.scalar_type = type.matches;
    report.deviation = std::move(type.deviation);

    for (int c = 0; c < r; ++c) {
        if (!report.interior[static_cast<size_t>(c)])
            continue;
        for (const auto& [key, m] : report.deviation.value)
            for (int row = 0; row < r; ++row)
                if (!m.at(row, c).is_zero())
                    report.interior_scalar = false;
    }
    return report;
}

KClass c1_section(const Presentation& pres, const Cochain& c, int k, int i) {
    if (c.degree() != 2)
        throw PreconditionError("c1_section: class representative must have degree 2");
    if (!is_cocycle(c))
        throw PreconditionError("c1_section: representative is not a cocycle");
    long r = window_rank_formula(pres->rank(), k, i);
    std::ostringstream label;
    label << "section[k=" << k << ",i=" << i << "]";
    return KClass(make_atom(r, c, true, label.str()));
}

KClass wedge_line_class(const Presentation& pres, const Cochain& F, int k, int i, int d) {
    if (F.degree() != 2)
        throw PreconditionError("wedge_line_class: F must have degree 2");
    if (!is_cocycle(F))
        throw PreconditionError("wedge_line_class: F is not a cocycle");
    long rho = window_rank_formula(pres->rank(), k, i);
    if (d < 1 || d > rho)
        throw InputError("wedge_line_class: need 1 <= d <= window rank");
    long w = binomial_long(static_cast<unsigned long>(rho), static_cast<unsigned long>(d));
    Cochain c1_rep = F.scaled(Rational(w * d));
    std::ostringstream label;
    label << "line[k=" << k << ",i=" << i << ",d=" << d << "]";
    return KClass(make_atom(w, c1_rep, true, label.str()));
}

KAtom invertible_line_atom(const Presentation& pres, const Cochain& F, int k, int i) {
    if (F.degree() != 2)
        throw PreconditionError("invertible_line_atom: F must have degree 2");
    if (!is_cocycle(F))
        throw PreconditionError("invertible_line_atom: F is not a cocycle");
    long rho = window_rank_formula(pres->rank(), k, i);
    (void)rho;  // top power: rank C(rho,rho) = 1, scaling rho*(F/rho) = F
    std::ostringstream label;
    label << "line[k=" << k << ",i=" << i << ",d=top]";
    return make_atom(1, F, true, label.str());
}

}  // namespace lrw
