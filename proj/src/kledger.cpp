#include "lrw/kledger.hpp"

#include "lrw/window_module.hpp"

namespace lrw {

KAtom make_atom(long rank, Cochain c1_rep, bool scalar_type, std::string label) {
    if (rank < 1)
        throw InputError("make_atom: rank must be >= 1");
    if (c1_rep.degree() != 2)
        throw InputError("make_atom: c1 representative must have degree 2");
    if (!is_cocycle(c1_rep))
        throw PreconditionError("make_atom: c1 representative is not a cocycle");
    return KAtom{rank, std::move(c1_rep), scalar_type, std::move(label)};
}

KAtom unit_atom(const Presentation& pres) {
    return KAtom{1, Cochain(pres, 2), true, "1"};
}

long KClass::total_multiplicity() const {
    long t = 0;
    for (const auto& [a, m] : mult_)
        t += m;
    return t;
}

long KClass::total_rank() const {
    long t = 0;
    for (const auto& [a, m] : mult_)
        t += a.rank * m;
    return t;
}

void KClass::add(const KAtom& atom, long mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = mult_.emplace(atom, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            mult_.erase(it);
    }
}

KClass operator+(const KClass& a, const KClass& b) {
    KClass r = a;
    for (const auto& [atom, m] : b.mult_)
        r.add(atom, m);
    return r;
}

KClass operator-(const KClass& a, const KClass& b) {
    KClass r = a;
    for (const auto& [atom, m] : b.mult_)
        r.add(atom, -m);
    return r;
}

KClass KClass::operator-() const {
    KClass r;
    for (const auto& [atom, m] : mult_)
        r.add(atom, -m);
    return r;
}

namespace {

KAtom tensor_atoms(const KAtom& a, const KAtom& b) {
    KAtom t;
    t.rank = a.rank * b.rank;
    t.c1_rep = a.c1_rep.scaled(Rational(b.rank)) + b.c1_rep.scaled(Rational(a.rank));
    t.scalar_type = a.scalar_type && b.scalar_type;
    if (a.label == "1")
        t.label = b.label;
    else if (b.label == "1")
        t.label = a.label;
    else
        t.label = a.label + "(x)" + b.label;
    return t;
}

}  // namespace

KClass k_tensor(const KClass& a, const KClass& b) {
    KClass r;
    for (const auto& [ua, ma] : a.atoms())
        for (const auto& [ub, mb] : b.atoms())
            r.add(tensor_atoms(ua, ub), ma * mb);
    return r;
}

Cochain k_c1(const Presentation& pres, const KClass& u) {
    Cochain out(pres, 2);
    for (const auto& [atom, m] : u.atoms())
        out += atom.c1_rep.scaled(Rational(m));
    return out;
}

EvenClassPolynomial k_ch(const Presentation& pres, const KClass& u) {
    EvenClassPolynomial out(pres);
    EvenClassPolynomial one = EvenClassPolynomial::unit(pres);
    for (const auto& [atom, m] : u.atoms()) {
        if (!atom.scalar_type)
            throw PreconditionError(
                "k_ch: non-scalar atom; the closed Chern formula needs scalar curvature");
        EvenClassPolynomial e = exp_class(atom.c1_rep.scaled(Rational(1, atom.rank)));
        EvenClassPolynomial term =
            one.scaled(Rational(1 - atom.rank)) + e.scaled(Rational(atom.rank));
        out += term.scaled(Rational(m));
    }
    return out;
}

EvenClassPolynomial k_ch_reduced(const Presentation& pres, const KClass& u) {
    EvenClassPolynomial out = k_ch(pres, u);
    out -= EvenClassPolynomial::unit(pres).scaled(Rational(u.total_multiplicity()));
    return out;
}

namespace {

void check_kernel_args(const std::vector<Cochain>& F, const std::vector<int>& ks,
                       const std::vector<int>& is) {
    if (F.empty() || F.size() != ks.size() || F.size() != is.size())
        throw InputError("kernel demo: F, k and i lists must have equal positive length");
    for (const auto& c : F) {
        if (c.degree() != 2)
            throw PreconditionError("kernel demo: classes must have degree 2");
        if (!is_cocycle(c))
            throw PreconditionError("kernel demo: classes must be cocycles");
    }
}

Cochain balancing_class(const Presentation& pres, const std::vector<Cochain>& F) {
    Cochain sum(pres, 2);
    for (const auto& c : F)
        sum += c;
    return -sum;
}

}  // namespace

KernelSumReport kernel_sum_demo(const Presentation& pres, const std::vector<Cochain>& F,
                                const std::vector<int>& ks, const std::vector<int>& is, int k0,
                                int i0) {
    check_kernel_args(F, ks, is);
    KernelSumReport report;
    KClass eta;
    for (size_t m = 0; m < F.size(); ++m)
        eta.add(invertible_line_atom(pres, F[m], ks[m], is[m]), 1);
    eta.add(invertible_line_atom(pres, balancing_class(pres, F), k0, i0), 1);
    report.eta_minus_one = eta - KClass(unit_atom(pres));
    report.ch = k_ch(pres, report.eta_minus_one);
    report.ch_reduced = k_ch_reduced(pres, report.eta_minus_one);
    report.ch_reduced_zero = report.ch_reduced.is_zero();
    report.formally_nonzero = !report.eta_minus_one.is_zero();
    report.c1 = k_c1(pres, report.eta_minus_one);
    report.c1_class_zero = class_is_zero(report.c1);
    return report;
}

KernelProductReport kernel_product_demo(const Presentation& pres, const std::vector<Cochain>& F,
                                        const std::vector<int>& ks, const std::vector<int>& is,
                                        int k0, int i0) {
    check_kernel_args(F, ks, is);
    KernelProductReport report;
    KClass omega(invertible_line_atom(pres, F[0], ks[0], is[0]));
    for (size_t m = 1; m < F.size(); ++m)
        omega = k_tensor(omega, KClass(invertible_line_atom(pres, F[m], ks[m], is[m])));
    omega = k_tensor(omega, KClass(invertible_line_atom(pres, balancing_class(pres, F), k0, i0)));
    report.omega = omega;
    report.c1 = k_c1(pres, omega);
    report.c1_class_zero = class_is_zero(report.c1);
    report.formally_nontrivial = !(omega == KClass(unit_atom(pres)));
    return report;
}

}  // namespace lrw
