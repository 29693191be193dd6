#include "lrw/lie_presentation.hpp"

#include <set>
#include <sstream>

namespace lrw {

LiePresentation::LiePresentation(Context ctx, int rank_l,
                                 std::vector<std::vector<LaurentPoly>> anchor,
                                 std::map<std::pair<int, int>, LElement> brackets)
    : ctx_(std::move(ctx)), rank_l_(rank_l), anchor_(std::move(anchor)),
      brackets_(std::move(brackets)) {
    if (rank_l_ < 1)
        throw InputError("LiePresentation: rank must be >= 1");
    if (static_cast<int>(anchor_.size()) != rank_l_)
        throw InputError("LiePresentation: anchor must have one row per generator");
    for (const auto& row : anchor_)
        if (static_cast<int>(row.size()) != ctx_->num_vars())
            throw InputError("LiePresentation: anchor row length must equal variable count");
    for (const auto& [key, val] : brackets_) {
        auto [i, j] = key;
        if (!(0 <= i && i < j && j < rank_l_))
            throw InputError("LiePresentation: bracket key must satisfy 0 <= i < j < l");
        if (static_cast<int>(val.size()) != rank_l_)
            throw InputError("LiePresentation: bracket value must have l coefficients");
    }
    detect_grading();
}

std::shared_ptr<const LiePresentation> LiePresentation::torus(int n) {
    if (n < 1)
        throw InputError("torus: n must be >= 1");
    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i)
        vars.push_back({n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1), true});
    Context ctx = RingContext::make(std::move(vars));
    // theta_i = x_i d/dx_i keeps every multidegree, so cohomology splits.
    std::vector<std::vector<LaurentPoly>> anchor(n, std::vector<LaurentPoly>(n, LaurentPoly(ctx)));
    for (int i = 0; i < n; ++i)
        anchor[i][i] = LaurentPoly::variable(ctx, i);
    return std::make_shared<const LiePresentation>(ctx, n, std::move(anchor),
                                                   std::map<std::pair<int, int>, LElement>{});
}

std::shared_ptr<const LiePresentation> LiePresentation::affine(int n) {
    if (n < 1)
        throw InputError("affine: n must be >= 1");
    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i)
        vars.push_back({n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1), false});
    Context ctx = RingContext::make(std::move(vars));
    std::vector<std::vector<LaurentPoly>> anchor(n, std::vector<LaurentPoly>(n, LaurentPoly(ctx)));
    for (int i = 0; i < n; ++i)
        anchor[i][i] = LaurentPoly::constant(ctx, Rational(1));
    return std::make_shared<const LiePresentation>(ctx, n, std::move(anchor),
                                                   std::map<std::pair<int, int>, LElement>{});
}

std::shared_ptr<const LiePresentation> LiePresentation::point_abelian(int l) {
    if (l < 1)
        throw InputError("point_abelian: l must be >= 1");
    Context ctx = RingContext::make({});
    std::vector<std::vector<LaurentPoly>> anchor(l);
    return std::make_shared<const LiePresentation>(ctx, l, std::move(anchor),
                                                   std::map<std::pair<int, int>, LElement>{});
}

LElement LiePresentation::basis_element(int i) const {
    LElement v = zero_element();
    v.at(i) = LaurentPoly::constant(ctx_, Rational(1));
    return v;
}

LaurentPoly LiePresentation::anchor_basis_apply(int i, const LaurentPoly& a) const {
    LaurentPoly out(ctx_);
    for (int j = 0; j < ctx_->num_vars(); ++j) {
        if (anchor_[i][j].is_zero())
            continue;
        out += anchor_[i][j] * a.partial(j);
    }
    return out;
}

LaurentPoly LiePresentation::anchor_apply(const LElement& xi, const LaurentPoly& a) const {
    LaurentPoly out(ctx_);
    for (int i = 0; i < rank_l_; ++i) {
        if (xi[i].is_zero())
            continue;
        out += xi[i] * anchor_basis_apply(i, a);
    }
    return out;
}

LElement LiePresentation::bracket_basis(int i, int j) const {
    if (i == j)
        return zero_element();
    bool flip = i > j;
    auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end())
        return zero_element();
    LElement v = it->second;
    if (flip)
        for (auto& c : v)
            c = -c;
    return v;
}

LElement LiePresentation::bracket(const LElement& xi, const LElement& eta) const {
    LElement out = zero_element();
    // bilinear part over the basis brackets
    for (int i = 0; i < rank_l_; ++i) {
        if (xi[i].is_zero())
            continue;
        for (int j = 0; j < rank_l_; ++j) {
            if (eta[j].is_zero())
                continue;
            LElement b = bracket_basis(i, j);
            LaurentPoly c = xi[i] * eta[j];
            for (int k = 0; k < rank_l_; ++k)
                out[k] += c * b[k];
        }
    }
    // Leibniz corrections alpha(xi)(eta_k) - alpha(eta)(xi_k)
    for (int k = 0; k < rank_l_; ++k) {
        out[k] += anchor_apply(xi, eta[k]);
        out[k] -= anchor_apply(eta, xi[k]);
    }
    return out;
}

LElement LiePresentation::add(const LElement& a, const LElement& b) const {
    LElement out = a;
    for (int k = 0; k < rank_l_; ++k)
        out[k] += b[k];
    return out;
}

LElement LiePresentation::sub(const LElement& a, const LElement& b) const {
    LElement out = a;
    for (int k = 0; k < rank_l_; ++k)
        out[k] -= b[k];
    return out;
}

LElement LiePresentation::scale(const LaurentPoly& a, const LElement& v) const {
    LElement out = zero_element();
    for (int k = 0; k < rank_l_; ++k)
        out[k] = a * v[k];
    return out;
}

bool LiePresentation::is_zero(const LElement& v) const {
    for (const auto& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

AxiomReport LiePresentation::check_axioms(std::uint64_t seed) const {
    AxiomReport report;
    report.seed = seed;

    AxiomCheck jacobi{"jacobi", true, ""};
    for (int i = 0; i < rank_l_ && jacobi.passed; ++i)
        for (int j = i + 1; j < rank_l_ && jacobi.passed; ++j)
            for (int k = j + 1; k < rank_l_ && jacobi.passed; ++k) {
                LElement s = bracket(bracket_basis(i, j), basis_element(k));
                s = add(s, bracket(bracket_basis(j, k), basis_element(i)));
                s = add(s, bracket(bracket_basis(k, i), basis_element(j)));
                if (!is_zero(s)) {
                    jacobi.passed = false;
                    std::ostringstream os;
                    os << "jacobiator nonzero on basis triple (" << i + 1 << "," << j + 1 << ","
                       << k + 1 << ")";
                    jacobi.detail = os.str();
                }
            }
    report.checks.push_back(jacobi);

    // anchor is a Lie map: checked on every coordinate function, which
    // determines a derivation of a (Laurent) polynomial ring.
    AxiomCheck anchor_map{"anchor_lie_map", true, ""};
    for (int i = 0; i < rank_l_ && anchor_map.passed; ++i)
        for (int j = i + 1; j < rank_l_ && anchor_map.passed; ++j)
            for (int m = 0; m < ctx_->num_vars() && anchor_map.passed; ++m) {
                LaurentPoly xm = LaurentPoly::variable(ctx_, m);
                LaurentPoly lhs = anchor_basis_apply(i, anchor_basis_apply(j, xm)) -
                                  anchor_basis_apply(j, anchor_basis_apply(i, xm));
                LaurentPoly rhs = anchor_apply(bracket_basis(i, j), xm);
                if (lhs != rhs) {
                    anchor_map.passed = false;
                    std::ostringstream os;
                    os << "[alpha(e" << i + 1 << "),alpha(e" << j + 1 << ")] != alpha([e" << i + 1
                       << ",e" << j + 1 << "]) on " << ctx_->var(m).name;
                    anchor_map.detail = os.str();
                }
            }
    report.checks.push_back(anchor_map);

    AxiomCheck leibniz{"leibniz", true, ""};
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 8 && leibniz.passed; ++trial) {
        LaurentPoly a = random_poly(ctx_, rng);
        for (int i = 0; i < rank_l_ && leibniz.passed; ++i)
            for (int j = 0; j < rank_l_ && leibniz.passed; ++j) {
                LElement lhs = bracket(basis_element(i), scale(a, basis_element(j)));
                LElement rhs = scale(a, bracket_basis(i, j));
                rhs[j] += anchor_basis_apply(i, a);
                if (!is_zero(sub(lhs, rhs))) {
                    leibniz.passed = false;
                    std::ostringstream os;
                    os << "[e" << i + 1 << ", a e" << j + 1 << "] failed for a = " << a.str();
                    leibniz.detail = os.str();
                }
            }
    }
    report.checks.push_back(leibniz);
    return report;
}

void LiePresentation::detect_grading() {
    const int n = ctx_->num_vars();
    std::vector<Exponents> degs(rank_l_, Exponents(n, 0));
    for (int i = 0; i < rank_l_; ++i) {
        bool pinned = false;
        for (int j = 0; j < n; ++j)
            for (const auto& [e, c] : anchor_[i][j].terms()) {
                Exponents d(e);
                d[j] -= 1;  // x^e d/dx_j shifts multidegree by e - e_j
                if (!pinned) {
                    degs[i] = d;
                    pinned = true;
                } else if (degs[i] != d) {
                    return;  // inhomogeneous anchor row
                }
            }
    }
    for (const auto& [key, val] : brackets_) {
        auto [i, j] = key;
        for (int k = 0; k < rank_l_; ++k)
            for (const auto& [e, c] : val[k].terms()) {
                Exponents want(n);
                for (int m = 0; m < n; ++m)
                    want[m] = degs[i][m] + degs[j][m] - degs[k][m];
                if (e != want)
                    return;  // inhomogeneous structure function
            }
    }
    gen_degrees_ = std::move(degs);
}

const std::vector<Exponents>& LiePresentation::require_graded() const {
    if (!gen_degrees_)
        throw GradingError("presentation is not multidegree-homogeneous");
    return *gen_degrees_;
}

Presentation make_standard_algebra(const std::string& kind, int size) {
    if (kind == "torus")
        return LiePresentation::torus(size);
    if (kind == "affine")
        return LiePresentation::affine(size);
    if (kind == "point-abelian" || kind == "point_abelian")
        return LiePresentation::point_abelian(size);
    throw InputError("unknown builtin algebra '" + kind + "'");
}

LaurentPoly random_poly(const Context& ctx, std::mt19937_64& rng, int max_terms, int max_abs_exp,
                        long max_abs_num) {
    // Raw modulo keeps the stream identical across standard libraries.
    auto pick = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    LaurentPoly p(ctx);
    long nterms = pick(0, max_terms);
    for (long t = 0; t < nterms; ++t) {
        Exponents e(ctx->num_vars(), 0);
        for (int i = 0; i < ctx->num_vars(); ++i)
            e[i] = static_cast<int>(ctx->var(i).invertible ? pick(-max_abs_exp, max_abs_exp)
                                                           : pick(0, max_abs_exp));
        long num = pick(-max_abs_num, max_abs_num);
        long den = pick(1, 3);
        p.add_term(e, Rational(num, den));
    }
    return p;
}

}  // namespace lrw
