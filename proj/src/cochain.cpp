#include "lrw/cochain.hpp"

#include <algorithm>

#include "lrw/util.hpp"

namespace lrw {

namespace {

bool strictly_increasing(const std::vector<int>& t) {
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] >= t[i])
            return false;
    return true;
}

void require_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree())
        throw InputError("Cochain: degree mismatch");
    if (a.presentation()->rank() != b.presentation()->rank() ||
        !a.presentation()->context()->same_as(*b.presentation()->context()))
        throw InputError("Cochain: presentation mismatch");
}

}  // namespace

Cochain::Cochain(Presentation pres, int degree) : pres_(std::move(pres)), degree_(degree) {
    if (degree_ < 0)
        throw InputError("Cochain: negative degree");
}

Cochain Cochain::scalar(Presentation pres, const Rational& c) {
    Cochain w(pres, 0);
    w.set_value({}, LaurentPoly::constant(pres->context(), c));
    return w;
}

void Cochain::set_value(const std::vector<int>& tuple, const LaurentPoly& v) {
    if (static_cast<int>(tuple.size()) != degree_)
        throw InputError("Cochain: tuple size must equal the degree");
    if (!strictly_increasing(tuple))
        throw InputError("Cochain: tuple must be strictly increasing");
    for (int i : tuple)
        if (i < 0 || i >= pres_->rank())
            throw InputError("Cochain: index out of range");
    if (v.is_zero())
        values_.erase(tuple);
    else
        values_[tuple] = v;
}

void Cochain::add_value(const std::vector<int>& tuple, const LaurentPoly& v) {
    LaurentPoly cur = value(tuple);
    cur += v;
    set_value(tuple, cur);
}

LaurentPoly Cochain::value(const std::vector<int>& tuple) const {
    auto it = values_.find(tuple);
    return it == values_.end() ? LaurentPoly(pres_->context()) : it->second;
}

LaurentPoly Cochain::value_signed(std::vector<int> indices) const {
    int sign = 1;
    // insertion sort, counting swaps; equal indices kill the value
    for (size_t i = 1; i < indices.size(); ++i)
        for (size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j])
                return LaurentPoly(pres_->context());
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    LaurentPoly v = value(indices);
    return sign == 1 ? v : -v;
}

Cochain Cochain::operator-() const {
    Cochain r(pres_, degree_);
    for (const auto& [t, v] : values_)
        r.values_.emplace(t, -v);
    return r;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    require_compatible(*this, o);
    for (const auto& [t, v] : o.values_)
        add_value(t, v);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    require_compatible(*this, o);
    for (const auto& [t, v] : o.values_)
        add_value(t, -v);
    return *this;
}

Cochain Cochain::scaled(const Rational& c) const {
    Cochain r(pres_, degree_);
    if (c.is_zero())
        return r;
    for (const auto& [t, v] : values_)
        r.values_.emplace(t, v.scaled(c));
    return r;
}

Cochain ce_differential(const Cochain& w) {
    const Presentation& pres = w.presentation();
    const int l = pres->rank();
    const int p = w.degree();
    Cochain out(pres, p + 1);
    if (p + 1 > l)
        return out;
    for (const auto& tuple : combinations(l, p + 1)) {
        LaurentPoly val(pres->context());
        for (int m = 0; m <= p; ++m) {
            std::vector<int> rest;
            rest.reserve(p);
            for (int r = 0; r <= p; ++r)
                if (r != m)
                    rest.push_back(tuple[r]);
            LaurentPoly term = pres->anchor_basis_apply(tuple[m], w.value(rest));
            val += (m % 2 == 0) ? term : -term;
        }
        for (int m = 0; m <= p; ++m)
            for (int m2 = m + 1; m2 <= p; ++m2) {
                LElement br = pres->bracket_basis(tuple[m], tuple[m2]);
                if (pres->is_zero(br))
                    continue;
                std::vector<int> rest;
                rest.reserve(p);
                for (int r = 0; r <= p; ++r)
                    if (r != m && r != m2)
                        rest.push_back(tuple[r]);
                LaurentPoly term(pres->context());
                for (int k = 0; k < l; ++k) {
                    if (br[k].is_zero())
                        continue;
                    std::vector<int> args;
                    args.reserve(p);
                    args.push_back(k);
                    args.insert(args.end(), rest.begin(), rest.end());
                    term += br[k] * w.value_signed(args);
                }
                val += ((m + m2) % 2 == 0) ? term : -term;
            }
        out.set_value(tuple, val);
    }
    return out;
}

bool is_cocycle(const Cochain& w) { return ce_differential(w).is_zero(); }

Cochain wedge(const Cochain& a, const Cochain& b) {
    require_compatible(a, a);
    const Presentation& pres = a.presentation();
    const int l = pres->rank();
    const int p = a.degree(), q = b.degree();
    Cochain out(pres, p + q);
    if (p + q > l || a.is_zero() || b.is_zero())
        return out;
    auto splits = combinations(p + q, p);
    for (const auto& tuple : combinations(l, p + q)) {
        LaurentPoly val(pres->context());
        for (const auto& sel : splits) {
            std::vector<bool> in_sel(p + q, false);
            for (int s : sel)
                in_sel[s] = true;
            std::vector<int> left, right;
            left.reserve(p);
            right.reserve(q);
            int inversions = 0;
            int seen_unselected = 0;
            for (int pos = 0; pos < p + q; ++pos) {
                if (in_sel[pos]) {
                    left.push_back(tuple[pos]);
                    inversions += seen_unselected;
                } else {
                    right.push_back(tuple[pos]);
                    ++seen_unselected;
                }
            }
            LaurentPoly term = a.value(left) * b.value(right);
            val += (inversions % 2 == 0) ? term : -term;
        }
        out.set_value(tuple, val);
    }
    return out;
}

Cochain random_cochain(const Presentation& pres, int degree, std::mt19937_64& rng) {
    Cochain w(pres, degree);
    for (const auto& tuple : combinations(pres->rank(), degree))
        w.set_value(tuple, random_poly(pres->context(), rng));
    return w;
}

EvenClassPolynomial::EvenClassPolynomial(Presentation pres) : pres_(std::move(pres)) {
    int half = pres_->rank() / 2;
    for (int m = 0; m <= half; ++m)
        comps_.emplace_back(pres_, 2 * m);
}

bool EvenClassPolynomial::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero())
            return false;
    return true;
}

EvenClassPolynomial& EvenClassPolynomial::operator+=(const EvenClassPolynomial& o) {
    for (int m = 0; m < num_components(); ++m)
        comps_[m] += o.comps_.at(m);
    return *this;
}

EvenClassPolynomial& EvenClassPolynomial::operator-=(const EvenClassPolynomial& o) {
    for (int m = 0; m < num_components(); ++m)
        comps_[m] -= o.comps_.at(m);
    return *this;
}

EvenClassPolynomial EvenClassPolynomial::scaled(const Rational& c) const {
    EvenClassPolynomial r(pres_);
    for (int m = 0; m < num_components(); ++m)
        r.comps_[m] = comps_[m].scaled(c);
    return r;
}

EvenClassPolynomial operator*(const EvenClassPolynomial& a, const EvenClassPolynomial& b) {
    EvenClassPolynomial r(a.pres_);
    for (int m = 0; m < r.num_components(); ++m)
        for (int u = 0; u <= m; ++u)
            r.comps_[m] += wedge(a.comps_.at(u), b.comps_.at(m - u));
    return r;
}

EvenClassPolynomial EvenClassPolynomial::unit(Presentation pres) {
    EvenClassPolynomial r(std::move(pres));
    r.comps_[0] = Cochain::scalar(r.pres_, Rational(1));
    return r;
}

EvenClassPolynomial exp_class(const Cochain& x) {
    if (x.degree() != 2)
        throw PreconditionError("exp_class: argument must have degree 2");
    if (!is_cocycle(x))
        throw PreconditionError("exp_class: argument is not a cocycle");
    EvenClassPolynomial out = EvenClassPolynomial::unit(x.presentation());
    Cochain power = Cochain::scalar(x.presentation(), Rational(1));
    Rational fact(1);
    for (int m = 1; m < out.num_components(); ++m) {
        power = wedge(power, x);
        fact *= Rational(m);
        out.component(m) = power.scaled(fact.inverse());
    }
    return out;
}

std::map<Exponents, Cochain> weight_decompose(const Cochain& w) {
    const Presentation& pres = w.presentation();
    const auto& degs = pres->require_graded();
    const int n = pres->context()->num_vars();
    std::map<Exponents, Cochain> out;
    for (const auto& [tuple, poly] : w.values()) {
        Exponents shift(n, 0);
        for (int i : tuple)
            for (int m = 0; m < n; ++m)
                shift[m] += degs[i][m];
        for (const auto& [e, c] : poly.terms()) {
            Exponents weight(n);
            for (int m = 0; m < n; ++m)
                weight[m] = e[m] - shift[m];
            auto it = out.find(weight);
            if (it == out.end())
                it = out.emplace(weight, Cochain(pres, w.degree())).first;
            it->second.add_value(tuple, LaurentPoly(pres->context(), e, c));
        }
    }
    return out;
}

namespace {

// Exponent vector of the C^p_w basis slot for a tuple: w + sum of generator degrees.
Exponents slot_exponents(const Exponents& w, const std::vector<int>& tuple,
                         const std::vector<Exponents>& degs, int n) {
    Exponents e(w);
    for (int i : tuple)
        for (int m = 0; m < n; ++m)
            e[m] += degs[i][m];
    return e;
}

bool valid_exponents(const Context& ctx, const Exponents& e) {
    for (int m = 0; m < ctx->num_vars(); ++m)
        if (e[m] < 0 && !ctx->var(m).invertible)
            return false;
    return true;
}

std::vector<std::vector<int>> weight_tuple_basis(const Presentation& pres,
                                                 const std::vector<Exponents>& degs, int p,
                                                 const Exponents& w) {
    std::vector<std::vector<int>> basis;
    const int n = pres->context()->num_vars();
    for (const auto& tuple : combinations(pres->rank(), p))
        if (valid_exponents(pres->context(), slot_exponents(w, tuple, degs, n)))
            basis.push_back(tuple);
    return basis;
}

Cochain basis_cochain(const Presentation& pres, const std::vector<Exponents>& degs, int p,
                      const Exponents& w, const std::vector<int>& tuple) {
    Cochain c(pres, p);
    const int n = pres->context()->num_vars();
    c.set_value(tuple, LaurentPoly(pres->context(), slot_exponents(w, tuple, degs, n), Rational(1)));
    return c;
}

// Matrix of the differential C^p_w -> C^{p+1}_w in the given tuple bases.
QMatrix weight_diff_matrix(const Presentation& pres, const std::vector<Exponents>& degs, int p,
                           const Exponents& w, const std::vector<std::vector<int>>& dom,
                           const std::vector<std::vector<int>>& cod) {
    const int n = pres->context()->num_vars();
    QMatrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t c = 0; c < dom.size(); ++c) {
        Cochain d = ce_differential(basis_cochain(pres, degs, p, w, dom[c]));
        for (size_t r = 0; r < cod.size(); ++r) {
            Exponents e = slot_exponents(w, cod[r], degs, n);
            const LaurentPoly v = d.value(cod[r]);
            auto it = v.terms().find(e);
            if (it != v.terms().end())
                m.at(static_cast<int>(r), static_cast<int>(c)) = it->second;
        }
    }
    return m;
}

std::vector<Rational> cochain_weight_coords(const Cochain& piece, const Exponents& w,
                                            const std::vector<Exponents>& degs,
                                            const std::vector<std::vector<int>>& basis) {
    const Presentation& pres = piece.presentation();
    const int n = pres->context()->num_vars();
    std::vector<Rational> v(basis.size(), Rational(0));
    for (size_t r = 0; r < basis.size(); ++r) {
        Exponents e = slot_exponents(w, basis[r], degs, n);
        const LaurentPoly val = piece.value(basis[r]);
        auto it = val.terms().find(e);
        if (it != val.terms().end())
            v[r] = it->second;
    }
    return v;
}

WeightCohomology weight_cohomology(const Presentation& pres, const std::vector<Exponents>& degs,
                                   int p, const Exponents& w) {
    WeightCohomology out;
    out.weight = w;
    out.tuple_basis = weight_tuple_basis(pres, degs, p, w);
    const int dim_p = static_cast<int>(out.tuple_basis.size());
    if (dim_p == 0)
        return out;

    auto dom_prev = p > 0 ? weight_tuple_basis(pres, degs, p - 1, w)
                          : std::vector<std::vector<int>>{};
    QMatrix d_prev = weight_diff_matrix(pres, degs, p - 1, w, dom_prev, out.tuple_basis);
    auto cod_next = weight_tuple_basis(pres, degs, p + 1, w);
    QMatrix d_this = weight_diff_matrix(pres, degs, p, w, out.tuple_basis, cod_next);

    RowSpan span(dim_p);
    std::vector<std::vector<Rational>> image_cols;
    for (int c = 0; c < d_prev.cols(); ++c) {
        std::vector<Rational> col(dim_p);
        for (int r = 0; r < dim_p; ++r)
            col[static_cast<size_t>(r)] = d_prev.at(r, c);
        if (span.insert(col))
            image_cols.push_back(col);
    }
    std::vector<std::vector<Rational>> rep_vectors;
    for (const auto& kv : d_this.nullspace())
        if (span.insert(kv))
            rep_vectors.push_back(kv);

    out.dimension = static_cast<int>(rep_vectors.size());
    out.num_image_cols = static_cast<int>(image_cols.size());
    out.im_and_reps = QMatrix(dim_p, out.num_image_cols + out.dimension);
    for (int c = 0; c < out.num_image_cols; ++c)
        for (int r = 0; r < dim_p; ++r)
            out.im_and_reps.at(r, c) = image_cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    for (size_t k = 0; k < rep_vectors.size(); ++k) {
        Cochain rep(pres, p);
        for (int r = 0; r < dim_p; ++r) {
            const Rational& coeff = rep_vectors[k][static_cast<size_t>(r)];
            out.im_and_reps.at(r, out.num_image_cols + static_cast<int>(k)) = coeff;
            if (!coeff.is_zero()) {
                const int n = pres->context()->num_vars();
                Exponents e = slot_exponents(w, out.tuple_basis[static_cast<size_t>(r)], degs, n);
                rep.add_value(out.tuple_basis[static_cast<size_t>(r)],
                              LaurentPoly(pres->context(), e, coeff));
            }
        }
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

std::vector<Exponents> box_weights(int n, int D) {
    std::vector<Exponents> out;
    Exponents w(n, -D);
    if (n == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == D)
            --i;
        if (i < 0)
            break;
        ++w[i];
        for (int j = i + 1; j < n; ++j)
            w[j] = -D;
    }
    return out;
}

}  // namespace

CohomologyWindow cohomology_window(const Presentation& pres, int p, int D) {
    if (p < 0)
        throw InputError("cohomology_window: negative degree");
    if (D < 0)
        throw InputError("cohomology_window: negative window bound");
    const auto& degs = pres->require_graded();
    CohomologyWindow out;
    out.p = p;
    out.D = D;
    if (p > pres->rank())
        return out;
    std::vector<Exponents> weights = box_weights(pres->context()->num_vars(), D);
    std::vector<WeightCohomology> results(weights.size());
    parallel_for(weights.size(), [&](std::size_t i) {
        results[i] = weight_cohomology(pres, degs, p, weights[i]);
    });
    for (auto& wc : results) {
        if (wc.tuple_basis.empty())
            continue;
        out.dimension += wc.dimension;
        for (const auto& rep : wc.representatives)
            out.representatives.push_back(rep);
        out.weights.push_back(std::move(wc));
    }
    return out;
}

std::optional<std::vector<Rational>> CohomologyWindow::coordinates(const Cochain& z) const {
    if (z.degree() != p)
        throw InputError("coordinates: degree mismatch");
    std::vector<Rational> coords(dimension, Rational(0));
    if (z.is_zero())
        return coords;
    const auto& degs = z.presentation()->require_graded();
    auto pieces = weight_decompose(z);
    for (const auto& [w, piece] : pieces) {
        const WeightCohomology* wc = nullptr;
        int offset = 0;
        for (const auto& cand : weights) {
            if (cand.weight == w) {
                wc = &cand;
                break;
            }
            offset += cand.dimension;
        }
        if (!wc)
            return std::nullopt;  // weight outside the window
        std::vector<Rational> v =
            cochain_weight_coords(piece, w, degs, wc->tuple_basis);
        auto sol = wc->im_and_reps.solve(v);
        if (!sol)
            return std::nullopt;  // not a cocycle piece
        for (int k = 0; k < wc->dimension; ++k)
            coords[offset + k] = (*sol)[static_cast<size_t>(wc->num_image_cols + k)];
    }
    return coords;
}

bool class_is_zero(const Cochain& a) {
    if (a.is_zero())
        return true;
    const Presentation& pres = a.presentation();
    const auto& degs = pres->require_graded();
    const int p = a.degree();
    for (const auto& [w, piece] : weight_decompose(a)) {
        auto basis_p = weight_tuple_basis(pres, degs, p, w);
        std::vector<Rational> v = cochain_weight_coords(piece, w, degs, basis_p);
        if (p == 0) {
            for (const auto& c : v)
                if (!c.is_zero())
                    return false;
            continue;
        }
        auto basis_prev = weight_tuple_basis(pres, degs, p - 1, w);
        QMatrix d_prev = weight_diff_matrix(pres, degs, p - 1, w, basis_prev, basis_p);
        if (!d_prev.solve(v))
            return false;
    }
    return true;
}

bool class_equal(const Cochain& a, const Cochain& b) { return class_is_zero(a - b); }

CharRingResult char_ring_dim(const Presentation& pres, const std::vector<Cochain>& basis, int D) {
    CharRingResult result;
    for (const auto& x : basis) {
        if (x.degree() != 2)
            throw PreconditionError("char_ring_dim: inputs must have degree 2");
        if (!is_cocycle(x))
            throw PreconditionError("char_ring_dim: inputs must be cocycles");
    }
    const int half = pres->rank() / 2;
    std::vector<CohomologyWindow> windows;
    for (int m = 0; m <= half; ++m)
        windows.push_back(cohomology_window(pres, 2 * m, D));
    result.h2_dimension = pres->rank() >= 2 ? windows[1].dimension : 0;

    // independence of the inputs inside H^2
    if (pres->rank() >= 2) {
        RowSpan h2span(windows[1].dimension);
        for (const auto& x : basis) {
            auto coords = windows[1].coordinates(x);
            if (!coords)
                throw GradingError("char_ring_dim: class not representable in window D");
            if (!h2span.insert(*coords))
                result.inputs_independent = false;
        }
    }

    int total = 0;
    for (const auto& wnd : windows)
        total += wnd.dimension;
    RowSpan span(total);
    for (const auto& x : basis) {
        EvenClassPolynomial e = exp_class(x);
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(total));
        for (int m = 0; m <= half; ++m) {
            auto coords = windows[static_cast<size_t>(m)].coordinates(e.component(m));
            if (!coords)
                throw GradingError("char_ring_dim: exp component not representable in window D");
            v.insert(v.end(), coords->begin(), coords->end());
        }
        span.insert(std::move(v));
    }
    result.dimension = span.rank();
    return result;
}

}  // namespace lrw
