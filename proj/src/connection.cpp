#include "lrw/connection.hpp"

#include <stdexcept>

#include "lrw/util.hpp"

namespace lrw {

PolyMatrix PolyMatrix::identity(Context ctx, int n) {
    PolyMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = LaurentPoly::constant(m.ctx_, Rational(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero())
            return false;
    return true;
}

LaurentPoly PolyMatrix::trace() const {
    LaurentPoly t(ctx_);
    for (int i = 0; i < rows_ && i < cols_; ++i)
        t += at(i, i);
    return t;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = -a_[i];
    return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("PolyMatrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("PolyMatrix: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
        throw InputError("PolyMatrix: product shape mismatch");
    PolyMatrix r(a.ctx_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero())
                    continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& c) const {
    PolyMatrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] * c;
    return r;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.ctx_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero())
                continue;
            for (int u = 0; u < b.rows_; ++u)
                for (int v = 0; v < b.cols_; ++v)
                    r.at(i * b.rows_ + u, j * b.cols_ + v) = a.at(i, j) * b.at(u, v);
        }
    return r;
}

PolyMatrix anchor_apply_matrix(const Presentation& pres, int i, const PolyMatrix& m) {
    PolyMatrix r(pres->context(), m.rows(), m.cols());
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b)
            r.at(a, b) = pres->anchor_basis_apply(i, m.at(a, b));
    return r;
}

Connection::Connection(Presentation p, int r) : pres(std::move(p)), rank(r) {
    if (rank < 1)
        throw InputError("Connection: rank must be >= 1");
    omega.assign(pres->rank(), PolyMatrix(pres->context(), rank, rank));
}

std::vector<LaurentPoly> Connection::apply(int i, const std::vector<LaurentPoly>& v) const {
    std::vector<LaurentPoly> out(rank, LaurentPoly(pres->context()));
    for (int r = 0; r < rank; ++r) {
        out[r] = pres->anchor_basis_apply(i, v[r]);
        for (int c = 0; c < rank; ++c)
            if (!omega[i].at(r, c).is_zero())
                out[r] += omega[i].at(r, c) * v[c];
    }
    return out;
}

bool CurvatureForm::is_zero() const {
    for (const auto& [key, m] : value)
        if (!m.is_zero())
            return false;
    return true;
}

CurvatureForm curvature(const Connection& conn) {
    const Presentation& pres = conn.pres;
    CurvatureForm R;
    R.pres = pres;
    R.rank = conn.rank;
    const int l = pres->rank();
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            PolyMatrix m = anchor_apply_matrix(pres, i, conn.omega[j]);
            m -= anchor_apply_matrix(pres, j, conn.omega[i]);
            m += conn.omega[i] * conn.omega[j];
            m -= conn.omega[j] * conn.omega[i];
            LElement br = pres->bracket_basis(i, j);
            for (int k = 0; k < l; ++k)
                if (!br[k].is_zero())
                    m -= conn.omega[k].scaled(br[k]);
            R.value.emplace(std::make_pair(i, j), std::move(m));
        }
    return R;
}

CurvatureTypeResult is_curvature_type(const Connection& conn, const Cochain& f) {
    if (f.degree() != 2)
        throw InputError("is_curvature_type: f must have degree 2");
    CurvatureTypeResult result;
    result.deviation = curvature(conn);
    for (auto& [key, m] : result.deviation.value) {
        LaurentPoly fv = f.value({key.first, key.second});
        if (!fv.is_zero())
            m -= PolyMatrix::identity(conn.pres->context(), conn.rank).scaled(fv);
    }
    result.matches = result.deviation.is_zero();
    return result;
}

Cochain trace_curvature(const Connection& conn) {
    CurvatureForm R = curvature(conn);
    Cochain t(conn.pres, 2);
    for (const auto& [key, m] : R.value)
        t.set_value({key.first, key.second}, m.trace());
    return t;
}

CohomologyClass c1(const Connection& conn) {
    Cochain t = trace_curvature(conn);
    if (!is_cocycle(t))
        throw std::logic_error("c1: curvature trace is not closed; presentation is inconsistent");
    return CohomologyClass{t, 1};
}

namespace {

/// Matrix-valued form; wedge combines splits with matrix multiplication.
using MatrixForm = std::map<std::vector<int>, PolyMatrix>;

MatrixForm wedge_matrix_forms(const Presentation& pres, int pa, const MatrixForm& a, int pb,
                              const MatrixForm& b, int rank) {
    MatrixForm out;
    const int l = pres->rank();
    if (pa + pb > l)
        return out;
    auto splits = combinations(pa + pb, pa);
    for (const auto& tuple : combinations(l, pa + pb)) {
        PolyMatrix acc(pres->context(), rank, rank);
        bool nonzero = false;
        for (const auto& sel : splits) {
            std::vector<bool> in_sel(pa + pb, false);
            for (int s : sel)
                in_sel[s] = true;
            std::vector<int> left, right;
            int inversions = 0, seen_unselected = 0;
            for (int pos = 0; pos < pa + pb; ++pos) {
                if (in_sel[pos]) {
                    left.push_back(tuple[pos]);
                    inversions += seen_unselected;
                } else {
                    right.push_back(tuple[pos]);
                    ++seen_unselected;
                }
            }
            auto ita = a.find(left);
            auto itb = b.find(right);
            if (ita == a.end() || itb == b.end())
                continue;
            PolyMatrix term = ita->second * itb->second;
            if (inversions % 2 != 0)
                term = -term;
            acc += term;
            nonzero = true;
        }
        if (nonzero && !acc.is_zero())
            out.emplace(tuple, std::move(acc));
    }
    return out;
}

}  // namespace

EvenClassPolynomial chern_character(const Connection& conn) {
    const Presentation& pres = conn.pres;
    EvenClassPolynomial ch(pres);
    ch.component(0) = Cochain::scalar(pres, Rational(conn.rank));

    CurvatureForm R = curvature(conn);
    MatrixForm rform;
    for (const auto& [key, m] : R.value)
        rform.emplace(std::vector<int>{key.first, key.second}, m);

    MatrixForm power;  // R^m, starting at m = 1
    Rational fact(1);
    for (int m = 1; m < ch.num_components(); ++m) {
        power = (m == 1) ? rform : wedge_matrix_forms(pres, 2 * (m - 1), power, 2, rform, conn.rank);
        fact *= Rational(m);
        Cochain comp(pres, 2 * m);
        for (const auto& [tuple, mat] : power)
            comp.set_value(tuple, mat.trace().scaled(fact.inverse()));
        ch.component(m) = comp;
    }
    return ch;
}

Connection tensor_conn(const Connection& a, const Connection& b) {
    if (a.pres != b.pres && !(a.pres->rank() == b.pres->rank() &&
                              a.pres->context()->same_as(*b.pres->context())))
        throw InputError("tensor_conn: presentations differ");
    Connection t(a.pres, a.rank * b.rank);
    PolyMatrix ia = PolyMatrix::identity(a.pres->context(), a.rank);
    PolyMatrix ib = PolyMatrix::identity(a.pres->context(), b.rank);
    for (int i = 0; i < a.pres->rank(); ++i)
        t.omega[i] = PolyMatrix::kronecker(a.omega[i], ib) + PolyMatrix::kronecker(ia, b.omega[i]);
    return t;
}

Connection wedge_power_conn(const Connection& conn, int d) {
    if (d < 1 || d > conn.rank)
        throw InputError("wedge_power_conn: need 1 <= d <= rank");
    const Presentation& pres = conn.pres;
    auto subsets = combinations(conn.rank, d);
    std::map<std::vector<int>, int> index_of;
    for (size_t s = 0; s < subsets.size(); ++s)
        index_of.emplace(subsets[s], static_cast<int>(s));

    Connection w(pres, static_cast<int>(subsets.size()));
    for (int dir = 0; dir < pres->rank(); ++dir) {
        const PolyMatrix& om = conn.omega[dir];
        PolyMatrix& target = w.omega[dir];
        for (size_t s = 0; s < subsets.size(); ++s) {
            const auto& S = subsets[s];
            // derivation rule: replace the m-th factor by om(e_t)
            for (int m = 0; m < d; ++m)
                for (int t = 0; t < conn.rank; ++t) {
                    const LaurentPoly& entry = om.at(t, S[m]);
                    if (entry.is_zero())
                        continue;
                    std::vector<int> repl(S);
                    repl[m] = t;
                    // sort with sign; repeated factor wedges to zero
                    int sign = 1;
                    bool zero = false;
                    for (size_t u = 1; u < repl.size() && !zero; ++u)
                        for (size_t v = u; v > 0 && repl[v - 1] >= repl[v]; --v) {
                            if (repl[v - 1] == repl[v]) {
                                zero = true;
                                break;
                            }
                            std::swap(repl[v - 1], repl[v]);
                            sign = -sign;
                        }
                    if (zero)
                        continue;
                    int row = index_of.at(repl);
                    target.at(row, static_cast<int>(s)) +=
                        sign == 1 ? entry : -entry;
                }
        }
    }
    return w;
}

Connection scalar_type_connection(const Presentation& pres, int rank, const Cochain& one_form) {
    if (one_form.degree() != 1)
        throw InputError("scalar_type_connection: a 1-form is required");
    Connection conn(pres, rank);
    for (int i = 0; i < pres->rank(); ++i)
        conn.omega[i] = PolyMatrix::identity(pres->context(), rank).scaled(one_form.value({i}));
    return conn;
}

}  // namespace lrw
