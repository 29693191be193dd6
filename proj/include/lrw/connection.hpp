#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lrw/cochain.hpp"

namespace lrw {

/// Dense matrix over the base ring A.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(Context ctx, int rows, int cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, LaurentPoly(ctx_)) {}

    static PolyMatrix identity(Context ctx, int n);

    const Context& context() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int r, int c) { return a_[r * cols_ + c]; }
    const LaurentPoly& at(int r, int c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    LaurentPoly trace() const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix scaled(const LaurentPoly& c) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

  private:
    Context ctx_;
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> a_;
};

/// alpha(e_i) applied entrywise.
PolyMatrix anchor_apply_matrix(const Presentation& pres, int i, const PolyMatrix& m);

/// Connection on a free module of rank r: nabla(e_i) acts on coordinate
/// vectors as alpha(e_i) entrywise plus multiplication by omega[i].
struct Connection {
    Presentation pres;
    int rank = 1;
    std::vector<PolyMatrix> omega;  // one r x r matrix per basis direction

    Connection() = default;
    Connection(Presentation p, int r);

    /// nabla(e_i)(v) for a coordinate vector v.
    std::vector<LaurentPoly> apply(int i, const std::vector<LaurentPoly>& v) const;
};

/// Matrix-valued 2-form on sorted basis pairs.
struct CurvatureForm {
    Presentation pres;
    int rank = 1;
    std::map<std::pair<int, int>, PolyMatrix> value;  // keys i < j

    const PolyMatrix& at(int i, int j) const { return value.at({i, j}); }
    bool is_zero() const;
};

/// R(e_i,e_j) = alpha_i(Om_j) - alpha_j(Om_i) + [Om_i,Om_j] - sum_k c_ij^k Om_k
CurvatureForm curvature(const Connection& conn);

struct CurvatureTypeResult {
    bool matches = false;
    CurvatureForm deviation;  // R - f*Id
};

CurvatureTypeResult is_curvature_type(const Connection& conn, const Cochain& f);

/// (i,j) -> tr R(e_i,e_j)
Cochain trace_curvature(const Connection& conn);

/// Class of the curvature trace; the trace of a valid connection's curvature
/// is always closed, so a non-cocycle trace signals a broken presentation.
CohomologyClass c1(const Connection& conn);

/// Sum_m tr(R^m)/m! in the truncated even ring; degree-0 component is the rank.
EvenClassPolynomial chern_character(const Connection& conn);

/// Kronecker-sum connection on the tensor product module.
Connection tensor_conn(const Connection& a, const Connection& b);

/// Induced connection on the d-th exterior power (basis: sorted d-subsets).
Connection wedge_power_conn(const Connection& conn, int d);

/// Scalar-type connection Om_i = w(e_i)*Id from a 1-form; curvature is d(w)*Id.
Connection scalar_type_connection(const Presentation& pres, int rank, const Cochain& one_form);

}  // namespace lrw
