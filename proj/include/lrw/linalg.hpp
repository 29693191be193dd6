#pragma once

#include <optional>
#include <vector>

#include "lrw/rational.hpp"

namespace lrw {

/// Dense matrix over Q with exact Gaussian elimination.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<int> rref();

    int rank() const;

    /// Basis of the kernel, as columns stacked into vectors of length cols().
    std::vector<std::vector<Rational>> nullspace() const;

    /// One solution of A x = b, if consistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Incremental row space: tracks the span of inserted vectors.
class RowSpan {
  public:
    explicit RowSpan(int dim) : dim_(dim) {}

    /// Returns true (and absorbs v) when v enlarges the span.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    void reduce(std::vector<Rational>& v) const;

    int dim_;
    std::vector<std::vector<Rational>> rows_;  // echelonized
    std::vector<int> pivots_;
};

}  // namespace lrw
