#include "lrw/linalg.hpp"

#include <utility>

namespace lrw {

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int c = 0; c < cols_; ++c)
                std::swap(at(p, c), at(row, c));
        Rational inv = at(row, col).inverse();
        for (int c = col; c < cols_; ++c)
            at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero())
                continue;
            Rational factor = at(r, col);
            for (int c = col; c < cols_; ++c)
                at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec])
            continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[freec] = Rational(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m.at(static_cast<int>(pr), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    QMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[static_cast<size_t>(r)];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == cols_)
            return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols_, Rational(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[pivots[pr]] = aug.at(static_cast<int>(pr), cols_);
    return x;
}

void RowSpan::reduce(std::vector<Rational>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero())
            continue;
        Rational factor = c;
        for (int j = 0; j < dim_; ++j)
            v[j] -= factor * rows_[i][j];
    }
}

bool RowSpan::insert(std::vector<Rational> v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0)
        return false;
    Rational inv = v[pivot].inverse();
    for (int j = 0; j < dim_; ++j)
        v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RowSpan::contains(std::vector<Rational> v) const {
    reduce(v);
    for (const Rational& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

}  // namespace lrw
