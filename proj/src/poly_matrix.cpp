#include "tapoly/poly_matrix.hpp"

#include "tapoly/errors.hpp"

namespace tapoly {

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Laurent::one();
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in +");
    PolyMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in -");
    PolyMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix shape mismatch in *");
    PolyMatrix out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Laurent& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
            }
        }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == rhs.entries_[i])) return false;
    return true;
}

Laurent PolyMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    return rows_ <= 4 ? det_cofactor() : det_bareiss();
}

namespace {

Laurent cofactor_rec(const PolyMatrix& m, std::vector<size_t>& cols, size_t row) {
    const size_t n = cols.size();
    if (n == 0) return Laurent::one();
    if (n == 1) return m.at(row, cols[0]);
    Laurent acc;
    for (size_t k = 0; k < n; ++k) {
        const Laurent& pivot = m.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        size_t removed = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        Laurent sub = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), removed);
        Laurent term = pivot * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Laurent PolyMatrix::det_cofactor() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    std::vector<size_t> cols(cols_);
    for (size_t i = 0; i < cols_; ++i) cols[i] = i;
    return cofactor_rec(*this, cols, 0);
}

Laurent PolyMatrix::det_bareiss() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    const size_t n = rows_;
    if (n == 0) return Laurent::one();
    std::vector<Laurent> m = entries_;
    auto e = [&](size_t r, size_t c) -> Laurent& { return m[r * n + c]; };
    int sign = 1;
    Laurent prev = Laurent::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (e(k, k).is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && e(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Laurent::zero();  // whole column zero
            for (size_t c = k; c < n; ++c) std::swap(e(k, c), e(swap_row, c));
            sign = -sign;
        }
        const Laurent pivot = e(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Laurent num = e(i, j) * pivot - e(i, k) * e(k, j);
                e(i, j) = num.is_zero() ? Laurent::zero() : num.divided_by(prev);
            }
            e(i, k) = Laurent::zero();
        }
        prev = pivot;
    }
    Laurent det = e(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace tapoly
