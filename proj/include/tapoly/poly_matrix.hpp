#pragma once

#include "tapoly/laurent.hpp"

namespace tapoly {

// Rectangular matrix of Laurent polynomials over a shared coefficient field.
class PolyMatrix {
public:
    PolyMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Laurent::zero()) {}

    static PolyMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Laurent& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Laurent& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    PolyMatrix operator+(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix operator*(const PolyMatrix& rhs) const;

    bool operator==(const PolyMatrix& rhs) const;

    // Exact determinant: cofactor expansion up to 4x4, fraction-free
    // Bareiss elimination beyond. det of the 0x0 matrix is 1.
    Laurent determinant() const;
    Laurent det_bareiss() const;
    Laurent det_cofactor() const;

private:
    size_t rows_, cols_;
    std::vector<Laurent> entries_;
};

}  // namespace tapoly
