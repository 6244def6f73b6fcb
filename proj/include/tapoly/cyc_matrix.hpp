#pragma once

#include "tapoly/cyclotomic.hpp"

namespace tapoly {

// Square matrix over a cyclotomic field; the carrier of representation
// images. Entries share the matrix order.
class CycMatrix {
public:
    CycMatrix() : n_(0), order_(1) {}
    CycMatrix(size_t n, unsigned order)
        : n_(n), order_(order), entries_(n * n, Cyclotomic::zero(order)) {}

    static CycMatrix identity(size_t n, unsigned order = 1);
    static CycMatrix diagonal(const std::vector<Cyclotomic>& diag);

    size_t dim() const { return n_; }
    unsigned order() const { return order_; }

    Cyclotomic& at(size_t r, size_t c) { return entries_[r * n_ + c]; }
    const Cyclotomic& at(size_t r, size_t c) const { return entries_[r * n_ + c]; }
    void set(size_t r, size_t c, const Cyclotomic& v);

    CycMatrix embedded(unsigned new_order) const;

    CycMatrix operator+(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix scaled(const Cyclotomic& c) const;

    bool operator==(const CycMatrix& rhs) const;
    bool is_identity() const;
    bool is_diagonal() const;

    Cyclotomic determinant() const;  // exact Gaussian elimination
    CycMatrix inverse() const;       // throws InvalidRepresentation if singular
    CycMatrix pow(long e) const;

    std::string str() const;

private:
    size_t n_;
    unsigned order_;
    std::vector<Cyclotomic> entries_;

    static unsigned align(CycMatrix& a, CycMatrix& b);
};

}  // namespace tapoly
