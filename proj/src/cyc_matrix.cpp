#include "tapoly/cyc_matrix.hpp"

#include <numeric>
#include <sstream>

#include "tapoly/errors.hpp"

namespace tapoly {

CycMatrix CycMatrix::identity(size_t n, unsigned order) {
    CycMatrix m(n, order);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic>& diag) {
    unsigned q = 1;
    for (const auto& d : diag) q = std::lcm(q, d.order());
    CycMatrix m(diag.size(), q);
    for (size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i].embedded(q);
    return m;
}

void CycMatrix::set(size_t r, size_t c, const Cyclotomic& v) {
    if (v.order() == order_) {
        at(r, c) = v;
        return;
    }
    unsigned q = std::lcm(order_, v.order());
    if (q != order_) *this = embedded(q);
    at(r, c) = v.embedded(q);
}

CycMatrix CycMatrix::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    CycMatrix m(n_, new_order);
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].embedded(new_order);
    return m;
}

unsigned CycMatrix::align(CycMatrix& a, CycMatrix& b) {
    unsigned q = std::lcm(a.order_, b.order_);
    if (a.order_ != q) a = a.embedded(q);
    if (b.order_ != q) b = b.embedded(q);
    return q;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    if (n_ != rhs.n_) throw Error("matrix dimension mismatch in +");
    CycMatrix a = *this, b = rhs;
    align(a, b);
    for (size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] = a.entries_[i] + b.entries_[i];
    return a;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    if (n_ != rhs.n_) throw Error("matrix dimension mismatch in -");
    CycMatrix a = *this, b = rhs;
    align(a, b);
    for (size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] = a.entries_[i] - b.entries_[i];
    return a;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (n_ != rhs.n_) throw Error("matrix dimension mismatch in *");
    CycMatrix a = *this, b = rhs;
    unsigned q = align(a, b);
    CycMatrix out(n_, q);
    for (size_t i = 0; i < n_; ++i)
        for (size_t k = 0; k < n_; ++k) {
            const Cyclotomic& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + f * b.at(k, j);
            }
        }
    return out;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
    CycMatrix out = *this;
    unsigned q = std::lcm(order_, c.order());
    if (q != order_) out = out.embedded(q);
    Cyclotomic f = c.embedded(q);
    for (auto& e : out.entries_) e = e * f;
    return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (n_ != rhs.n_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != rhs.entries_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_diagonal() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

Cyclotomic CycMatrix::determinant() const {
    if (n_ == 0) return Cyclotomic::one(order_);
    std::vector<Cyclotomic> m = entries_;
    auto e = [&](size_t r, size_t c) -> Cyclotomic& { return m[r * n_ + c]; };
    Cyclotomic det = Cyclotomic::one(order_);
    bool negate = false;
    for (size_t k = 0; k < n_; ++k) {
        size_t pr = k;
        while (pr < n_ && e(pr, k).is_zero()) ++pr;
        if (pr == n_) return Cyclotomic::zero(order_);
        if (pr != k) {
            for (size_t c = k; c < n_; ++c) std::swap(e(k, c), e(pr, c));
            negate = !negate;
        }
        det = det * e(k, k);
        Cyclotomic inv = e(k, k).inverse();
        for (size_t i = k + 1; i < n_; ++i) {
            if (e(i, k).is_zero()) continue;
            Cyclotomic f = e(i, k) * inv;
            for (size_t j = k; j < n_; ++j) e(i, j) = e(i, j) - f * e(k, j);
        }
    }
    return negate ? -det : det;
}

CycMatrix CycMatrix::inverse() const {
    std::vector<Cyclotomic> m = entries_;
    CycMatrix out = identity(n_, order_);
    auto e = [&](size_t r, size_t c) -> Cyclotomic& { return m[r * n_ + c]; };
    for (size_t k = 0; k < n_; ++k) {
        size_t pr = k;
        while (pr < n_ && e(pr, k).is_zero()) ++pr;
        if (pr == n_) throw InvalidRepresentation("matrix is singular, cannot invert");
        if (pr != k) {
            for (size_t c = 0; c < n_; ++c) {
                std::swap(e(k, c), e(pr, c));
                std::swap(out.at(k, c), out.at(pr, c));
            }
        }
        Cyclotomic inv = e(k, k).inverse();
        for (size_t c = 0; c < n_; ++c) {
            e(k, c) = e(k, c) * inv;
            out.at(k, c) = out.at(k, c) * inv;
        }
        for (size_t i = 0; i < n_; ++i) {
            if (i == k || e(i, k).is_zero()) continue;
            Cyclotomic f = e(i, k);
            for (size_t c = 0; c < n_; ++c) {
                e(i, c) = e(i, c) - f * e(k, c);
                out.at(i, c) = out.at(i, c) - f * out.at(k, c);
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::pow(long e) const {
    if (e == 0) return identity(n_, order_);
    CycMatrix base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    CycMatrix acc = identity(n_, base.order());
    while (n > 0) {
        if (n & 1ul) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string CycMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < n_; ++i) {
        out << (i ? "; " : "");
        for (size_t j = 0; j < n_; ++j) out << (j ? ", " : "") << at(i, j).str();
    }
    out << "]";
    return out.str();
}

}  // namespace tapoly
