#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tapoly/rational.hpp"

namespace tapoly {

// Dense integer polynomial, coeffs[k] = coefficient of x^k. Leading zeros
// trimmed; the zero polynomial is the empty vector.
using IntPoly = std::vector<Int>;

// The q-th cyclotomic polynomial Phi_q, computed exactly by the recursion
// Phi_q(x) = (x^q - 1) / prod_{d | q, d < q} Phi_d(x).
IntPoly cyclotomic_polynomial(unsigned q);

// An element of the cyclotomic field Q(zeta_q), stored as a coefficient
// vector of length deg Phi_q = phi(q) in the power basis
// {1, zeta, ..., zeta^{phi(q)-1}}, always reduced modulo Phi_q.
// Immutable after construction; all operations are pure.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}  // zero of Q(zeta_1) = Q

    static Cyclotomic zero(unsigned q);
    static Cyclotomic one(unsigned q = 1);
    static Cyclotomic rational(const Rational& r, unsigned q = 1);
    static Cyclotomic integer(long v, unsigned q = 1);
    // zeta_q^power (power taken mod q)
    static Cyclotomic zeta(unsigned q, long power = 1);
    // Reduces an arbitrary-length coefficient vector mod Phi_q.
    static Cyclotomic from_coeffs(unsigned q, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the reduced form has zero coefficients on all basis powers
    // zeta^k, k >= 1 (e.g. zeta_3 + zeta_3^2 reduces to -1 and is rational).
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    // The same element viewed in Q(zeta_new_order); requires order | new_order.
    Cyclotomic embedded(unsigned new_order) const;
    // Inverse of embedded: expresses the element in Q(zeta_new_order) when it
    // lies in that subfield, nullopt otherwise. Requires new_order | order.
    std::optional<Cyclotomic> projected(unsigned new_order) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic inverse() const;  // throws Error on zero
    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    // Smallest d >= 1 with (*this)^d == 1, or 0 if not a root of unity.
    unsigned multiplicative_order() const;

    // Principal embedding zeta_q -> exp(2*pi*i/q).
    std::complex<double> to_complex() const;

    std::string str() const;

private:
    Cyclotomic(unsigned q, std::vector<Rational> reduced)
        : order_(q), coeffs_(std::move(reduced)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;
};

// 1 + b + ... + b^k.
Cyclotomic delta_sum(unsigned k, const Cyclotomic& b);

// Embeds both operands into Q(zeta_lcm) and returns the common order.
unsigned align(Cyclotomic& a, Cyclotomic& b);

}  // namespace tapoly
