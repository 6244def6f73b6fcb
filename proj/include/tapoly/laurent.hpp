#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tapoly/cyclotomic.hpp"

namespace tapoly {

// Exact univariate Laurent polynomial in t with coefficients in a shared
// cyclotomic field. Canonical support: coeffs() is empty (the zero
// polynomial, low_degree 0) or has nonzero first and last entries;
// coeffs()[k] is the coefficient of t^{low_degree()+k}.
class Laurent {
public:
    Laurent() = default;  // zero

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return constant(Cyclotomic::one()); }
    static Laurent constant(const Cyclotomic& a) { return monomial(a, 0); }
    static Laurent monomial(const Cyclotomic& a, long power);
    static Laurent t(long power = 1) { return monomial(Cyclotomic::one(), power); }
    // Trims to canonical support; coefficients are aligned to a common order.
    static Laurent from_coeffs(long low, std::vector<Cyclotomic> coeffs);
    static Laurent from_rationals(long low, const std::vector<Rational>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1 && low_ == 0; }
    long low_degree() const { return low_; }
    long high_degree() const;  // requires nonzero
    size_t term_span() const { return coeffs_.size(); }
    unsigned order() const { return order_; }
    const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
    // Coefficient of t^k (zero when outside the support).
    Cyclotomic coeff_at(long k) const;
    Cyclotomic leading_coeff() const;  // requires nonzero
    Cyclotomic trailing_coeff() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent scaled(const Cyclotomic& c) const;
    Laurent shifted(long k) const;  // * t^k
    Laurent pow(unsigned e) const;

    bool operator==(const Laurent& rhs) const;
    bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }

    // Exact division in the Laurent ring; returns false when rhs does not
    // divide *this evenly. Division by zero throws.
    static bool try_divide(const Laurent& a, const Laurent& b, Laurent& quotient);
    Laurent divided_by(const Laurent& b) const;  // throws if not exact

    // Monic-style gcd of the polynomial parts: result has low_degree 0 and
    // trailing coefficient 1 (gcd is only defined up to units c*t^k).
    static Laurent gcd(const Laurent& a, const Laurent& b);

    // Substitution t -> u*t (coefficient twist by powers of u).
    Laurent variable_scaled(const Cyclotomic& u) const;

    // Exact evaluation; t0 must be invertible when negative powers occur.
    Cyclotomic eval_exact(const Cyclotomic& t0) const;
    Cyclotomic eval_one() const;
    // Principal numeric embedding, coefficients converted last.
    std::complex<double> eval(const std::complex<double>& t0) const;

    std::string str(const std::string& var = "t") const;

private:
    long low_ = 0;
    unsigned order_ = 1;
    std::vector<Cyclotomic> coeffs_;

    void normalize();
    static unsigned align_orders(Laurent& a, Laurent& b);
};

}  // namespace tapoly
