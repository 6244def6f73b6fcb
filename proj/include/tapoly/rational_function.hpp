#pragma once

#include "tapoly/laurent.hpp"

namespace tapoly {

// Exact quotient of Laurent polynomials, kept gcd-reduced and with the
// denominator unit-normalized (low degree 0, trailing coefficient 1).
// The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(Laurent::zero()), den_(Laurent::one()) {}
    // Normalizes; throws on a zero denominator.
    RationalFunction(const Laurent& numerator, const Laurent& denominator);

    static RationalFunction from_laurent(const Laurent& p) {
        return RationalFunction(p, Laurent::one());
    }
    static RationalFunction one() { return from_laurent(Laurent::one()); }

    const Laurent& numerator() const { return num_; }
    const Laurent& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the reduced denominator is the constant 1 (the value is an
    // honest Laurent polynomial).
    bool is_laurent() const { return den_.is_one(); }

    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;

    bool operator==(const RationalFunction& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

    // Exact evaluation; throws HypothesisFailure at a zero of the denominator.
    Cyclotomic eval_exact(const Cyclotomic& t0) const;
    // Numeric evaluation at the principal embedding; throws near poles.
    std::complex<double> eval(const std::complex<double>& t0) const;

    std::string str(const std::string& var = "t") const;

private:
    Laurent num_, den_;
};

// ratfn_normalize of the spec: construct + canonical reduction.
inline RationalFunction ratfn_normalize(const Laurent& num, const Laurent& den) {
    return RationalFunction(num, den);
}

// True iff f == (c * t^k) * g with c = +1 or -1.
bool eq_up_to_unit(const RationalFunction& f, const RationalFunction& g);

}  // namespace tapoly
