#include "tapoly/rational_function.hpp"

#include "tapoly/errors.hpp"

namespace tapoly {

RationalFunction::RationalFunction(const Laurent& numerator, const Laurent& denominator) {
    if (denominator.is_zero()) throw Error("rational function with zero denominator");
    if (numerator.is_zero()) {
        num_ = Laurent::zero();
        den_ = Laurent::one();
        return;
    }
    Laurent n = numerator, d = denominator;
    Laurent g = Laurent::gcd(n, d);
    if (!g.is_one()) {
        n = n.divided_by(g);
        d = d.divided_by(g);
    }
    // Unit normalization: divide both parts by c*t^k where c is the trailing
    // coefficient of the denominator and k its low degree.
    const Cyclotomic unit_inv = d.trailing_coeff().inverse();
    const long k = d.low_degree();
    num_ = n.scaled(unit_inv).shifted(-k);
    den_ = d.scaled(unit_inv).shifted(-k);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero()) throw Error("division by the zero rational function");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

Cyclotomic RationalFunction::eval_exact(const Cyclotomic& t0) const {
    Cyclotomic d = den_.eval_exact(t0);
    if (d.is_zero()) throw HypothesisFailure("evaluation at a pole of the denominator");
    return num_.eval_exact(t0) * d.inverse();
}

std::complex<double> RationalFunction::eval(const std::complex<double>& t0) const {
    std::complex<double> d = den_.eval(t0);
    if (std::abs(d) < 1e-12)
        throw HypothesisFailure("numeric evaluation at (or too close to) a pole");
    return num_.eval(t0) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_laurent()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

bool eq_up_to_unit(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    // Both are normalized, so an equality f = (+-t^k) g forces equal
    // denominators and shift-equal numerators.
    if (f.denominator() != g.denominator()) return false;
    const Laurent& a = f.numerator();
    const Laurent& b = g.numerator();
    if (a.coeffs().size() != b.coeffs().size()) return false;
    Cyclotomic c = a.trailing_coeff() * b.trailing_coeff().inverse();
    if (!c.is_one() && !(-c).is_one()) return false;
    long shift = a.low_degree() - b.low_degree();
    return a == b.scaled(c).shifted(shift);
}

}  // namespace tapoly
