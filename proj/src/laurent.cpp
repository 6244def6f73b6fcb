#include "tapoly/laurent.hpp"

#include <numeric>
#include <sstream>

#include "tapoly/errors.hpp"

namespace tapoly {

void Laurent::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        order_ = 1;
        return;
    }
    size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Cyclotomic>(coeffs_.begin() + static_cast<long>(lead),
                                          coeffs_.begin() + static_cast<long>(tail));
        low_ += static_cast<long>(lead);
    }
    unsigned q = 1;
    for (const auto& c : coeffs_) q = std::lcm(q, c.order());
    for (auto& c : coeffs_)
        if (c.order() != q) c = c.embedded(q);
    order_ = q;
}

unsigned Laurent::align_orders(Laurent& a, Laurent& b) {
    unsigned q = std::lcm(a.order_, b.order_);
    auto lift = [q](Laurent& p) {
        if (p.order_ == q) return;
        for (auto& c : p.coeffs_) c = c.embedded(q);
        p.order_ = q;
    };
    lift(a);
    lift(b);
    return q;
}

Laurent Laurent::monomial(const Cyclotomic& a, long power) {
    Laurent p;
    if (a.is_zero()) return p;
    p.low_ = power;
    p.coeffs_ = {a};
    p.order_ = a.order();
    return p;
}

Laurent Laurent::from_coeffs(long low, std::vector<Cyclotomic> coeffs) {
    Laurent p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Laurent Laurent::from_rationals(long low, const std::vector<Rational>& coeffs) {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(Cyclotomic::rational(r));
    return from_coeffs(low, std::move(c));
}

bool Laurent::is_one() const {
    return coeffs_.size() == 1 && low_ == 0 && coeffs_[0].is_one();
}

long Laurent::high_degree() const {
    if (is_zero()) throw Error("high_degree of the zero polynomial");
    return low_ + static_cast<long>(coeffs_.size()) - 1;
}

Cyclotomic Laurent::coeff_at(long k) const {
    if (is_zero() || k < low_ || k > high_degree()) return Cyclotomic::zero(order_);
    return coeffs_[static_cast<size_t>(k - low_)];
}

Cyclotomic Laurent::leading_coeff() const {
    if (is_zero()) throw Error("leading coefficient of zero");
    return coeffs_.back();
}

Cyclotomic Laurent::trailing_coeff() const {
    if (is_zero()) throw Error("trailing coefficient of zero");
    return coeffs_.front();
}

Laurent Laurent::operator-() const {
    Laurent p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    Laurent a = *this, b = rhs;
    unsigned q = align_orders(a, b);
    long low = std::min(a.low_, b.low_);
    long high = std::max(a.high_degree(), b.high_degree());
    std::vector<Cyclotomic> c(static_cast<size_t>(high - low + 1), Cyclotomic::zero(q));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        c[static_cast<size_t>(a.low_ - low) + i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) {
        size_t k = static_cast<size_t>(b.low_ - low) + i;
        c[k] = c[k] + b.coeffs_[i];
    }
    return from_coeffs(low, std::move(c));
}

Laurent Laurent::operator-(const Laurent& rhs) const { return *this + (-rhs); }

Laurent Laurent::operator*(const Laurent& rhs) const {
    if (is_zero() || rhs.is_zero()) return Laurent();
    Laurent a = *this, b = rhs;
    unsigned q = align_orders(a, b);
    std::vector<Cyclotomic> c(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclotomic::zero(q));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_coeffs(a.low_ + b.low_, std::move(c));
}

Laurent Laurent::scaled(const Cyclotomic& c) const {
    if (c.is_zero()) return Laurent();
    Laurent p = *this;
    for (auto& x : p.coeffs_) x = x * c;
    p.normalize();
    return p;
}

Laurent Laurent::shifted(long k) const {
    Laurent p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent acc = Laurent::one();
    Laurent base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Laurent::operator==(const Laurent& rhs) const {
    if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
    if (low_ != rhs.low_ || coeffs_.size() != rhs.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

bool Laurent::try_divide(const Laurent& a, const Laurent& b, Laurent& quotient) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    if (a.is_zero()) {
        quotient = Laurent();
        return true;
    }
    Laurent x = a, y = b;
    unsigned q = align_orders(x, y);
    // Work with the ordinary polynomial parts; the t^k units shift back in.
    std::vector<Cyclotomic> rem = x.coeffs_;
    const std::vector<Cyclotomic>& div = y.coeffs_;
    const Cyclotomic lead_inv = div.back().inverse();
    if (rem.size() < div.size()) return false;
    std::vector<Cyclotomic> quot(rem.size() - div.size() + 1, Cyclotomic::zero(q));
    for (size_t shift = quot.size(); shift-- > 0;) {
        size_t top = shift + div.size() - 1;
        if (rem[top].is_zero()) continue;
        Cyclotomic c = rem[top] * lead_inv;
        quot[shift] = c;
        for (size_t i = 0; i < div.size(); ++i)
            rem[shift + i] = rem[shift + i] - c * div[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return false;
    quotient = from_coeffs(x.low_ - y.low_, std::move(quot));
    return true;
}

Laurent Laurent::divided_by(const Laurent& b) const {
    Laurent q;
    if (!try_divide(*this, b, q))
        throw Error("polynomial division is not exact: (" + str() + ") / (" + b.str() + ")");
    return q;
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    // Euclid on the ordinary parts (support shifted to start at 0).
    Laurent r0 = a.is_zero() ? Laurent() : a.shifted(-a.low_degree());
    Laurent r1 = b.is_zero() ? Laurent() : b.shifted(-b.low_degree());
    while (!r1.is_zero()) {
        // r0 mod r1 by repeated leading-term elimination.
        Laurent r = r0;
        const Cyclotomic lead_inv = r1.leading_coeff().inverse();
        while (!r.is_zero() && r.high_degree() >= r1.high_degree()) {
            Cyclotomic c = r.leading_coeff() * lead_inv;
            long shift = r.high_degree() - r1.high_degree();
            r = r - r1.scaled(c).shifted(shift);
        }
        r0 = std::move(r1);
        r1 = r.is_zero() ? Laurent() : r.shifted(-r.low_degree());
    }
    if (r0.is_zero()) return Laurent::one();
    r0 = r0.shifted(-r0.low_degree());
    return r0.scaled(r0.trailing_coeff().inverse());
}

Laurent Laurent::variable_scaled(const Cyclotomic& u) const {
    if (is_zero()) return Laurent();
    std::vector<Cyclotomic> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) {
        long k = low_ + static_cast<long>(i);
        if (!c[i].is_zero()) c[i] = c[i] * u.pow(k);
    }
    return from_coeffs(low_, std::move(c));
}

Cyclotomic Laurent::eval_exact(const Cyclotomic& t0) const {
    if (is_zero()) return Cyclotomic::zero(order_);
    // Horner over the ordinary part, then one power of t0 for the low end.
    Cyclotomic acc = Cyclotomic::zero(std::lcm(order_, t0.order()));
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t0 + coeffs_[i];
    if (low_ != 0) acc = acc * t0.pow(low_);
    return acc;
}

Cyclotomic Laurent::eval_one() const {
    Cyclotomic acc = Cyclotomic::zero(order_);
    for (const auto& c : coeffs_) acc = acc + c;
    return acc;
}

std::complex<double> Laurent::eval(const std::complex<double>& t0) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t0 + coeffs_[i].to_complex();
    if (low_ != 0) acc *= std::pow(t0, static_cast<double>(low_));
    return acc;
}

std::string Laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Cyclotomic& c = coeffs_[i];
        if (c.is_zero()) continue;
        long k = low_ + static_cast<long>(i);
        std::string cs = c.str();
        bool neg = false;
        if (c.is_rational() && c.rational_value() < 0) {
            neg = true;
            cs = (-c).str();
        }
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        bool unit_coeff = (cs == "1");
        bool composite = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out << (composite ? "(" + cs + ")" : cs);
        } else {
            if (!unit_coeff) out << (composite ? "(" + cs + ")" : cs) << "*";
            out << var;
            if (k != 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

}  // namespace tapoly
