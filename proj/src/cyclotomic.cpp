#include "tapoly/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tapoly/errors.hpp"

namespace tapoly {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor must divide evenly.
IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    IntPoly rem = a;
    IntPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t shift = rem.size() - b.size();
        Int c = rem.back() / b.back();
        if (c * b.back() != rem.back())
            throw Error("integer polynomial division is not exact");
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        trim(rem);
    }
    if (!rem.empty()) throw Error("integer polynomial division left a remainder");
    return quot;
}

std::mutex g_phi_mutex;
std::map<unsigned, IntPoly> g_phi_cache;

IntPoly cyclotomic_polynomial_locked(unsigned q) {
    auto it = g_phi_cache.find(q);
    if (it != g_phi_cache.end()) return it->second;
    IntPoly result;
    if (q == 1) {
        result = {Int(-1), Int(1)};  // x - 1
    } else {
        IntPoly num(q + 1, Int(0));  // x^q - 1
        num[0] = -1;
        num[q] = 1;
        IntPoly den = {Int(1)};
        for (unsigned d = 1; d < q; ++d) {
            if (q % d != 0) continue;
            const IntPoly& phi_d = cyclotomic_polynomial_locked(d);
            IntPoly prod(den.size() + phi_d.size() - 1, Int(0));
            for (size_t i = 0; i < den.size(); ++i)
                for (size_t j = 0; j < phi_d.size(); ++j)
                    prod[i + j] += den[i] * phi_d[j];
            den = std::move(prod);
        }
        result = div_exact(num, den);
    }
    g_phi_cache.emplace(q, result);
    return result;
}

// Per-order reduction data: Phi_q plus the reductions of x^{deg}, ...,
// x^{2deg-2} used to fold products back into the power basis.
struct CycContext {
    unsigned q = 1;
    size_t deg = 1;
    IntPoly phi;
    std::vector<std::vector<Rational>> power_reductions;
};

std::mutex g_ctx_mutex;
std::map<unsigned, std::shared_ptr<const CycContext>> g_ctx_cache;

std::shared_ptr<const CycContext> context(unsigned q) {
    if (q == 0) throw Error("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_ctx_mutex);
        auto it = g_ctx_cache.find(q);
        if (it != g_ctx_cache.end()) return it->second;
    }
    auto ctx = std::make_shared<CycContext>();
    ctx->q = q;
    ctx->phi = cyclotomic_polynomial(q);
    ctx->deg = ctx->phi.size() - 1;
    // x^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^{deg-1}) since phi monic;
    // higher powers follow by multiplying by x and reducing again.
    std::vector<Rational> cur(ctx->deg);
    for (size_t i = 0; i < ctx->deg; ++i) cur[i] = Rational(-ctx->phi[i]);
    ctx->power_reductions.push_back(cur);
    for (size_t extra = 1; extra + 1 < ctx->deg; ++extra) {
        std::vector<Rational> next(ctx->deg, Rational(0));
        const Rational top = cur[ctx->deg - 1];
        for (size_t i = 1; i < ctx->deg; ++i) next[i] = cur[i - 1];
        if (top != 0)
            for (size_t i = 0; i < ctx->deg; ++i)
                next[i] += top * ctx->power_reductions[0][i];
        ctx->power_reductions.push_back(next);
        cur = std::move(next);
    }
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto [it, inserted] = g_ctx_cache.emplace(q, std::move(ctx));
    (void)inserted;
    return it->second;
}

// Remainder of an arbitrary-length rational coefficient vector mod Phi_q.
std::vector<Rational> reduce_mod_phi(const CycContext& ctx, std::vector<Rational> p) {
    if (p.size() <= 2 * ctx.deg - 1) {
        std::vector<Rational> out(ctx.deg, Rational(0));
        for (size_t i = 0; i < p.size() && i < ctx.deg; ++i) out[i] = p[i];
        for (size_t i = ctx.deg; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            const auto& row = ctx.power_reductions[i - ctx.deg];
            for (size_t k = 0; k < ctx.deg; ++k) out[k] += p[i] * row[k];
        }
        return out;
    }
    // Long division by the monic Phi_q for long inputs (e.g. zeta^e, e >= 2deg).
    while (p.size() > ctx.deg) {
        Rational c = p.back();
        size_t shift = p.size() - 1 - ctx.deg;
        if (c != 0)
            for (size_t i = 0; i <= ctx.deg; ++i) p[shift + i] -= c * Rational(ctx.phi[i]);
        p.pop_back();
    }
    p.resize(ctx.deg, Rational(0));
    return p;
}

// Extended Euclid over Q[x]: returns (g, u) with u*a == g (mod m), g the
// monic gcd of a and m. Polynomials as dense rational vectors.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// Returns a mod b and stores the quotient; b must be nonzero.
QPoly qdivmod(QPoly a, const QPoly& b, QPoly& quot) {
    qtrim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned q) {
    if (q == 0) throw Error("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_polynomial_locked(q);
}

Cyclotomic Cyclotomic::zero(unsigned q) {
    auto ctx = context(q);
    return Cyclotomic(q, std::vector<Rational>(ctx->deg, Rational(0)));
}

Cyclotomic Cyclotomic::one(unsigned q) { return rational(Rational(1), q); }

Cyclotomic Cyclotomic::rational(const Rational& r, unsigned q) {
    auto ctx = context(q);
    std::vector<Rational> c(ctx->deg, Rational(0));
    c[0] = r;
    c[0].canonicalize();
    return Cyclotomic(q, std::move(c));
}

Cyclotomic Cyclotomic::integer(long v, unsigned q) { return rational(Rational(v), q); }

Cyclotomic Cyclotomic::zeta(unsigned q, long power) {
    auto ctx = context(q);
    long e = power % static_cast<long>(q);
    if (e < 0) e += q;
    std::vector<Rational> p(static_cast<size_t>(e) + 1, Rational(0));
    p.back() = 1;
    return Cyclotomic(q, reduce_mod_phi(*ctx, std::move(p)));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned q, std::vector<Rational> coeffs) {
    auto ctx = context(q);
    for (auto& c : coeffs) c.canonicalize();
    return Cyclotomic(q, reduce_mod_phi(*ctx, std::move(coeffs)));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw Error("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                    std::to_string(new_order) + "): order does not divide");
    const unsigned step = new_order / order_;
    auto ctx = context(new_order);
    std::vector<Rational> p(static_cast<size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    return Cyclotomic(new_order, reduce_mod_phi(*ctx, std::move(p)));
}

std::optional<Cyclotomic> Cyclotomic::projected(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (order_ % new_order != 0)
        throw Error("projection target order must divide the current order");
    // Solve for coordinates of *this in the embedded basis of Q(zeta_new).
    auto small = context(new_order);
    const size_t cols = small->deg;
    const size_t rows = coeffs_.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (size_t j = 0; j < cols; ++j) {
        Cyclotomic basis = Cyclotomic::zeta(new_order, static_cast<long>(j)).embedded(order_);
        for (size_t i = 0; i < rows; ++i) m[i][j] = basis.coeffs()[i];
    }
    for (size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];
    // Gaussian elimination.
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[row]);
        Rational inv = 1 / m[row][col];
        for (size_t j = col; j <= cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;  // not in the subfield
    std::vector<Rational> sol(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = m[i][cols];
    return Cyclotomic(new_order, std::move(sol));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    std::vector<Rational> c = a.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    unsigned q = align(a, b);
    auto ctx = context(q);
    std::vector<Rational> prod(2 * ctx->deg - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(q, reduce_mod_phi(*ctx, std::move(prod)));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("inversion of zero cyclotomic number");
    auto ctx = context(order_);
    // Extended Euclid on (a, Phi_q): maintain u with u*a == r (mod Phi).
    QPoly r0(ctx->phi.size());
    for (size_t i = 0; i < ctx->phi.size(); ++i) r0[i] = Rational(ctx->phi[i]);
    QPoly r1 = coeffs_;
    qtrim(r1);
    QPoly u0 = {};           // 0 * a == Phi (mod Phi)
    QPoly u1 = {Rational(1)};  // 1 * a == a
    while (!r1.empty()) {
        QPoly quot;
        QPoly r2 = qdivmod(r0, r1, quot);
        QPoly u2 = qsub(u0, qmul(quot, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd(a, Phi); for field elements it is a nonzero constant.
    if (r0.size() != 1)
        throw Error("cyclotomic inverse: element is a zero divisor (Phi_q not coprime)");
    Rational inv_g = 1 / r0[0];
    for (auto& c : u0) c *= inv_g;
    return Cyclotomic(order_, reduce_mod_phi(*ctx, std::move(u0)));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e == 0) return Cyclotomic::one(order_);
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    Cyclotomic acc = Cyclotomic::one(order_);
    while (n > 0) {
        if (n & 1ul) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    Cyclotomic a = *this, b = rhs;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

unsigned Cyclotomic::multiplicative_order() const {
    if (is_zero()) return 0;
    // Roots of unity in Q(zeta_q) all have order dividing lcm(2, q).
    unsigned bound = order_ % 2 == 0 ? order_ : 2 * order_;
    Cyclotomic p = *this;
    for (unsigned d = 1; d <= bound; ++d) {
        if (bound % d == 0 && pow(static_cast<long>(d)).is_one()) return d;
    }
    return 0;
}

std::complex<double> Cyclotomic::to_complex() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double angle = tau * static_cast<double>(k) / static_cast<double>(order_);
        acc += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mag = to_string(a);
        if (k == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag << "*";
            out << "z" << order_;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

Cyclotomic delta_sum(unsigned k, const Cyclotomic& b) {
    Cyclotomic acc = Cyclotomic::one(b.order());
    Cyclotomic p = Cyclotomic::one(b.order());
    for (unsigned i = 1; i <= k; ++i) {
        p = p * b;
        acc = acc + p;
    }
    return acc;
}

unsigned align(Cyclotomic& a, Cyclotomic& b) {
    unsigned q = std::lcm(a.order(), b.order());
    if (a.order() != q) a = a.embedded(q);
    if (b.order() != q) b = b.embedded(q);
    return q;
}

}  // namespace tapoly
