#include "tapoly/representation.hpp"

#include <numeric>

#include "tapoly/errors.hpp"

namespace tapoly {

const CycMatrix& Representation::image(const std::string& gen) const {
    auto it = images.find(gen);
    if (it == images.end())
        throw InvalidRepresentation("missing generator image: " + gen);
    return it->second;
}

CycMatrix Representation::word_image(const Word& w) const {
    CycMatrix acc = CycMatrix::identity(dim, order);
    for (const auto& s : w.syllables()) acc = acc * image(s.gen).pow(s.exp);
    return acc;
}

std::vector<std::string> validate(const Representation& rho, const Presentation& p) {
    for (const auto& g : p.generators()) rho.image(g);  // throws when missing
    std::vector<std::string> failed;
    for (const auto& r : p.relators())
        if (!rho.word_image(r).is_identity()) failed.push_back(r.str());
    return failed;
}

namespace {

CycMatrix meridian_j_matrix(unsigned order) {
    CycMatrix j(2, order);
    j.at(0, 1) = Cyclotomic::one(order);
    j.at(1, 0) = -Cyclotomic::one(order);
    return j;
}

// The z_i in diag(z_i^e, z_i^-e) blocks for a common field order; checks the
// root-of-unity/odd-order invariants of MetabelianData.
unsigned common_order_checked(const MetabelianData& data) {
    unsigned q = 1;
    for (size_t i = 0; i < data.zs.size(); ++i) {
        unsigned d = data.zs[i].multiplicative_order();
        if (d == 0)
            throw InvalidRepresentation("metabelian datum z_" + std::to_string(i + 1) +
                                        " is not a root of unity");
        if (d % 2 == 0)
            throw InvalidRepresentation("metabelian datum z_" + std::to_string(i + 1) +
                                        " has even order " + std::to_string(d));
        q = std::lcm(q, data.zs[i].order());
    }
    return q;
}

Representation metabelian_powers(const Presentation& p, const MetabelianData& data,
                                 long diag_exponent) {
    unsigned q = common_order_checked(data);
    std::vector<std::string> lin_gens;
    for (const auto& g : p.generators())
        if (g != data.meridian) lin_gens.push_back(g);
    if (lin_gens.size() != data.zs.size())
        throw InvalidRepresentation("expected " + std::to_string(lin_gens.size()) +
                                    " diagonal entries, got " + std::to_string(data.zs.size()));
    if (!p.has_generator(data.meridian))
        throw InvalidRepresentation("meridian " + data.meridian + " is not a generator");

    Representation rho;
    rho.dim = 2;
    rho.order = q;
    rho.sl_flag = true;
    for (size_t i = 0; i < lin_gens.size(); ++i) {
        Cyclotomic z = data.zs[i].embedded(q).pow(diag_exponent);
        rho.images.emplace(lin_gens[i], CycMatrix::diagonal({z, z.inverse()}).embedded(q));
    }
    rho.images.emplace(data.meridian, meridian_j_matrix(q));

    auto failed = validate(rho, p);
    if (!failed.empty())
        throw InvalidRepresentation("metabelian data does not define a representation; relator " +
                                    failed.front() + " is not killed");
    return rho;
}

}  // namespace

Representation metabelian_rep(const Presentation& p, const MetabelianData& data) {
    // Lin-form check: all non-meridian generators have degree 0, meridian 1.
    Abelianization alpha = abelianize(p);
    for (const auto& g : p.generators()) {
        long want = (g == data.meridian) ? 1 : 0;
        if (alpha.degree(g) != want)
            throw InvalidRepresentation("presentation is not in Lin form: deg(" + g + ") = " +
                                        std::to_string(alpha.degree(g)));
    }
    return metabelian_powers(p, data, 1);
}

CycMatrix sym_power_matrix(const CycMatrix& a, unsigned n) {
    if (a.dim() != 2) throw Error("sym_power requires a 2x2 matrix");
    const CycMatrix b = a.inverse();  // action uses A^{-1}
    const unsigned q = b.order();
    const size_t deg = n - 1;
    // Expand (b00 x + b01 y)^(deg-k) * (b10 x + b11 y)^k for each basis
    // monomial x^{deg-k} y^k; entry (l, k) is the coefficient of x^{deg-l} y^l.
    CycMatrix m(n, q);
    std::vector<std::vector<Int>> binom(deg + 1, std::vector<Int>(deg + 1, Int(0)));
    for (size_t i = 0; i <= deg; ++i) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
    }
    auto expand_power = [&](const Cyclotomic& cx, const Cyclotomic& cy, size_t p) {
        // coefficients of (cx*x + cy*y)^p by ascending y-degree
        std::vector<Cyclotomic> out(p + 1, Cyclotomic::zero(q));
        for (size_t i = 0; i <= p; ++i)
            out[i] = Cyclotomic::rational(Rational(binom[p][i]), 1).embedded(q) *
                     cx.pow(static_cast<long>(p - i)) * cy.pow(static_cast<long>(i));
        return out;
    };
    for (size_t k = 0; k <= deg; ++k) {
        auto xs = expand_power(b.at(0, 0), b.at(0, 1), deg - k);
        auto ys = expand_power(b.at(1, 0), b.at(1, 1), k);
        for (size_t i = 0; i < xs.size(); ++i) {
            if (xs[i].is_zero()) continue;
            for (size_t j = 0; j < ys.size(); ++j) {
                if (ys[j].is_zero()) continue;
                size_t l = i + j;  // y-degree of the product monomial
                m.at(l, k) = m.at(l, k) + xs[i] * ys[j];
            }
        }
    }
    return m;
}

Representation sym_power(const Representation& rho, unsigned n) {
    if (rho.dim != 2) throw Error("sym_power requires a 2-dimensional representation");
    if (n < 1) throw Error("sym_power dimension must be >= 1");
    Representation out;
    out.dim = n;
    out.order = rho.order;
    out.sl_flag = rho.sl_flag;
    for (const auto& [g, a] : rho.images) {
        CycMatrix m = sym_power_matrix(a, n);
        if (rho.sl_flag && !m.determinant().is_one())
            throw Error("sym_power image of " + g + " is not in SL");
        out.images.emplace(g, std::move(m));
    }
    return out;
}

Representation direct_sum(const std::vector<Representation>& rhos) {
    if (rhos.empty()) throw Error("direct_sum of an empty list");
    unsigned dim = 0, q = 1;
    bool sl = true;
    for (const auto& r : rhos) {
        dim += r.dim;
        q = std::lcm(q, r.order);
        sl = sl && r.sl_flag;
        if (r.images.size() != rhos.front().images.size())
            throw Error("direct_sum requires a shared generator set");
    }
    Representation out;
    out.dim = dim;
    out.order = q;
    out.sl_flag = sl;
    for (const auto& [g, first] : rhos.front().images) {
        (void)first;
        CycMatrix m(dim, q);
        unsigned offset = 0;
        for (const auto& r : rhos) {
            auto it = r.images.find(g);
            if (it == r.images.end())
                throw Error("direct_sum: summand is missing generator " + g);
            CycMatrix blk = it->second.embedded(q);
            for (size_t i = 0; i < blk.dim(); ++i)
                for (size_t j = 0; j < blk.dim(); ++j)
                    m.at(offset + i, offset + j) = blk.at(i, j);
            offset += r.dim;
        }
        out.images.emplace(g, std::move(m));
    }
    return out;
}

std::vector<Representation> block_decomposition(const MetabelianData& data,
                                                const Presentation& p, unsigned count) {
    std::vector<Representation> psi;
    psi.reserve(count);
    for (unsigned j = 1; j <= count; ++j)
        psi.push_back(metabelian_powers(p, data, 1 - 2 * static_cast<long>(j)));
    return psi;
}

unsigned period(const MetabelianData& data) {
    unsigned p = 1;
    for (const auto& z : data.zs) {
        unsigned d = z.multiplicative_order();
        if (d == 0) throw InvalidRepresentation("metabelian datum is not a root of unity");
        p = std::lcm(p, d);
    }
    if (p % 2 == 0) throw InvalidRepresentation("metabelian period must be odd, got " +
                                                std::to_string(p));
    return p;
}

bool conjugacy_check_blocks(const MetabelianData& data, const Presentation& p,
                            unsigned n_blocks) {
    const unsigned n = 2 * n_blocks;
    Representation rho = metabelian_rep(p, data);
    Representation rho_n = sym_power(rho, n);
    std::vector<Representation> psi = block_decomposition(data, p, n_blocks);
    const unsigned q = rho_n.order;

    for (unsigned j = 1; j <= n_blocks; ++j) {
        const size_t a = n_blocks - j;      // basis index of x^{N+j-1} y^{N-j}
        const size_t b = n_blocks + j - 1;  // basis index of x^{N-j} y^{N+j-1}
        const bool negate = (n_blocks - j) % 2 == 1;  // sign (-1)^{N-j} on mu
        for (const auto& [g, big_raw] : rho_n.images) {
            CycMatrix big = big_raw.embedded(q);
            CycMatrix expected = psi[j - 1].image(g).embedded(q);
            if (g == data.meridian && negate) expected = expected.scaled(-Cyclotomic::one(q));
            // Invariance of the coordinate pair plus equality on it.
            for (size_t col : {a, b}) {
                for (size_t row = 0; row < n; ++row) {
                    bool inside = (row == a || row == b);
                    if (!inside && !big.at(row, col).is_zero()) return false;
                }
            }
            auto idx = [&](size_t i) { return i == 0 ? a : b; };
            for (size_t i = 0; i < 2; ++i)
                for (size_t k = 0; k < 2; ++k)
                    if (big.at(idx(i), idx(k)) != expected.at(i, k)) return false;
        }
    }
    return true;
}

std::optional<MetabelianData> extract_metabelian(const Representation& rho,
                                                 const Presentation& p) {
    if (rho.dim != 2) return std::nullopt;
    if (!p.meridian()) return std::nullopt;
    const std::string& mu = *p.meridian();
    const CycMatrix j = meridian_j_matrix(rho.order);
    auto it = rho.images.find(mu);
    if (it == rho.images.end() || !(it->second == j)) return std::nullopt;
    MetabelianData data;
    data.meridian = mu;
    for (const auto& g : p.generators()) {
        if (g == mu) continue;
        auto gi = rho.images.find(g);
        if (gi == rho.images.end()) return std::nullopt;
        const CycMatrix& m = gi->second;
        if (!m.is_diagonal()) return std::nullopt;
        if (!(m.at(0, 0) * m.at(1, 1)).is_one()) return std::nullopt;
        if (m.at(0, 0).multiplicative_order() == 0) return std::nullopt;
        data.zs.push_back(m.at(0, 0));
    }
    return data;
}

}  // namespace tapoly
