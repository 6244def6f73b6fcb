#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tapoly/errors.hpp"
#include "tapoly/poly_matrix.hpp"
#include "tapoly/twobridge.hpp"
#include "test_support.hpp"

using namespace tapoly;
using testgen::Rng;

namespace {

TwoBridgeParams j22() { return TwoBridgeParams{1, 1, KnotSign::plus}; }

Representation trivial_rep(const Presentation& p, unsigned dim) {
    Representation rho;
    rho.dim = dim;
    rho.order = 1;
    rho.sl_flag = true;
    for (const auto& g : p.generators()) rho.images.emplace(g, CycMatrix::identity(dim, 1));
    return rho;
}

// Characteristic polynomial det(X - M) as a polynomial in the Laurent
// variable, via the generic determinant.
Laurent char_poly(const CycMatrix& m) {
    PolyMatrix xm(m.dim(), m.dim());
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < m.dim(); ++j) {
            xm.at(i, j) = -Laurent::constant(m.at(i, j));
            if (i == j) xm.at(i, j) = xm.at(i, j) + Laurent::t(1);
        }
    return xm.determinant();
}

}  // namespace

TEST_CASE("validate") {
    Presentation pres = lin_presentation(j22());
    CHECK(validate(trivial_rep(pres, 2), pres).empty());
    Representation rho = metabelian_rep(pres, metabelian_data(j22(), 1));
    CHECK(validate(rho, pres).empty());

    // replacing z1 by a 4th root of unity breaks the relators
    Representation bad = rho;
    Cyclotomic i4 = Cyclotomic::zeta(4);
    bad.images.at("x1") = CycMatrix::diagonal({i4, i4.inverse()});
    bad.order = 12;
    CHECK_FALSE(validate(bad, pres).empty());

    Representation missing;
    missing.dim = 2;
    missing.order = 1;
    CHECK_THROWS_AS(validate(missing, pres), InvalidRepresentation);
}

TEST_CASE("metabelian_rep normal form") {
    Presentation pres = lin_presentation(j22());
    Representation rho = metabelian_rep(pres, metabelian_data(j22(), 1));
    CHECK(rho.dim == 2);
    CHECK(rho.sl_flag);
    Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(rho.image("x1") == CycMatrix::diagonal({z3, z3.pow(2)}));
    CHECK(rho.image("x2") == CycMatrix::diagonal({z3.pow(2), z3}));
    // rho(mu)^2 = -1
    CycMatrix mu2 = rho.image("mu") * rho.image("mu");
    CHECK(mu2 == CycMatrix::identity(2, rho.order).scaled(-Cyclotomic::one(rho.order)));

    // all z_i = 1: valid but abelian
    MetabelianData ones;
    ones.meridian = "mu";
    ones.zs = {Cyclotomic::one(), Cyclotomic::one()};
    Representation ab = metabelian_rep(pres, ones);
    CHECK(validate(ab, pres).empty());
    CHECK(period(ones) == 1);

    // even-order data is rejected outright
    MetabelianData even;
    even.meridian = "mu";
    even.zs = {Cyclotomic::zeta(4), Cyclotomic::one()};
    CHECK_THROWS_AS(metabelian_rep(pres, even), InvalidRepresentation);
}

TEST_CASE("sym_power on diagonal and identity") {
    for (unsigned n = 1; n <= 8; ++n) {
        CycMatrix id = CycMatrix::identity(2, 1);
        CHECK(sym_power_matrix(id, n).is_identity());
    }
    Cyclotomic lam = Cyclotomic::zeta(7);
    for (unsigned n = 2; n <= 6; ++n) {
        CycMatrix d = CycMatrix::diagonal({lam, lam.inverse()});
        CycMatrix s = sym_power_matrix(d, n);
        REQUIRE(s.is_diagonal());
        // diag entries lambda^{-(n-1)}, lambda^{-(n-3)}, ..., lambda^{n-1}
        for (unsigned k = 0; k < n; ++k)
            CHECK(s.at(k, k) == lam.pow(2l * k - (static_cast<long>(n) - 1)));
    }
}

TEST_CASE("sym_power of a general matrix") {
    // sigma_2(A) = [[d, -c], [-b, a]] for A = [[a,b],[c,d]] in SL2
    Rng rng(1234);
    for (int rep = 0; rep < 10; ++rep) {
        CycMatrix a = testgen::random_sl2(rng, 3);
        CycMatrix s = sym_power_matrix(a, 2);
        CHECK(s.at(0, 0) == a.at(1, 1));
        CHECK(s.at(0, 1) == -a.at(1, 0));
        CHECK(s.at(1, 0) == -a.at(0, 1));
        CHECK(s.at(1, 1) == a.at(0, 0));
        // conjugate to A by [[0,1],[-1,0]]
        CycMatrix j(2, a.order());
        j.at(0, 1) = Cyclotomic::one(a.order());
        j.at(1, 0) = -Cyclotomic::one(a.order());
        CHECK(j * a * j.inverse() == s);
    }
}

TEST_CASE("sym_power multiplicativity and determinant") {
    Rng rng(606);
    for (unsigned n = 2; n <= 6; ++n) {
        CycMatrix a = testgen::random_sl2(rng, 3);
        CycMatrix b = testgen::random_sl2(rng, 3);
        CHECK(sym_power_matrix(a, n) * sym_power_matrix(b, n) == sym_power_matrix(a * b, n));
        CHECK(sym_power_matrix(a, n).determinant().is_one());
    }
}

TEST_CASE("eigenvalues of sym_power via characteristic polynomials") {
    Cyclotomic lam = Cyclotomic::zeta(15);
    for (unsigned n = 2; n <= 6; ++n) {
        CycMatrix s = sym_power_matrix(CycMatrix::diagonal({lam, lam.inverse()}), n);
        Laurent lhs = char_poly(s);
        Laurent rhs = Laurent::one();
        for (unsigned j = 1; j <= n; ++j) {
            long e = 2l * j - 1 - static_cast<long>(n);
            rhs = rhs * (Laurent::t(1) - Laurent::constant(lam.pow(e)));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("direct_sum") {
    Presentation pres = lin_presentation(j22());
    Representation rho = metabelian_rep(pres, metabelian_data(j22(), 1));
    Representation one = direct_sum({rho});
    CHECK(one.dim == 2);
    CHECK(one.images.at("x1") == rho.images.at("x1"));
    Representation two = direct_sum({rho, rho});
    CHECK(two.dim == 4);
    for (const auto& g : pres.generators()) {
        Cyclotomic d = two.image(g).determinant();
        Cyclotomic expect = rho.image(g).determinant();
        CHECK(d == expect * expect);
    }
    CHECK(validate(two, pres).empty());
}

TEST_CASE("block decomposition") {
    TwoBridgeParams params = j22();
    Presentation pres = lin_presentation(params);
    MetabelianData data = metabelian_data(params, 1);
    CHECK(period(data) == 3);

    auto psi = block_decomposition(data, pres, 5);
    // psi_1(x_i) = diag(z_i^{-1}, z_i): the block normal form of rho with the
    // diagonal relabeled z -> z^-1 (conjugate to rho, identical TAP values)
    Representation rho = metabelian_rep(pres, data);
    Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(psi[0].images.at("x1") == CycMatrix::diagonal({z3.inverse(), z3}));
    CHECK(psi[0].images.at("mu") == rho.images.at("mu"));
    Abelianization alpha = abelianize(pres);
    CHECK(twisted_alexander(pres, psi[0], alpha).value ==
          twisted_alexander(pres, rho, alpha).value);
    // psi_{j+p} = psi_j
    CHECK(psi[3].images.at("x1") == psi[0].images.at("x1"));
    CHECK(psi[3].images.at("x2") == psi[0].images.at("x2"));
    CHECK(psi[4].images.at("x1") == psi[1].images.at("x1"));
    // psi_2(x1) = diag(z^{-3}, z^3) = identity for order-3 z
    CHECK(psi[1].image("x1").is_identity());

    // J(2,-2): period 5
    TwoBridgeParams minus{1, 1, KnotSign::minus};
    CHECK(period(metabelian_data(minus, 1)) == 5);
}

TEST_CASE("conjugacy of blocks inside sym_power") {
    TwoBridgeParams params = j22();
    Presentation pres = lin_presentation(params);
    MetabelianData data = metabelian_data(params, 1);
    CHECK(conjugacy_check_blocks(data, pres, 1));
    CHECK(conjugacy_check_blocks(data, pres, 3));
    TwoBridgeParams minus{1, 1, KnotSign::minus};
    CHECK(conjugacy_check_blocks(metabelian_data(minus, 1), lin_presentation(minus), 2));
}

TEST_CASE("sym_power and block direct sum share characteristic polynomials") {
    TwoBridgeParams params = j22();
    Presentation pres = lin_presentation(params);
    MetabelianData data = metabelian_data(params, 1);
    Representation rho = metabelian_rep(pres, data);
    for (unsigned big : {2u, 4u, 6u}) {
        Representation direct = sym_power(rho, big);
        Representation blocks = direct_sum(block_decomposition(data, pres, big / 2));
        for (const auto& g : pres.generators())
            CHECK(char_poly(direct.image(g)) == char_poly(blocks.image(g)));
    }
}

TEST_CASE("extract_metabelian") {
    Presentation pres = lin_presentation(j22());
    Representation rho = metabelian_rep(pres, metabelian_data(j22(), 1));
    auto data = extract_metabelian(rho, pres);
    REQUIRE(data.has_value());
    CHECK(data->meridian == "mu");
    CHECK(data->zs.size() == 2);
    CHECK(data->zs[0] == Cyclotomic::zeta(3));
    CHECK_FALSE(extract_metabelian(trivial_rep(pres, 2), pres).has_value());
}
