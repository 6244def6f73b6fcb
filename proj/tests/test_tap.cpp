#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tapoly/errors.hpp"
#include "tapoly/fox.hpp"
#include "tapoly/io.hpp"
#include "tapoly/twobridge.hpp"
#include "test_support.hpp"

using namespace tapoly;
using testgen::Rng;

namespace {

TwoBridgeParams j22() { return TwoBridgeParams{1, 1, KnotSign::plus}; }

Laurent t2_plus_1() { return Laurent::from_rationals(0, {1, 0, 1}); }

struct Pipeline {
    Presentation pres;
    Abelianization alpha;
    MetabelianData data;
    Representation rho;
};

Pipeline make_pipeline(const TwoBridgeParams& params, unsigned i) {
    Presentation pres = lin_presentation(params);
    Abelianization alpha = abelianize(pres);
    MetabelianData data = metabelian_data(params, i);
    Representation rho = metabelian_rep(pres, data);
    return Pipeline{std::move(pres), std::move(alpha), std::move(data), std::move(rho)};
}

Representation conjugated(const Representation& rho, const CycMatrix& c) {
    Representation out = rho;
    CycMatrix cinv = c.inverse();
    for (auto& [g, m] : out.images) m = c * m * cinv;
    out.sl_flag = false;
    return out;
}

}  // namespace

TEST_CASE("phi_map") {
    Pipeline p = make_pipeline(j22(), 1);
    CHECK(phi_map(GroupRingElement::one(), p.rho, p.alpha) == PolyMatrix::identity(2));

    // mu maps to t * [[0,1],[-1,0]]
    PolyMatrix mu = phi_map(GroupRingElement::of_word(Word::generator("mu")), p.rho, p.alpha);
    CHECK(mu.at(0, 0).is_zero());
    CHECK(mu.at(0, 1) == Laurent::t(1));
    CHECK(mu.at(1, 0) == -Laurent::t(1));

    // 1 - mu maps to [[1, -t], [t, 1]], det t^2 + 1
    PolyMatrix one_minus_mu = phi_map(
        GroupRingElement::one() - GroupRingElement::of_word(Word::generator("mu")), p.rho,
        p.alpha);
    CHECK(one_minus_mu.at(0, 0).is_one());
    CHECK(one_minus_mu.at(0, 1) == -Laurent::t(1));
    CHECK(one_minus_mu.determinant() == t2_plus_1());
}

TEST_CASE("twisted_alexander on J(2,2)") {
    Pipeline p = make_pipeline(j22(), 1);
    TapResult tap = twisted_alexander(p.pres, p.rho, p.alpha);
    CHECK(tap.column == "mu");
    CHECK(tap.dim == 2);
    CHECK(tap.denominator_raw == t2_plus_1());
    CHECK(eq_up_to_unit(tap.value, RationalFunction::from_laurent(t2_plus_1())));

    // abelian data: value (t^4 - t^2 + 1)/(t^2 + 1)
    MetabelianData ones;
    ones.meridian = "mu";
    ones.zs = {Cyclotomic::one(), Cyclotomic::one()};
    Representation ab = metabelian_rep(p.pres, ones);
    TapResult tap_ab = twisted_alexander(p.pres, ab, p.alpha);
    RationalFunction expect =
        ratfn_normalize(Laurent::from_rationals(0, {1, 0, -1, 0, 1}), t2_plus_1());
    CHECK(eq_up_to_unit(tap_ab.value, expect));

    // column invariance: mu vs x1 agree up to units
    TapResult via_x1 = twisted_alexander(p.pres, p.rho, p.alpha, p.pres.generator_index("x1"));
    CHECK(via_x1.column == "x1");
    CHECK(eq_up_to_unit(tap.value, via_x1.value));
    TapResult via_x2 = twisted_alexander(p.pres, p.rho, p.alpha, p.pres.generator_index("x2"));
    CHECK(eq_up_to_unit(tap.value, via_x2.value));

    // explicit column with zero denominator: x1 in the abelian block
    CHECK_THROWS_AS(
        twisted_alexander(p.pres, ab, p.alpha, p.pres.generator_index("x1")), TapUndefined);
}

TEST_CASE("twisted_alexander rejections") {
    Pipeline p = make_pipeline(j22(), 1);
    Presentation wrong_def({"x1", "x2", "mu"}, {p.pres.relators()[0]}, "mu");
    CHECK_THROWS_AS(twisted_alexander(wrong_def, p.rho, p.alpha), TapUndefined);

    Representation bad = p.rho;
    bad.images.at("x1") = CycMatrix::diagonal({Cyclotomic::zeta(3), Cyclotomic::zeta(3)});
    CHECK_THROWS_AS(twisted_alexander(p.pres, bad, p.alpha), InvalidRepresentation);
}

TEST_CASE("unknot") {
    Presentation unknot({"mu"}, {}, "mu");
    Abelianization alpha = abelianize(unknot);
    Representation triv;
    triv.dim = 1;
    triv.order = 1;
    triv.sl_flag = true;
    triv.images.emplace("mu", CycMatrix::identity(1, 1));
    TapResult tap = twisted_alexander(unknot, triv, alpha);
    CHECK(tap.numerator_raw.is_one());  // empty determinant
    // denominator t - 1
    CHECK(tap.denominator_raw == Laurent::from_rationals(0, {-1, 1}));
}

TEST_CASE("tap_higher strategies") {
    Pipeline p = make_pipeline(j22(), 1);
    // n = 2 direct equals the plain TAP of sigma_2 o rho
    TapResult direct2 = tap_higher(p.pres, p.rho, p.alpha, 2, Strategy::direct);
    TapResult plain2 = twisted_alexander(p.pres, sym_power(p.rho, 2), p.alpha);
    CHECK(direct2.value == plain2.value);

    // J(2,2), i=1, n=6 blocks: one abelian block among {psi_1, psi_2, psi_3}
    TapResult blocks6 = tap_higher(p.pres, p.rho, p.alpha, 6, Strategy::blocks);
    RationalFunction expect = RationalFunction::from_laurent(t2_plus_1()) *
                              RationalFunction::from_laurent(t2_plus_1()) *
                              ratfn_normalize(Laurent::from_rationals(0, {1, 0, -1, 0, 1}),
                                              t2_plus_1());
    CHECK(blocks6.value == expect);

    TapResult direct6 = tap_higher(p.pres, p.rho, p.alpha, 6, Strategy::direct);
    CHECK(eq_up_to_unit(direct6.value, blocks6.value));
    CHECK(direct6.value == blocks6.value);  // byte-identical, not only up to unit
    CHECK(tap_result_to_json(direct6).dump() == tap_result_to_json(blocks6).dump());

    CHECK_THROWS_AS(tap_higher(p.pres, p.rho, p.alpha, 5, Strategy::blocks), TapUndefined);
    Rng rng(3);
    Representation twisted = conjugated(p.rho, testgen::random_sl2(rng, 3));
    CHECK_THROWS_AS(tap_higher(p.pres, twisted, p.alpha, 4, Strategy::blocks), TapUndefined);
}

TEST_CASE("wada criterion") {
    Pipeline p = make_pipeline(j22(), 1);
    CHECK(wada_criterion(p.pres, p.rho, p.alpha, Word::generator("x1")));
    CHECK_FALSE(wada_criterion(p.pres, p.rho, p.alpha, Word::identity()));

    MetabelianData ones;
    ones.meridian = "mu";
    ones.zs = {Cyclotomic::one(), Cyclotomic::one()};
    Representation ab = metabelian_rep(p.pres, ones);
    CHECK_FALSE(wada_criterion(p.pres, ab, p.alpha, Word::generator("x1")));

    CHECK_THROWS_AS(wada_criterion(p.pres, p.rho, p.alpha, Word::generator("mu")), Error);

    // when the criterion holds the normalized value is a Laurent polynomial
    TapResult tap = twisted_alexander(p.pres, p.rho, p.alpha);
    CHECK(tap.value.is_laurent());
}

TEST_CASE("reidemeister torsion") {
    Pipeline p = make_pipeline(j22(), 1);
    TorsionValue t = reidemeister_torsion(p.pres, p.rho, p.alpha);
    CHECK(t.up_to_sign);
    CHECK(t.modulus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(t.exact == Cyclotomic::integer(2));

    // det(rho_2N(mu) - 1) = 2^N for all N
    for (unsigned n_half = 1; n_half <= 5; ++n_half) {
        Representation rho2n = sym_power(p.rho, 2 * n_half);
        CycMatrix m = rho2n.image("mu") - CycMatrix::identity(2 * n_half, rho2n.order);
        Cyclotomic d = m.determinant();
        CHECK(d == Cyclotomic::integer(1l << n_half));
    }

    // abelian block at t=1: 1/2
    MetabelianData ones;
    ones.meridian = "mu";
    ones.zs = {Cyclotomic::one(), Cyclotomic::one()};
    Representation ab = metabelian_rep(p.pres, ones);
    TorsionValue ta = reidemeister_torsion(p.pres, ab, p.alpha);
    CHECK(ta.exact == Cyclotomic::rational(Rational(1, 2)));
    CHECK(ta.modulus == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("direct sum multiplicativity") {
    Pipeline p = make_pipeline(j22(), 1);
    MetabelianData ones;
    ones.meridian = "mu";
    ones.zs = {Cyclotomic::one(), Cyclotomic::one()};
    Representation ab = metabelian_rep(p.pres, ones);
    size_t col = p.pres.generator_index("mu");
    TapResult sum = twisted_alexander(p.pres, direct_sum({p.rho, ab}), p.alpha, col);
    TapResult a = twisted_alexander(p.pres, p.rho, p.alpha, col);
    TapResult b = twisted_alexander(p.pres, ab, p.alpha, col);
    CHECK(sum.value == a.value * b.value);
}

TEST_CASE("conjugation invariance") {
    Rng rng(555);
    for (auto params : {j22(), TwoBridgeParams{1, 1, KnotSign::minus}}) {
        Pipeline p = make_pipeline(params, 1);
        TapResult base = twisted_alexander(p.pres, p.rho, p.alpha);
        CycMatrix c = testgen::random_sl2(rng, p.rho.order);
        Representation twisted = conjugated(p.rho, c);
        TapResult conj = twisted_alexander(p.pres, twisted, p.alpha);
        CHECK(conj.value == base.value);
    }
}

TEST_CASE("free Fox form matches the simplified form under Phi") {
    // dr1/dx1 in Z[F] vs mu (1 - mu^-1)(1 + x1 + ... + x1^{m-1}), equal only
    // after applying the representation.
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
            TwoBridgeParams params{m, n, KnotSign::plus};
            Pipeline p = make_pipeline(params, 1);
            const Word& r1 = p.pres.relators()[0];
            GroupRingElement free_form = fox_derivative(r1, "x1");

            Word mu = Word::generator("mu");
            // mu (1 - mu^-1) = mu - 1 in Z[F]
            GroupRingElement head = GroupRingElement::of_word(mu) - GroupRingElement::one();
            GroupRingElement tail;
            GroupRingElement simplified;
            for (unsigned i = 0; i < m; ++i)
                tail = tail + GroupRingElement::of_word(Word::generator("x1", i));
            simplified = head * tail;

            CHECK_FALSE(free_form == simplified);  // distinct in Z[F] (m >= 1 cases differ)
            PolyMatrix lhs = phi_map(free_form, p.rho, p.alpha);
            PolyMatrix rhs = phi_map(simplified, p.rho, p.alpha);
            CHECK(lhs == rhs);
        }
}
