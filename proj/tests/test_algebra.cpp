#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tapoly/errors.hpp"
#include "tapoly/poly_matrix.hpp"
#include "tapoly/rational_function.hpp"
#include "test_support.hpp"

using namespace tapoly;
using testgen::Rng;

namespace {

IntPoly int_poly(std::initializer_list<long> ascending) {
    IntPoly p;
    for (long c : ascending) p.push_back(Int(c));
    return p;
}

// Independent oracle for Phi_q values: multiply the claimed factorization
// back together and compare against x^q - 1.
IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Laurent t2_plus_1() { return Laurent::from_rationals(0, {1, 0, 1}); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == int_poly({-1, 1}));
    CHECK(cyclotomic_polynomial(3) == int_poly({1, 1, 1}));
    // frozen from dividing x^15-1 by Phi_1 Phi_3 Phi_5 exactly
    CHECK(cyclotomic_polynomial(15) == int_poly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    // multiplication-back oracle
    IntPoly prod = int_mul(int_mul(cyclotomic_polynomial(1), cyclotomic_polynomial(3)),
                           int_mul(cyclotomic_polynomial(5), cyclotomic_polynomial(15)));
    IntPoly x15(16, Int(0));
    x15[0] = -1;
    x15[15] = 1;
    CHECK(prod == x15);
}

TEST_CASE("cyclotomic arithmetic basics") {
    Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK((z3 * z3 * z3).is_one());
    CHECK((Cyclotomic::one(3) + z3) * (Cyclotomic::one(3) + z3.pow(2)) == Cyclotomic::one(3));
    for (unsigned q : {2u, 3u, 5u, 7u, 12u}) {
        Cyclotomic z = Cyclotomic::zeta(q);
        CHECK(z.inverse() == z.pow(static_cast<long>(q) - 1));
    }
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), Error);
}

TEST_CASE("zeta_q has exact order q") {
    for (unsigned q = 1; q <= 45; ++q) {
        Cyclotomic z = Cyclotomic::zeta(q);
        CHECK(z.pow(static_cast<long>(q)).is_one());
        for (unsigned k = 1; k < q; ++k) CHECK_FALSE(z.pow(static_cast<long>(k)).is_one());
        CHECK(z.multiplicative_order() == q);
    }
}

TEST_CASE("field axioms on random samples") {
    Rng rng(20240811);
    for (unsigned q : {1u, 3u, 5u, 15u}) {
        for (int rep = 0; rep < 25; ++rep) {
            Cyclotomic a = testgen::random_cyclotomic(rng, q);
            Cyclotomic b = testgen::random_cyclotomic(rng, q);
            Cyclotomic c = testgen::random_cyclotomic(rng, q);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("embedding") {
    CHECK(Cyclotomic::one(1).embedded(3) == Cyclotomic::one(3));
    CHECK(Cyclotomic::zeta(3).embedded(15) == Cyclotomic::zeta(15, 5));
    // round trip through the bigger field
    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        Cyclotomic a = testgen::random_cyclotomic(rng, 5);
        auto back = a.embedded(15).projected(5);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    // zeta_15 does not lie in Q(zeta_5)
    CHECK_FALSE(Cyclotomic::zeta(15).projected(5).has_value());
    CHECK_THROWS_AS(Cyclotomic::zeta(3).embedded(5), Error);
}

TEST_CASE("delta_sum") {
    CHECK(delta_sum(2, Cyclotomic::one()) == Cyclotomic::integer(3));
    // (1 + b^{k+1}) delta_k(b) = delta_{2k+1}(b)
    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned k = static_cast<unsigned>(rep % 9);
        Cyclotomic b = testgen::random_cyclotomic(rng, 7, 3);
        CHECK((Cyclotomic::one(7) + b.pow(static_cast<long>(k) + 1)) * delta_sum(k, b) ==
              delta_sum(2 * k + 1, b));
    }
    // delta_{k-1}(lambda) = (lambda^k - 1)/(lambda - 1), checked by clearing
    // the denominator
    Cyclotomic lam = Cyclotomic::zeta(7);
    CHECK(delta_sum(2, lam) * (lam - Cyclotomic::one(7)) ==
          lam.pow(3) - Cyclotomic::one(7));
}

TEST_CASE("laurent polynomial basics") {
    Laurent p = Laurent::t(2) + Laurent::t(-1);
    CHECK(p.low_degree() == -1);
    CHECK(p.high_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(Laurent::zero().low_degree() == 0);
    CHECK(Laurent::t(1) * Laurent::t(-1) == Laurent::one());
    // canonical support: no zero padding at the ends
    Laurent q = Laurent::from_rationals(-2, {0, 1, 0, 2, 0});
    CHECK(q.low_degree() == -1);
    CHECK(q.high_degree() == 1);
    CHECK(q.coeff_at(0).is_zero());
}

TEST_CASE("laurent division and gcd") {
    Laurent a = Laurent::from_rationals(0, {1, 0, 1});   // t^2+1
    Laurent b = Laurent::from_rationals(0, {-1, 0, 1});  // t^2-1
    Laurent prod = a * b;
    CHECK(prod.divided_by(a) == b);
    Laurent quot;
    CHECK_FALSE(Laurent::try_divide(a, b, quot));
    CHECK(Laurent::gcd(prod, a.shifted(3)) == a);
    // t^2+1 does not divide t^4-t^2+1: remainder is the constant 3
    Laurent c = Laurent::from_rationals(0, {1, 0, -1, 0, 1});
    CHECK(Laurent::gcd(c, a).is_one());
}

TEST_CASE("determinants: frozen examples") {
    CHECK(PolyMatrix::identity(3).determinant().is_one());
    PolyMatrix d(2, 2);
    d.at(0, 0) = Laurent::t(1);
    d.at(1, 1) = Laurent::t(-1);
    CHECK(d.determinant().is_one());
    // Phi(1 - mu) for the metabelian meridian image: [[1, -t], [t, 1]]
    PolyMatrix m(2, 2);
    m.at(0, 0) = Laurent::one();
    m.at(0, 1) = -Laurent::t(1);
    m.at(1, 0) = Laurent::t(1);
    m.at(1, 1) = Laurent::one();
    CHECK(m.determinant() == t2_plus_1());
    CHECK(PolyMatrix(0, 0).determinant().is_one());
    PolyMatrix s(2, 2);
    s.at(0, 0) = Laurent::one();
    s.at(1, 0) = Laurent::one();
    CHECK(s.determinant().is_zero());
}

TEST_CASE("determinant is multiplicative and routes agree") {
    Rng rng(31415);
    for (int rep = 0; rep < 12; ++rep) {
        unsigned q = rep % 2 == 0 ? 1u : 3u;
        PolyMatrix a(3, 3), b(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                a.at(i, j) = testgen::random_laurent(rng, q);
                b.at(i, j) = testgen::random_laurent(rng, q);
            }
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
    for (size_t n = 1; n <= 4; ++n) {
        PolyMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = testgen::random_laurent(rng, 3);
        CHECK(m.det_bareiss() == m.det_cofactor());
    }
}

TEST_CASE("ratfn_normalize") {
    Laurent t = Laurent::t(1);
    RationalFunction f = ratfn_normalize(t.pow(3) + t, t);
    CHECK(f.is_laurent());
    CHECK(f.numerator() == t2_plus_1());
    CHECK(ratfn_normalize(Laurent::zero(), t2_plus_1()).is_zero());
    // already reduced: t^2+1 does not divide t^4-t^2+1
    Laurent c = Laurent::from_rationals(0, {1, 0, -1, 0, 1});
    RationalFunction g = ratfn_normalize(c, t2_plus_1());
    CHECK(g.numerator() == c);
    CHECK(g.denominator() == t2_plus_1());
    CHECK_THROWS_AS(ratfn_normalize(t, Laurent::zero()), Error);
    // idempotent on random samples
    Rng rng(5);
    for (int rep = 0; rep < 15; ++rep) {
        Laurent num = testgen::random_laurent(rng, 3);
        Laurent den = testgen::random_laurent(rng, 3);
        if (den.is_zero()) continue;
        RationalFunction r = ratfn_normalize(num, den);
        CHECK(ratfn_normalize(r.numerator(), r.denominator()) == r);
    }
}

TEST_CASE("eq_up_to_unit") {
    RationalFunction a = RationalFunction::from_laurent(t2_plus_1());
    RationalFunction b = RationalFunction::from_laurent(-(t2_plus_1().shifted(1)));
    CHECK(eq_up_to_unit(a, b));
    RationalFunction c = RationalFunction::from_laurent(Laurent::from_rationals(0, {-1, 0, 1}));
    CHECK_FALSE(eq_up_to_unit(a, c));
    RationalFunction twice = RationalFunction::from_laurent(t2_plus_1().scaled(Cyclotomic::integer(2)));
    CHECK_FALSE(eq_up_to_unit(a, twice));
    // equivalence relation on generated samples
    Rng rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        Laurent p = testgen::random_laurent(rng, 3);
        if (p.is_zero()) continue;
        RationalFunction f = RationalFunction::from_laurent(p);
        RationalFunction g = RationalFunction::from_laurent(-(p.shifted(2)));
        RationalFunction h = RationalFunction::from_laurent(p.shifted(-1));
        CHECK(eq_up_to_unit(f, f));
        CHECK(eq_up_to_unit(f, g));
        CHECK(eq_up_to_unit(g, f));
        CHECK((eq_up_to_unit(f, g) && eq_up_to_unit(g, h)) == eq_up_to_unit(f, h));
    }
}

TEST_CASE("numeric evaluation") {
    CHECK(t2_plus_1().eval({1.0, 0.0}).real() == doctest::Approx(2.0).epsilon(1e-14));
    // abelian block value of J(2,2) at t = 1: (1 - 1 + 1 + 1)/2 = 1/2
    Laurent num = Laurent::from_rationals(0, {1, 0, -1, 0, 1});
    RationalFunction f = ratfn_normalize(num, t2_plus_1());
    CHECK(std::abs(f.eval({1.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-14));
    Cyclotomic sum = Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2);
    CHECK(std::abs(sum.to_complex() - std::complex<double>(-1.0, 0.0)) < 1e-14);
    CHECK_THROWS_AS(f.eval({0.0, 1.0}), HypothesisFailure);  // pole at t = i
}

TEST_CASE("exact evaluation at roots of unity") {
    Laurent p = Laurent::from_rationals(-1, {1, 2, 3});  // t^-1 + 2 + 3t
    Cyclotomic at1 = p.eval_one();
    CHECK(at1 == Cyclotomic::integer(6));
    CHECK(p.eval_exact(Cyclotomic::one()) == at1);
    Cyclotomic m1 = -Cyclotomic::one();
    CHECK(p.eval_exact(m1) == Cyclotomic::integer(-2));  // -1 + 2 - 3
}
