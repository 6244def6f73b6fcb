#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tapoly/errors.hpp"
#include "tapoly/fox.hpp"
#include "tapoly/presentation.hpp"
#include "test_support.hpp"

using namespace tapoly;
using testgen::Rng;

TEST_CASE("parse_word") {
    Word w = parse_word("mu x1^2 mu^-1");
    REQUIRE(w.syllables().size() == 3);
    CHECK(w.syllables()[0] == Syllable{"mu", 1});
    CHECK(w.syllables()[1] == Syllable{"x1", 2});
    CHECK(w.syllables()[2] == Syllable{"mu", -1});
    CHECK(parse_word("x1 x1^-1").is_identity());
    CHECK(parse_word("  ").is_identity());
    CHECK(parse_word("mu x1^3 mu^-1 x2 x1^-3").str() == "mu x1^3 mu^-1 x2 x1^-3");

    CHECK_THROWS_AS(parse_word("x1^0"), ParseError);
    CHECK_THROWS_AS(parse_word("x1^"), ParseError);
    CHECK_THROWS_AS(parse_word("^2"), ParseError);
    CHECK_THROWS_AS(parse_word("2x"), ParseError);
    try {
        parse_word("mu x1^0");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);  // the digit of the zero exponent
    }
}

TEST_CASE("render round-trips") {
    Rng rng(42);
    std::vector<std::string> gens = {"a", "b2", "c_3"};
    for (int rep = 0; rep < 50; ++rep) {
        Word w = testgen::random_word(rng, gens);
        CHECK(parse_word(w.str()) == w);
    }
}

TEST_CASE("free reduction") {
    Word x = Word::generator("x"), y = Word::generator("y");
    CHECK(x * y * y.inverse() * x == Word::generator("x", 2));
    CHECK((x * y).inverse() * (x * y) == Word::identity());
    Word r1 = parse_word("mu x1 mu^-1 x2 x1^-1");
    CHECK((r1 * r1.inverse()).is_identity());
    CHECK(free_reduce({{"x", 2}, {"x", -2}}).is_identity());
}

TEST_CASE("fox derivative basics") {
    Word xy = parse_word("x y");
    CHECK(fox_derivative(xy, "y") == GroupRingElement::of_word(Word::generator("x")));
    CHECK(fox_derivative(xy, "x") == GroupRingElement::one());
    CHECK(fox_derivative(xy, "z").is_zero());
    // d(x^m)/dx = 1 + x + ... + x^{m-1}
    for (long m = 1; m <= 5; ++m) {
        GroupRingElement expect;
        for (long i = 0; i < m; ++i)
            expect = expect + GroupRingElement::of_word(Word::generator("x", i));
        CHECK(fox_derivative(Word::generator("x", m), "x") == expect);
    }
    // d(x^-1)/dx = -x^-1
    CHECK(fox_derivative(Word::generator("x", -1), "x") ==
          -GroupRingElement::of_word(Word::generator("x", -1)));
}

TEST_CASE("fox derivative of the Lin relator") {
    // r2 = mu x2^-n x1 mu^-1 x2^n has dr2/dx1 = mu x2^-n
    for (long n = 1; n <= 4; ++n) {
        Word r2 = parse_word("mu x2^-" + std::to_string(n) + " x1 mu^-1 x2^" + std::to_string(n));
        Word expect = Word::generator("mu") * Word::generator("x2", -n);
        CHECK(fox_derivative(r2, "x1") == GroupRingElement::of_word(expect));
    }
}

TEST_CASE("fox product rule on random words") {
    Rng rng(777);
    std::vector<std::string> gens = {"a", "b", "c"};
    for (int rep = 0; rep < 100; ++rep) {
        Word u = testgen::random_word(rng, gens, 8);
        Word v = testgen::random_word(rng, gens, 8);
        for (const auto& g : gens) {
            GroupRingElement lhs = fox_derivative(u * v, g);
            GroupRingElement rhs =
                fox_derivative(u, g) + GroupRingElement::of_word(u) * fox_derivative(v, g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fox fundamental identity") {
    // w - 1 = sum_g (dw/dg) (g - 1) in Z[F]
    Rng rng(2024);
    std::vector<std::string> gens = {"a", "b", "c"};
    for (int rep = 0; rep < 100; ++rep) {
        Word w = testgen::random_word(rng, gens, 12);
        GroupRingElement lhs =
            GroupRingElement::of_word(w) - GroupRingElement::one();
        GroupRingElement rhs;
        for (const auto& g : gens) {
            GroupRingElement gm1 = GroupRingElement::of_word(Word::generator(g)) -
                                   GroupRingElement::one();
            rhs = rhs + fox_derivative(w, g) * gm1;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(Presentation({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Presentation({"a"}, {parse_word("b")}), Error);
    CHECK_THROWS_AS(Presentation({"a"}, {}, "m"), Error);
    Presentation p({"x1", "x2", "mu"}, {parse_word("mu x1 mu^-1 x2 x1^-1")}, "mu");
    CHECK(p.deficiency() == 2);
    CHECK(p.generator_index("x2") == 1);
}

TEST_CASE("abelianization of the Lin presentation") {
    Presentation p({"x1", "x2", "mu"},
                   {parse_word("mu x1 mu^-1 x2 x1^-1"), parse_word("mu x2^-1 x1 mu^-1 x2")},
                   "mu");
    Abelianization alpha = abelianize(p);
    CHECK(alpha.degree("x1") == 0);
    CHECK(alpha.degree("x2") == 0);
    CHECK(alpha.degree("mu") == 1);
    // relator weighted sums vanish
    for (const auto& r : p.relators()) CHECK(alpha.degree_of_word(r) == 0);
}

TEST_CASE("abelianization rejections and edge cases") {
    // H1 = Z^2: kernel rank 2
    Presentation commutator({"a", "b"}, {parse_word("a b a^-1 b^-1")});
    CHECK_THROWS_AS(abelianize(commutator), HypothesisFailure);
    // torsion: H1 = Z/2 + Z
    Presentation torsion({"a", "b"}, {parse_word("a^2")});
    CHECK_THROWS_AS(abelianize(torsion), HypothesisFailure);
    // deficiency != 1
    Presentation def0({"a"}, {parse_word("a")});
    CHECK_THROWS_AS(abelianize(def0), TapUndefined);
    // kernel of the 1x2 matrix (0, -1): degrees (1, 0)
    Presentation odd({"a", "b"}, {parse_word("a b^2 a^-1 b^-3")});
    Abelianization alpha = abelianize(odd);
    CHECK(alpha.degree("a") == 1);
    CHECK(alpha.degree("b") == 0);
    // unknot: no relators at all
    Presentation unknot({"mu"}, {}, "mu");
    CHECK(abelianize(unknot).degree("mu") == 1);
}

TEST_CASE("abelianization orientation follows the marked meridian") {
    // relator a b: kernel (1, -1); 'b' marked => degrees (-1, 1)
    Presentation p({"a", "b"}, {parse_word("a b")}, "b");
    Abelianization alpha = abelianize(p);
    CHECK(alpha.degree("b") == 1);
    CHECK(alpha.degree("a") == -1);
}
