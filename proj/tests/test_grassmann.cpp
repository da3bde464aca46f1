#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "supermorph/grassmann.hpp"

using namespace supermorph;

namespace {

GrassmannElement theta(int k, int i) { return GrassmannElement::generator(k, i); }

} // namespace

TEST_CASE("index sets") {
    const IndexSet s = IndexSet::of({0, 1});
    CHECK(s.size() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(2));
    CHECK(s.describe() == "{1,2}");
    CHECK(IndexSet::empty_set().describe() == "{}");
    CHECK(s.valid_for(2));
    CHECK(!s.valid_for(1));
    CHECK_THROWS_AS(IndexSet::of({-1}), IndexError);
}

TEST_CASE("addition") {
    const int k = 2;
    CHECK(theta(k, 0) + theta(k, 1) ==
          GrassmannElement::basis(k, IndexSet::single(0)) + GrassmannElement::basis(k, IndexSet::single(1)));

    // cancellation restores canonical form
    const GrassmannElement one_plus = GrassmannElement::unit(k) + theta(k, 0);
    const GrassmannElement sum = one_plus + (-theta(k, 0));
    CHECK(sum == GrassmannElement::unit(k));
    CHECK(sum.terms().size() == 1);

    CHECK_THROWS_AS(GrassmannElement::unit(2) + GrassmannElement::unit(3), DimensionMismatchError);
    CHECK_THROWS_AS(GrassmannElement::unit(2) * GrassmannElement::unit(3), DimensionMismatchError);
}

TEST_CASE("zero is the additive identity, randomized") {
    Rng rng(101);
    for (int it = 0; it < 100; ++it) {
        const int k = static_cast<int>(rng.int_in(1, 4));
        const GrassmannElement x = test::random_grassmann(rng, k);
        const GrassmannElement sum = GrassmannElement(k) + x;
        CHECK(sum == x);
        for (const auto& [s, c] : x.terms()) CHECK(sum.coefficient(s) == c);
    }
}

TEST_CASE("basis products and signs") {
    const int k = 2;
    CHECK(theta(k, 0) * theta(k, 1) == GrassmannElement::basis(k, IndexSet::of({0, 1})));
    CHECK(theta(k, 1) * theta(k, 0) == GrassmannElement::basis(k, IndexSet::of({0, 1}), -1));
    CHECK((theta(k, 0) * theta(k, 0)).is_zero());

    const GrassmannElement lhs =
        (GrassmannElement::unit(k) + theta(k, 0)) * (GrassmannElement::unit(k) + theta(k, 1));
    GrassmannElement expected = GrassmannElement::unit(k) + theta(k, 0) + theta(k, 1) +
                                GrassmannElement::basis(k, IndexSet::of({0, 1}));
    CHECK(lhs == expected);
    CHECK(lhs == test::oracle_mul(GrassmannElement::unit(k) + theta(k, 0),
                                  GrassmannElement::unit(k) + theta(k, 1)));
}

TEST_CASE("product agrees with the transposition-count oracle, randomized") {
    Rng rng(202);
    for (int it = 0; it < 300; ++it) {
        const int k = static_cast<int>(rng.int_in(1, 4));
        const GrassmannElement a = test::random_grassmann(rng, k);
        const GrassmannElement b = test::random_grassmann(rng, k);
        CHECK(a * b == test::oracle_mul(a, b));
    }
}

TEST_CASE("coefficient reads") {
    const int k = 2;
    const GrassmannElement e =
        GrassmannElement::unit(k) + GrassmannElement::basis(k, IndexSet::of({0, 1}), 3);
    CHECK(e.coefficient(IndexSet::of({0, 1})) == 3);
    CHECK(GrassmannElement::unit(k).coefficient(IndexSet::single(0)) == 0);
    CHECK_THROWS_AS(e.coefficient(IndexSet::of({2})), IndexError);
}

TEST_CASE("body coefficient of a product is the product of bodies") {
    Rng rng(303);
    for (int it = 0; it < 100; ++it) {
        const int k = static_cast<int>(rng.int_in(1, 4));
        const GrassmannElement a = test::random_grassmann(rng, k);
        const GrassmannElement b = test::random_grassmann(rng, k);
        CHECK((a * b).coefficient(IndexSet::empty_set()) ==
              a.coefficient(IndexSet::empty_set()) * b.coefficient(IndexSet::empty_set()));
    }
}

TEST_CASE("algebra laws, randomized") {
    Rng rng(404);
    for (int it = 0; it < 200; ++it) {
        const int k = static_cast<int>(rng.int_in(1, 4));
        const GrassmannElement a = test::random_grassmann(rng, k);
        const GrassmannElement b = test::random_grassmann(rng, k);
        const GrassmannElement c = test::random_grassmann(rng, k);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(GrassmannElement::unit(k) * a == a);
        CHECK(a * GrassmannElement::unit(k) == a);
    }
}

TEST_CASE("graded anticommutativity and nilpotence on basis elements") {
    const int k = 4;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        const GrassmannElement es = GrassmannElement::basis(k, IndexSet::from_bits(s));
        if (s != 0) CHECK((es * es).is_zero());
        for (std::uint32_t t = 0; t < (1u << k); ++t) {
            const GrassmannElement et = GrassmannElement::basis(k, IndexSet::from_bits(t));
            const int sign_exp = IndexSet::from_bits(s).size() * IndexSet::from_bits(t).size();
            const Rational sign = sign_exp % 2 == 0 ? 1 : -1;
            CHECK(es * et == sign * (et * es));
        }
    }
}
