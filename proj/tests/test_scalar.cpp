#include <catch2/catch_amalgamated.hpp>

#include "superw/scalar.hpp"

using namespace superw;

namespace {
Scalar eps() { return Scalar::eps(); }
}

TEST_CASE("rational function arithmetic is exact and canonical") {
    Scalar a = eps() / (eps() + Scalar(1));
    Scalar b = Scalar(1) / (eps() + Scalar(1));
    REQUIRE(a + b == Scalar(1));
    REQUIRE((a * (eps() + Scalar(1))) == eps());
    Scalar c = (eps() * eps() - Scalar(1)) / (eps() - Scalar(1));
    REQUIRE(c == eps() + Scalar(1)); // common factor cancelled on construction
    REQUIRE((a - a).is_zero());
}

TEST_CASE("field axioms on random samples, canonical form idempotent") {
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        auto rnd = [&]() {
            Scalar s(rng.small_rational());
            if (rng.below(2)) s = s * eps() + Scalar(rng.small_rational());
            if (rng.below(3) == 0) s = s / (eps() + Scalar(Rational(1 + (long long)rng.below(3))));
            return s;
        };
        Scalar x = rnd(), y = rnd(), z = rnd();
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE(x * y == y * x);
        if (!x.is_zero()) REQUIRE(x / x == Scalar(1));
        // canonical form is idempotent: rebuilding from num/den is a no-op
        REQUIRE(Scalar(x.num(), x.den()) == x);
    }
}

TEST_CASE("gen_binomial basics") {
    REQUIRE(gen_binomial(0, eps()) == Scalar(1));
    Scalar expect = eps() * (eps() - Scalar(1)) / Scalar(2);
    REQUIRE(gen_binomial(2, eps()) == expect);
    // binom(-1, j) = (-1)^j
    REQUIRE(gen_binomial(3, Scalar(-1)) == Scalar(-1));
    REQUIRE(gen_binomial(4, Scalar(-1)) == Scalar(1));
}

TEST_CASE("gen_binomial satisfies the Pascal identity") {
    Rng rng(11);
    for (int j = 1; j <= 6; ++j) {
        Scalar alpha = eps() + Scalar(rng.small_rational());
        Scalar lhs = gen_binomial(j, alpha);
        Scalar rhs = gen_binomial(j, alpha - Scalar(1)) + gen_binomial(j - 1, alpha - Scalar(1));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("evaluation and poles") {
    Scalar s = eps() / (eps() + Scalar(1));
    REQUIRE(evaluate(s, Rational(1)) == Rational(1, 2));
    Scalar level = Scalar::level(); // (eps+1)/eps
    REQUIRE(evaluate(level, Rational(-1)) == Rational(0));
    Scalar pref = -eps() / (eps() + Scalar(1)); // -1/(k+h_vee)
    REQUIRE_THROWS_AS(evaluate(pref, Rational(-1)), PoleAtEvaluation);
}

TEST_CASE("canonical text rendering uses integer coefficients") {
    Scalar s = (eps() + Scalar(1)) / eps();
    REQUIRE(s.str() == "(eps + 1)/(eps)");
    Scalar t = Scalar(Rational(3, 2)) * eps();
    REQUIRE(t.str() == "(3*eps)/2");
    REQUIRE(Scalar(0).str() == "0");
}
