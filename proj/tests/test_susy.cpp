#include <catch2/catch_amalgamated.hpp>

#include "superw/plane_partitions.hpp"
#include "superw/susy.hpp"

using namespace superw;

TEST_CASE("power sums") {
    // (1,1,1) -> u1 + v1
    DiffPoly s1 = power_sum(1, 1, 1);
    REQUIRE(s1 == DiffPoly::var(0) + DiffPoly::var(1));
    // (2,1,2) -> u1^2 + u2^2 - v1^2
    DiffPoly s2 = power_sum(2, 1, 2);
    DiffPoly u1 = DiffPoly::var(0), u2 = DiffPoly::var(1), v1 = DiffPoly::var(2);
    REQUIRE(s2 == u1 * u1 + u2 * u2 - v1 * v1);
    REQUIRE_THROWS_AS(power_sum(1, 1, 0), std::invalid_argument);
}

TEST_CASE("supersymmetry substitution test") {
    REQUIRE(is_supersymmetric(power_sum(1, 1, 3), 1, 1));
    REQUIRE(is_supersymmetric(power_sum(2, 1, 2), 2, 1));
    REQUIRE_FALSE(is_supersymmetric(DiffPoly::var(0), 1, 1));
    // closure under products and derivatives on random supersymmetric inputs
    Rng rng(808);
    for (int it = 0; it < 12; ++it) {
        int m = 1 + (int)rng.below(2), n = 1;
        DiffPoly f(Scalar(1)), g(Scalar(1));
        for (int t = 0; t < 2; ++t) {
            f = f * power_sum(m, n, 1 + (int)rng.below(3)).derive_n((int)rng.below(2));
            g = g * power_sum(m, n, 1 + (int)rng.below(3));
        }
        REQUIRE(is_supersymmetric(f * g, m, n));
        REQUIRE(is_supersymmetric((f + g).derive(), m, n));
    }
}

TEST_CASE("affine graded dimensions") {
    auto d = affine_graded_dimension(1, 1, 8);
    REQUIRE(d[0] == 1);
    REQUIRE(d[1] == 1); // spanned by s_1
    // matches pit-(2,2) plane partition counts
    auto counts = enumerate_plane_partitions(8, std::make_pair<size_t, size_t>(2, 2));
    for (size_t w = 0; w <= 8; ++w) REQUIRE(d[w] == counts[w]);
}
