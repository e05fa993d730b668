#include <catch2/catch_amalgamated.hpp>

#include "superw/plane_partitions.hpp"
#include "superw/qcombi.hpp"

using namespace superw;

TEST_CASE("enumeration basics") {
    auto c0 = enumerate_plane_partitions(0);
    REQUIRE(c0 == std::vector<long long>{1});
    // pit (1,1) forces the empty partition
    auto c11 = enumerate_plane_partitions(6, std::make_pair<size_t, size_t>(1, 1));
    REQUIRE(c11 == std::vector<long long>{1, 0, 0, 0, 0, 0, 0});
    // unrestricted counts match MacMahon's product
    auto c = enumerate_plane_partitions(12);
    QSeries mm = macmahon(12);
    long long first[] = {1, 1, 3, 6, 13, 24};
    for (int i = 0; i <= 5; ++i) REQUIRE(c[(size_t)i] == first[i]);
    for (int i = 0; i <= 12; ++i) REQUIRE(Rational(c[(size_t)i]) == mm.coeff(i));
    REQUIRE(mm.coeff(0) == 1);
}

TEST_CASE("pit predicate on the worked example") {
    PlanePartition l{{{2, 2, 1, 0}, {1, 1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}};
    REQUIRE(has_pit(l, 1, 4));
    REQUIRE(has_pit(l, 3, 2));
    REQUIRE(has_pit(l, 4, 1));
    REQUIRE_FALSE(has_pit(l, 2, 2));
    REQUIRE_FALSE(has_pit(l, 1, 3));
    PlanePartition empty{};
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = 1; j <= 3; ++j) REQUIRE(has_pit(empty, i, j));
}

TEST_CASE("pit counts are monotone and transpose-symmetric") {
    auto all = enumerate_plane_partitions(10);
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = i; j <= 3; ++j) {
            auto cij = enumerate_plane_partitions(10, std::make_pair(i, j));
            auto cji = enumerate_plane_partitions(10, std::make_pair(j, i));
            for (size_t w = 0; w <= 10; ++w) {
                REQUIRE(cij[w] <= all[w]);
                REQUIRE(cij[w] == cji[w]); // row/column transpose symmetry
            }
        }
}

TEST_CASE("pit generating functions count pit-restricted partitions") {
    // F_{1,n} vs brute force with pit (2, n+1)
    for (int n = 1; n <= 3; ++n) {
        auto counts = enumerate_plane_partitions(10, std::make_pair<size_t, size_t>(2, n + 1));
        QSeries f = pit_gf_formula(1, n, 10);
        for (int w = 0; w <= 10; ++w) REQUIRE(f.coeff(w) == counts[(size_t)w]);
    }
    // one m = 2 cross-check of the general formula
    auto counts = enumerate_plane_partitions(9, std::make_pair<size_t, size_t>(3, 3));
    QSeries f = pit_gf_formula(2, 2, 9);
    for (int w = 0; w <= 9; ++w) REQUIRE(f.coeff(w) == counts[(size_t)w]);
}
