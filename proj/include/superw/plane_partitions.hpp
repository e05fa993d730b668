#pragma once

#include "superw/qseries.hpp"

#include <optional>
#include <vector>

namespace superw {

// weakly decreasing non-negative integer matrix with finite support
struct PlanePartition {
    std::vector<std::vector<int>> rows; // trailing zeros trimmed

    long long weight() const {
        long long w = 0;
        for (const auto& r : rows)
            for (int x : r) w += x;
        return w;
    }
    int at(size_t i, size_t j) const { // 1-based
        if (i == 0 || j == 0) return 0;
        if (i > rows.size()) return 0;
        const auto& r = rows[i - 1];
        if (j > r.size()) return 0;
        return r[j - 1];
    }
};

// pit (i,j): lambda_{i,j} = 0 (1-based coordinates)
inline bool has_pit(const PlanePartition& l, size_t i, size_t j) { return l.at(i, j) == 0; }

// Exact counts per weight 0..cap of plane partitions, optionally subject to a
// pit condition. Plain recursive row-by-row generation with monotonicity
// pruning and a weight budget; rows are generated as weakly decreasing
// sequences bounded above by the previous row.
namespace ppdetail {

// enumerate weakly decreasing rows r with r[j] <= bound[j] and sum <= budget;
// calls f(row, rowsum)
template <class F>
void gen_rows_all(const std::vector<int>& bound, int budget, F&& f) {
    std::vector<int> row(bound.size(), 0);
    // iterate over values in decreasing feasibility: simple loop over all
    // weakly decreasing rows
    struct Rec {
        const std::vector<int>& bound;
        int budget;
        std::vector<int>& row;
        F& f;
        void go(size_t j, int prev, int sum) {
            if (j == bound.size()) {
                f(row, sum);
                return;
            }
            int cap = std::min({prev, bound[j], budget - sum});
            for (int v = cap; v >= 0; --v) {
                row[j] = v;
                go(j + 1, v, sum + v);
            }
        }
    } rec{bound, budget, row, f};
    rec.go(0, budget, 0);
}

template <class F>
void gen_partition(std::vector<int> prev_row, int remaining, size_t row_index,
                   const std::optional<std::pair<size_t, size_t>>& pit, long long used, F&& f,
                   size_t width) {
    f(used);
    if (remaining == 0) return;
    // next row bounded by the previous row entrywise; apply the pit bound
    std::vector<int> bound = prev_row;
    if (pit && row_index + 1 >= pit->first) {
        for (size_t j = pit->second - 1; j < bound.size(); ++j) bound[j] = 0;
    }
    // width limited by remaining weight anyway
    gen_rows_all(bound, remaining, [&](const std::vector<int>& row, int sum) {
        if (sum == 0) return; // all-zero rows terminate the partition
        gen_partition(row, remaining - sum, row_index + 1, pit, used + sum,
                      std::forward<F>(f), width);
    });
}

} // namespace ppdetail

inline std::vector<long long> enumerate_plane_partitions(
    int weight_cap, std::optional<std::pair<size_t, size_t>> pit = std::nullopt) {
    std::vector<long long> counts((size_t)weight_cap + 1, 0);
    // first rows: weakly decreasing with sum <= cap; support fits in a
    // cap x cap box
    std::vector<int> bound((size_t)weight_cap, weight_cap);
    if (pit && pit->first == 1) {
        for (size_t j = pit->second - 1; j < bound.size(); ++j) bound[j] = 0;
    }
    auto record = [&](long long used) { counts[(size_t)used] += 1; };
    if (weight_cap == 0) {
        counts[0] = 1;
        return counts;
    }
    // the empty partition
    counts[0] += 1;
    ppdetail::gen_rows_all(bound, weight_cap, [&](const std::vector<int>& row, int sum) {
        if (sum == 0) return;
        ppdetail::gen_partition(row, weight_cap - sum, 1, pit, sum, record,
                                (size_t)weight_cap);
    });
    return counts;
}

// MacMahon: prod_{n>0} (1-q^n)^{-n}
inline QSeries macmahon(int trunc) {
    QSeries r = QSeries::one(trunc);
    for (long long n = 1; n <= trunc; ++n) {
        QSeries f = QSeries::one(trunc);
        f.add(2 * n, Rational(-1));
        QSeries inv = f.inverse();
        for (long long k = 0; k < n; ++k) r = r * inv;
    }
    return r;
}

} // namespace superw
