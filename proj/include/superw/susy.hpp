#pragma once

#include "superw/diffpoly.hpp"
#include "superw/linalg.hpp"

#include <vector>

namespace superw {

// Supersymmetric polynomials in u_1..u_m (vars 0..m-1) and v_1..v_n
// (vars m..m+n-1) and their derivatives.

// s_p = sum u_i^p - (-1)^p sum v_j^p, p > 0
inline DiffPoly power_sum(int m, int n, int p) {
    if (p <= 0) throw std::invalid_argument("power sums are defined for p > 0");
    DiffPoly r;
    for (int i = 0; i < m; ++i) {
        CMono mono((size_t)p, CSym{i, 0});
        r.add_term(std::move(mono), Scalar(1));
    }
    Rational c = (p % 2 == 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) {
        CMono mono((size_t)p, CSym{m + j, 0});
        r.add_term(std::move(mono), Scalar(c));
    }
    return r;
}

// substitute d^j u_m -> d^j t, d^j v_n -> -d^j t; supersymmetric iff no
// t-symbol remains
inline bool is_supersymmetric(const DiffPoly& f, int m, int n) {
    int nv = m + n;
    int t = nv; // fresh variable
    std::vector<DiffPoly> images;
    for (int v = 0; v < nv; ++v) {
        if (v == m - 1) images.push_back(DiffPoly::var(t));
        else if (v == nv - 1) images.push_back(-DiffPoly::var(t));
        else images.push_back(DiffPoly::var(v));
    }
    DiffPoly g = f.substitute(images);
    return !g.uses_var(t);
}

// exact graded dimensions of the differential algebra generated by the power
// sums, by rank computation over the rationals
inline std::vector<long long> affine_graded_dimension(int m, int n, int weight_cap) {
    std::vector<long long> dims((size_t)weight_cap + 1, 0);
    dims[0] = 1;
    // generators d^N s_p of weight p + N <= cap
    struct Gen {
        int weight;
        DiffPoly poly;
    };
    std::vector<Gen> gens;
    for (int p = 1; p <= weight_cap; ++p) {
        DiffPoly sp = power_sum(m, n, p);
        for (int N = 0; p + N <= weight_cap; ++N) gens.push_back({p + N, sp.derive_n(N)});
    }
    // multisets of generators per total weight
    for (int w = 1; w <= weight_cap; ++w) {
        std::vector<DiffPoly> products;
        std::function<void(size_t, int, const DiffPoly&)> rec = [&](size_t start, int rem,
                                                                    const DiffPoly& acc) {
            if (rem == 0) {
                products.push_back(acc);
                return;
            }
            for (size_t g = start; g < gens.size(); ++g) {
                if (gens[g].weight > rem) continue;
                rec(g, rem - gens[g].weight, acc * gens[g].poly);
            }
        };
        rec(0, w, DiffPoly(Scalar(1)));
        // coefficient matrix on the monomial basis of weight w
        std::map<CMono, size_t> cols;
        for (const auto& p : products)
            for (const auto& [mono, c] : p.terms())
                if (!cols.count(mono)) cols.emplace(mono, cols.size());
        RatMatrix M(products.size(), cols.size());
        for (size_t r = 0; r < products.size(); ++r)
            for (const auto& [mono, c] : products[r].terms())
                M.at(r, cols[mono]) = c.constant();
        dims[(size_t)w] = (long long)rank(std::move(M));
    }
    return dims;
}

} // namespace superw
