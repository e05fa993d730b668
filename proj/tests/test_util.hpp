#pragma once

#include "superw/presets.hpp"
#include "superw/wick.hpp"

namespace superw::testutil {

// random canonical state built through engine insertions; parity homogeneous
inline State random_state(const Algebra& alg, Rng& rng, int max_syms = 3, int max_der = 2,
                          int terms = 2) {
    State acc(alg);
    Parity par = Parity::even;
    bool have = false;
    for (int t = 0; t < terms; ++t) {
        int k = 1 + (int)rng.below((uint64_t)max_syms);
        State m = alg.unit();
        Parity p = Parity::even;
        for (int i = 0; i < k; ++i) {
            int g = (int)rng.below(alg.size());
            int d = (int)rng.below((uint64_t)max_der + 1);
            m = engine::insert_sym(alg, Symbol{g, d}, m);
            p = p ^ alg.generator(g).parity;
        }
        if (m.is_zero()) continue;
        if (!have) {
            par = p;
            have = true;
        } else if (p != par) {
            continue; // keep parity homogeneous
        }
        acc += Scalar(rng.small_rational()) * m;
    }
    if (acc.is_zero()) acc = alg.gen((int)rng.below(alg.size()));
    return acc;
}

inline LambdaPoly skew_of(const State& a, const State& b, const LambdaPoly& ab) {
    // [b lambda a] predicted from [a lambda b]
    const Algebra& alg = a.algebra();
    Scalar sgn = (a.parity() == Parity::odd && b.parity() == Parity::odd) ? Scalar(1) : Scalar(-1);
    LambdaPoly out;
    int nmax = (int)ab.c.size();
    out.c.assign((size_t)nmax + 1, alg.zero());
    for (int n = 0; n <= nmax; ++n) {
        State c(alg);
        for (int k = 0; n + k < (int)ab.c.size(); ++k) {
            const State& s = ab.c[(size_t)(n + k)];
            if (s.is_zero()) continue;
            Scalar c0 = sgn * Scalar(Rational(((n + k) % 2 == 0) ? 1 : -1)) *
                        (factorial(n + k) / (factorial(k) * factorial(n)));
            c += c0 * translate_n(s, k);
        }
        out.c[(size_t)n] = std::move(c);
    }
    out.trim();
    return out;
}

} // namespace superw::testutil
