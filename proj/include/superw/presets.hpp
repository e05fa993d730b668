#pragma once

#include "superw/wick.hpp"

namespace superw {

inline AlgebraSpec heisenberg_spec(const std::vector<std::vector<Scalar>>& gram,
                                   std::vector<std::string> names = {}) {
    AlgebraSpec s;
    size_t r = gram.size();
    for (size_t i = 0; i < r; ++i) {
        std::string nm = i < names.size() ? names[i]
                                          : (r == 1 ? "t" : "t" + std::to_string(i + 1));
        s.generators.push_back({nm, Parity::even, 1});
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j)
            s.brackets[{(int)i, (int)j}] = {Expr::zero(), Expr::scale(gram[i][j], Expr::unit())};
    return s;
}

inline AlgebraSpec bc_pairs_spec(int r, Rational wpsi = Rational(1, 2)) {
    AlgebraSpec s;
    for (int i = 0; i < r; ++i) {
        std::string suf = r == 1 ? "" : std::to_string(i + 1);
        s.generators.push_back({"psi" + suf, Parity::odd, wpsi});
        s.generators.push_back({"psi" + suf + "*", Parity::odd, 1 - wpsi});
    }
    for (int i = 0; i < 2 * r; ++i)
        for (int j = i; j < 2 * r; ++j) {
            bool pair = (j == i + 1) && (i % 2 == 0);
            s.brackets[{i, j}] = pair ? std::vector<Expr>{Expr::unit()} : std::vector<Expr>{};
        }
    return s;
}

inline AlgebraSpec betagamma_pairs_spec(int r, Rational wa = Rational(1, 2)) {
    AlgebraSpec s;
    for (int i = 0; i < r; ++i) {
        std::string suf = r == 1 ? "" : std::to_string(i + 1);
        s.generators.push_back({"a" + suf, Parity::even, wa});
        s.generators.push_back({"a" + suf + "*", Parity::even, 1 - wa});
    }
    for (int i = 0; i < 2 * r; ++i)
        for (int j = i; j < 2 * r; ++j) {
            bool pair = (j == i + 1) && (i % 2 == 0);
            s.brackets[{i, j}] = pair ? std::vector<Expr>{Expr::unit()} : std::vector<Expr>{};
        }
    return s;
}

// jet-scheme coordinates: all brackets vanish
inline AlgebraSpec degenerate_betagamma_pairs_spec(int r, Rational w = 1) {
    AlgebraSpec s;
    for (int i = 0; i < r; ++i) {
        std::string suf = r == 1 ? "" : std::to_string(i + 1);
        s.generators.push_back({"a" + suf, Parity::even, w});
        s.generators.push_back({"a" + suf + "*", Parity::even, w});
    }
    for (int i = 0; i < 2 * r; ++i)
        for (int j = i; j < 2 * r; ++j) s.brackets[{i, j}] = {};
    return s;
}

// gl(m|n) structure data
inline int gl_parity(int m, int i) { return i < m ? 0 : 1; } // 0-based row/col
inline Rational gl_kappaV(int m, int /*n*/, int a, int b, int c, int d) {
    // str(e_ab e_cd) = delta_{bc} delta_{ad} (-1)^{p(a)}
    if (b == c && a == d) return gl_parity(m, a) ? -1 : 1;
    return 0;
}
inline Rational gl_str(int m, int a, int b) {
    if (a != b) return 0;
    return gl_parity(m, a) ? -1 : 1;
}

// Affine gl(m|n) at the level form kappa = (k+h^vee) kappa_V - (1/2) kappa_g,
// parametrized by the Scalar value of k+h^vee (symbolic (eps+1)/eps by
// default; 0 is the critical level).
inline AlgebraSpec affine_gl_spec(int m, int n, Scalar level = Scalar::level()) {
    AlgebraSpec s;
    int N = m + n;
    auto idx = [N](int a, int b) { return a * N + b; };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Parity p = ((gl_parity(m, a) + gl_parity(m, b)) % 2) ? Parity::odd : Parity::even;
            s.generators.push_back(
                {"e" + std::to_string(a + 1) + std::to_string(b + 1), p, 1});
        }
    // kappa(u,v) = (level - (m-n)) kappa_V(u,v) + str(u)str(v)
    Scalar lshift = level - Scalar(Rational(m - n));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    int i = idx(a, b), j = idx(c, d);
                    if (i > j) continue;
                    int pij = (gl_parity(m, a) + gl_parity(m, b)) % 2;
                    int pcd = (gl_parity(m, c) + gl_parity(m, d)) % 2;
                    std::vector<Expr> lam;
                    // [e_ab, e_cd] = d_{bc} e_ad - (-1)^{p p'} d_{da} e_cb
                    std::vector<Expr> comm;
                    if (b == c) comm.push_back(Expr::gen(idx(a, d)));
                    if (d == a) {
                        Scalar sgn((pij && pcd) ? 1 : -1);
                        comm.push_back(Expr::scale(sgn, Expr::gen(idx(c, b))));
                    }
                    Scalar kap = lshift * Scalar(gl_kappaV(m, n, a, b, c, d)) +
                                 Scalar(gl_str(m, a, b) * gl_str(m, c, d));
                    if (!comm.empty() || !kap.is_zero()) {
                        lam.push_back(comm.empty() ? Expr::zero() : Expr::sum(std::move(comm)));
                        if (!kap.is_zero()) lam.push_back(Expr::scale(kap, Expr::unit()));
                    }
                    s.brackets[{i, j}] = std::move(lam);
                }
    return s;
}

// tensor product: generators side by side, cross brackets zero
inline AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b) {
    AlgebraSpec s = a;
    int off = (int)a.generators.size();
    for (const auto& g : b.generators) s.generators.push_back(g);
    for (const auto& [ij, lam] : b.brackets) {
        std::vector<Expr> shifted;
        for (const auto& e : lam) shifted.push_back(e.shifted(off));
        s.brackets[{ij.first + off, ij.second + off}] = std::move(shifted);
    }
    return s;
}

inline Algebra heisenberg(const std::vector<std::vector<Scalar>>& gram,
                          std::vector<std::string> names = {}) {
    return build_algebra(heisenberg_spec(gram, std::move(names)));
}
inline Algebra bc_pairs(int r) { return build_algebra(bc_pairs_spec(r)); }
inline Algebra betagamma_pairs(int r) { return build_algebra(betagamma_pairs_spec(r)); }
inline Algebra degenerate_betagamma_pairs(int r) {
    return build_algebra(degenerate_betagamma_pairs_spec(r));
}
inline Algebra affine_gl(int m, int n, Scalar level = Scalar::level()) {
    return build_algebra(affine_gl_spec(m, n, std::move(level)));
}

} // namespace superw
