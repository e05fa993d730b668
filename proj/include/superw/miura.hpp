#pragma once

#include "superw/diffpoly.hpp"
#include "superw/psido.hpp"
#include "superw/state.hpp"
#include "superw/wick.hpp"

namespace superw {

// D^alpha := sum_j binom(alpha, j) (D^j 1) d^(alpha - j) for monic first
// order D = d + f; alpha = eps or a plain integer (same formula).
inline PsiDO power_series(const PsiDO& D, int alpha_base, bool alpha_eps, int depth) {
    if (D.eps_shifted() || D.lead() != 1 || !D.coeff(1).is_one())
        throw std::invalid_argument("power_series needs a monic first-order operator");
    DiffPoly f = D.coeff(0);
    Scalar alpha = Scalar(Rational(alpha_base)) + (alpha_eps ? Scalar::eps() : Scalar(0));
    PsiDO R;
    R.with_flags(alpha_eps, depth, alpha_base);
    DiffPoly dj(Scalar(1)); // D^j 1
    for (int j = 0; j <= depth; ++j) {
        Scalar bin = gen_binomial(j, alpha);
        if (!bin.is_zero() && !dj.is_zero()) R.add(alpha_base - j, bin * dj);
        dj = dj.derive() + f * dj; // apply D
    }
    return R;
}

inline PsiDO frac_power(const PsiDO& D, int depth) { return power_series(D, 0, true, depth); }

// ordinary non-negative power by iterated composition
inline PsiDO int_power(const PsiDO& D, int r, int depth) {
    PsiDO R = PsiDO::dop(DiffPoly(Scalar(1)), 0);
    for (int i = 0; i < r; ++i) R = compose(R, D, depth);
    return R;
}

// Miura factors over t_1..t_{n+1} (variables 0..n):
// D_i = d + eps t_i (i <= n), D_{n+1} = d - eps t_{n+1}
inline PsiDO miura_factor(int n, int i) {
    Scalar eps = Scalar::eps();
    Scalar c = (i <= n) ? eps : -eps;
    PsiDO D = PsiDO::partial();
    D.add(0, DiffPoly(c) * DiffPoly::var(i - 1));
    return D;
}

// L = D_1 ... D_n D_{n+1}^eps, truncated
inline PsiDO miura_operator(int n, int depth) {
    if (n < 1) throw std::invalid_argument("miura_operator needs n >= 1");
    PsiDO R = frac_power(miura_factor(n, n + 1), depth);
    for (int i = n; i >= 1; --i) R = compose(miura_factor(n, i), R, depth);
    return R;
}

// W_1..W_pmax from L = (1 + sum_p W_p d^-p) d^(n+eps)
inline std::vector<DiffPoly> w_coefficients(int n, int pmax, int depth = -1) {
    if (depth < 0) depth = pmax;
    PsiDO L = miura_operator(n, depth);
    std::vector<DiffPoly> w;
    for (int p = 1; p <= pmax; ++p) w.push_back(L.coeff(n - p));
    return w;
}

// eps -> -1 on every coefficient; exponent m+eps becomes the integer m-1
inline DiffPoly critical_specialize(const DiffPoly& f) { return f.specialize_eps(Rational(-1)); }

inline PsiDO critical_specialize(const PsiDO& P) {
    PsiDO R;
    int shift = P.eps_shifted() ? -1 : 0;
    R.with_flags(false, P.depth(), P.stored_lead() + shift);
    for (const auto& [e, f] : P.coeffs()) R.add(e + shift, critical_specialize(f));
    return R;
}

// commutative differential polynomial into the canonical PBW state, given the
// image of each variable as a weight-one state over Heisenberg generators
inline State as_state(const DiffPoly& f, const Algebra& alg, const std::vector<State>& images) {
    for (const auto& s : images)
        for (const auto& [m, c] : s.terms())
            if (m.size() != 1 || m[0].der != 0 || alg.generator(m[0].gen).weight != 1 ||
                alg.generator(m[0].gen).parity != Parity::even)
                throw NonHeisenbergGenerator("as_state needs weight-one even generator images");
    State r(alg);
    for (const auto& [m, c] : f.terms()) {
        State prod = alg.unit();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            prod = normal_product(translate_n(images[(size_t)it->var], it->der), prod);
        r += c * prod;
    }
    return r;
}

// graded component with exactly p symbol factors, as a commutative
// differential polynomial (generator index -> variable index)
inline DiffPoly symbol(const State& a, int p) {
    DiffPoly r;
    for (const auto& [m, c] : a.terms()) {
        if ((int)m.size() != p) continue;
        CMono cm;
        for (const auto& s : m) cm.push_back(CSym{s.gen, s.der});
        std::sort(cm.begin(), cm.end());
        r.add_term(std::move(cm), c);
    }
    return r;
}

// top graded component (largest factor count)
inline DiffPoly symbol_top(const State& a) {
    size_t p = 0;
    for (const auto& [m, c] : a.terms()) p = std::max(p, m.size());
    return symbol(a, (int)p);
}

// --- classical Poisson lambda-bracket on differential polynomials ----------

// {u_i lambda u_j} = gram_ij lambda, extended by the master formula
using ClassicalLambda = std::vector<DiffPoly>; // entry m = coefficient of lambda^m

inline ClassicalLambda classical_lambda_bracket(const DiffPoly& f, const DiffPoly& g,
                                                const std::vector<std::vector<Rational>>& gram) {
    size_t nv = gram.size();
    // collect the derivative orders that actually occur
    auto orders = [&](const DiffPoly& p) {
        std::map<std::pair<int, int>, bool> used;
        for (const auto& [m, c] : p.terms())
            for (const auto& s : m) used[{s.var, s.der}] = true;
        return used;
    };
    auto fo = orders(f), go = orders(g);

    // lambda-polynomials over DiffPoly with the two shift operators
    using LP = std::vector<DiffPoly>;
    auto shift_minus = [&](LP x) { // X -> (-lambda - d) X
        LP r(x.size() + 1);
        for (size_t m = 0; m < x.size(); ++m) {
            r[m + 1] -= x[m];
            r[m] -= x[m].derive();
        }
        return r;
    };
    auto shift_plus = [&](LP x) { // X -> (lambda + d) X
        LP r(x.size() + 1);
        for (size_t m = 0; m < x.size(); ++m) {
            r[m + 1] += x[m];
            r[m] += x[m].derive();
        }
        return r;
    };

    LP acc;
    for (size_t i = 0; i < nv; ++i) {
        // sum_a (-lambda-d)^a df/d(u_i^(a)), assembled once per i
        LP fi;
        for (const auto& [vd, _] : fo) {
            if (vd.first != (int)i) continue;
            DiffPoly pf = f.partial(CSym{vd.first, vd.second});
            if (pf.is_zero()) continue;
            LP x{pf};
            for (int a = 0; a < vd.second; ++a) x = shift_minus(std::move(x));
            if (fi.size() < x.size()) fi.resize(x.size());
            for (size_t m = 0; m < x.size(); ++m) fi[m] += x[m];
        }
        if (fi.empty()) continue;
        for (size_t j = 0; j < nv; ++j) {
            if (gram[i][j] == 0) continue;
            LP mid = shift_plus(fi); // { u_i (lambda+d) u_j } acting to the right
            for (const auto& [vd, _] : go) {
                if (vd.first != (int)j) continue;
                DiffPoly pg = g.partial(CSym{vd.first, vd.second});
                if (pg.is_zero()) continue;
                LP x = mid;
                for (int b = 0; b < vd.second; ++b) x = shift_plus(std::move(x));
                if (acc.size() < x.size()) acc.resize(x.size());
                for (size_t m = 0; m < x.size(); ++m)
                    acc[m] += Scalar(gram[i][j]) * (pg * x[m]);
            }
        }
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return acc;
}

} // namespace superw
