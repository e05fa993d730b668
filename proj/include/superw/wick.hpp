#pragma once

#include "superw/state.hpp"

#include <cassert>

namespace superw {

inline int int_floor(const Rational& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return (int)q.convert_to<long long>();
}

inline Scalar factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Scalar(f);
}

inline Rational binom_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace engine {

State np_mono(const Algebra& alg, const Mono& A, const Mono& B, int n);

inline State np_state(const Algebra& alg, const State& a, const State& b, int n) {
    State r(alg);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r += (ca * cb) * np_mono(alg, ma, mb, n);
    return r;
}

inline State insert_sym(const Algebra& alg, Symbol f, const State& x) {
    State r(alg);
    for (const auto& [m, c] : x.terms()) r += c * np_mono(alg, Mono{f}, m, -1);
    return r;
}

inline Parity mono_parity(const Algebra& alg, const Mono& m) {
    Parity p = Parity::even;
    for (const auto& s : m) p = p ^ alg.parity(s);
    return p;
}

inline Rational mono_weight(const Algebra& alg, const Mono& m) {
    Rational w = 0;
    for (const auto& s : m) w += alg.sym_weight(s);
    return w;
}

inline State mono_as_state(const Algebra& alg, const Mono& m) {
    State s(alg);
    s.add_term(m, Scalar(1));
    return s;
}

inline Scalar koszul(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? Scalar(-1) : Scalar(1);
}

} // namespace engine

inline State translate(const State& a) {
    const Algebra& alg = a.algebra();
    State r(alg);
    for (const auto& [m, c] : a.terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            // Leibniz: bump the i-th symbol, then rebuild the word by
            // normally ordered insertion (corrections vanish for abelian
            // mode algebras, re-sorting is exact in general).
            Mono suffix(m.begin() + (long)i + 1, m.end());
            State x = engine::mono_as_state(alg, suffix);
            x = engine::insert_sym(alg, Symbol{m[i].gen, m[i].der + 1}, x);
            for (size_t k = i; k-- > 0;) x = engine::insert_sym(alg, m[k], x);
            r += c * x;
        }
    }
    return r;
}

inline State translate_n(State s, int k) {
    for (int i = 0; i < k; ++i) s = translate(s);
    return s;
}

namespace engine {

// a_(n)b at the monomial level, n >= -1 directly, n <= -2 via derivatives.
inline State np_mono(const Algebra& alg, const Mono& A, const Mono& B, int n) {
    if (n <= -2) {
        int k = -1 - n;
        State da = translate_n(mono_as_state(alg, A), k);
        Scalar inv = Scalar(1) / factorial(k);
        return inv * np_state(alg, da, mono_as_state(alg, B), -1);
    }
    if (A.empty()) return n == -1 ? mono_as_state(alg, B) : alg.zero();
    if (B.empty()) return n == -1 ? mono_as_state(alg, A) : alg.zero();

    auto* impl = alg.impl();
    std::unique_lock<std::recursive_mutex> lk(impl->mu);
    auto key = std::make_tuple(A, B, n);
    if (auto it = impl->memo.find(key); it != impl->memo.end()) return it->second;
    if (!impl->in_progress.insert(key).second)
        throw std::logic_error("cyclic product recursion; inconsistent bracket table");

    State r(alg);
    const Symbol f = A.front();
    const Rational wA = mono_weight(alg, A), wB = mono_weight(alg, B);

    if (n == -1) {
        if (A.size() == 1) {
            const Symbol h = B.front();
            if (f < h || (f == h && alg.parity(f) == Parity::even)) {
                Mono m;
                m.reserve(B.size() + 1);
                m.push_back(f);
                m.insert(m.end(), B.begin(), B.end());
                r.add_term(m, Scalar(1));
            } else {
                Mono rest(B.begin() + 1, B.end());
                State rest_state = mono_as_state(alg, rest);
                if (f == h) {
                    // repeated odd symbol: 2 f(f c) = sum of contraction terms
                    int jmax = int_floor(2 * alg.sym_weight(f) - 1);
                    for (int j = 0; j <= jmax; ++j) {
                        State s = np_mono(alg, Mono{f}, Mono{f}, j);
                        if (s.is_zero()) continue;
                        Scalar c = Scalar(Rational((j % 2 == 0) ? 1 : -1, 2)) / factorial(j + 1);
                        r += c * np_state(alg, translate_n(s, j + 1), rest_state, -1);
                    }
                } else {
                    State inner = np_mono(alg, Mono{f}, rest, -1);
                    r += koszul(alg.parity(f), alg.parity(h)) * insert_sym(alg, h, inner);
                    int jmax = int_floor(alg.sym_weight(f) + alg.sym_weight(h) - 1);
                    for (int j = 0; j <= jmax; ++j) {
                        State s = np_mono(alg, Mono{f}, Mono{h}, j);
                        if (s.is_zero()) continue;
                        Scalar c = Scalar(Rational((j % 2 == 0) ? 1 : -1)) / factorial(j + 1);
                        r += c * np_state(alg, translate_n(s, j + 1), rest_state, -1);
                    }
                }
            }
        } else {
            // quasi-associativity: (f C)_(-1) B
            Mono C(A.begin() + 1, A.end());
            State cb = np_mono(alg, C, B, -1);
            r += insert_sym(alg, f, cb);
            const Rational wC = mono_weight(alg, C);
            int jmax = int_floor(wC + wB - 1);
            for (int j = 0; j <= jmax; ++j) {
                State x = np_mono(alg, C, B, j);
                if (x.is_zero()) continue;
                Scalar c = Scalar(1) / factorial(j + 1);
                r += c * insert_sym(alg, Symbol{f.gen, f.der + j + 1}, x);
            }
            Scalar sgn = koszul(alg.parity(f), mono_parity(alg, C));
            int jmax2 = int_floor(alg.sym_weight(f) + wB - 1);
            State cs = mono_as_state(alg, C);
            for (int j = 0; j <= jmax2; ++j) {
                State y = np_mono(alg, Mono{f}, B, j);
                if (y.is_zero()) continue;
                Scalar c = sgn / factorial(j + 1);
                r += c * np_state(alg, translate_n(cs, j + 1), y, -1);
            }
        }
    } else if (A.size() == 1) {
        if (f.der > 0) {
            if (n > 0) {
                r = Scalar(-n) * np_mono(alg, Mono{Symbol{f.gen, f.der - 1}}, B, n - 1);
            }
        } else if (B.size() == 1) {
            const Symbol h = B.front();
            if (h.der > 0) {
                Mono hb{Symbol{h.gen, h.der - 1}};
                r = translate(np_mono(alg, A, hb, n));
                if (n > 0) r += Scalar(n) * np_mono(alg, A, hb, n - 1);
            } else {
                const auto& cs = alg.bracket_coeffs(f.gen, h.gen);
                if ((size_t)n < cs.size()) r = factorial(n) * cs[(size_t)n];
                else r = alg.zero();
            }
        } else {
            // non-commutative Wick recursion: a_(n)(h C)
            const Symbol h = B.front();
            Mono C(B.begin() + 1, B.end());
            State inner = np_mono(alg, A, C, n);
            r += koszul(alg.parity(f), alg.parity(h)) * insert_sym(alg, h, inner);
            State cstate = mono_as_state(alg, C);
            for (int j = 0; j <= n; ++j) {
                State s = np_mono(alg, A, Mono{h}, j);
                if (s.is_zero()) continue;
                r += Scalar(binom_int(n, j)) * np_state(alg, s, cstate, n - 1 - j);
            }
        }
    } else {
        // composite left factor: (f C)_(n) B
        Mono C(A.begin() + 1, A.end());
        const Rational wC = mono_weight(alg, C);
        int jcap = int_floor(wC + wB - 1) - n;
        for (int j = 0; j <= jcap; ++j) {
            State x = np_mono(alg, C, B, n + j);
            if (x.is_zero()) continue;
            Scalar c = Scalar(1) / factorial(j);
            r += c * insert_sym(alg, Symbol{f.gen, f.der + j}, x);
        }
        Scalar sgn = koszul(alg.parity(f), mono_parity(alg, C));
        State cstate = mono_as_state(alg, C);
        int jmax = int_floor(alg.sym_weight(f) + wB - 1);
        for (int j = 0; j <= jmax; ++j) {
            State y = np_mono(alg, Mono{f}, B, j);
            if (y.is_zero()) continue;
            r += sgn * np_state(alg, cstate, y, n - 1 - j);
        }
    }

    impl->in_progress.erase(key);
    impl->memo.emplace(std::move(key), r);
    return r;
}

} // namespace engine

// the n-th product a_(n)b; n >= -1 (the (-1)-product is the normal product)
inline State nth_product(const State& a, const State& b, int n) {
    assert(n >= -1);
    assert(!a.attached() || !b.attached() || a.algebra().same(b.algebra()));
    const Algebra& alg = a.attached() ? a.algebra() : b.algebra();
    return engine::np_state(alg, a, b, n);
}

inline State normal_product(const State& a, const State& b) { return nth_product(a, b, -1); }

inline LambdaPoly lambda_bracket(const State& a, const State& b) {
    LambdaPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    int nmax = int_floor(a.max_weight() + b.max_weight());
    for (int n = 0; n <= nmax; ++n) {
        State c = (Scalar(1) / factorial(n)) * nth_product(a, b, n);
        r.c.push_back(std::move(c));
    }
    r.trim();
    return r;
}

// --- lazy bracket table ----------------------------------------------------

inline State Expr::eval(const Algebra& target, const std::vector<State>& genmap) const {
    switch (n_->k) {
        case K::zero: return target.zero();
        case K::unit: return target.unit();
        case K::gen: return genmap[(size_t)n_->gen];
        case K::der: return translate_n(n_->ch[0].eval(target, genmap), n_->dern);
        case K::prod:
            return normal_product(n_->ch[0].eval(target, genmap), n_->ch[1].eval(target, genmap));
        case K::sum: {
            State r(target);
            for (const auto& e : n_->ch) r += e.eval(target, genmap);
            return r;
        }
        case K::scale: return n_->c * n_->ch[0].eval(target, genmap);
    }
    return target.zero();
}

inline std::vector<State> identity_map(const Algebra& a) {
    std::vector<State> m;
    for (size_t i = 0; i < a.size(); ++i) m.push_back(a.gen((int)i));
    return m;
}

// [b lambda a] from [a lambda b] by skew-symmetry
inline std::vector<State> skew_flip(const Algebra& alg, int i, int j,
                                    const std::vector<State>& ab) {
    Parity pi = alg.generator(i).parity, pj = alg.generator(j).parity;
    Scalar sgn = (pi == Parity::odd && pj == Parity::odd) ? Scalar(1) : Scalar(-1);
    Rational wtot = alg.generator(i).weight + alg.generator(j).weight;
    int nmax = int_floor(wtot - 1);
    std::vector<State> out;
    for (int n = 0; n <= nmax; ++n) {
        State c(alg);
        for (int k = 0; n + k < (int)ab.size(); ++k) {
            const State& s = ab[(size_t)(n + k)];
            if (s.is_zero()) continue;
            // b_(n)a = -(-1)^{p(a)p(b)} sum_k (-1)^{n+k} d^k (a_(n+k) b)/k!
            Scalar c0 = sgn * Scalar(Rational(((n + k) % 2 == 0) ? 1 : -1)) *
                        (factorial(n + k) / (factorial(k) * factorial(n)));
            c += c0 * translate_n(s, k);
        }
        out.push_back(std::move(c));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline const std::vector<State>& Algebra::bracket_coeffs(int i, int j) const {
    auto* impl = p_.get();
    std::unique_lock<std::recursive_mutex> lk(impl->mu);
    auto key = std::make_pair(i, j);
    if (auto it = impl->table.find(key); it != impl->table.end()) return it->second;

    std::vector<State> coeffs;
    auto sp = impl->spec.brackets.find(key);
    if (sp != impl->spec.brackets.end()) {
        auto idmap = identity_map(*this);
        for (const auto& e : sp->second) coeffs.push_back(e.eval(*this, idmap));
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    } else if (impl->spec.brackets.count({j, i})) {
        const auto& other = bracket_coeffs(j, i);
        coeffs = skew_flip(*this, j, i, other);
    }
    auto [it, ok] = impl->table.emplace(key, std::move(coeffs));
    (void)ok;
    return it->second;
}

// --- spec validation and consistency checks --------------------------------

struct Residual {
    std::string what;
    State value;
};

struct ConsistencyReport {
    std::vector<Residual> skew;
    std::vector<Residual> jacobi;
    int checks = 0;
    bool ok() const { return skew.empty() && jacobi.empty(); }
};

inline Algebra build_algebra(const AlgebraSpec& spec) {
    auto impl = std::make_shared<detail::AlgebraImpl>();
    impl->gens = spec.generators;
    impl->spec = spec;
    Algebra alg(impl);

    for (const auto& [ij, exprs] : spec.brackets) {
        auto [i, j] = ij;
        const auto& cs = alg.bracket_coeffs(i, j);
        Rational wtot = alg.generator(i).weight + alg.generator(j).weight;
        Parity ptot = alg.generator(i).parity ^ alg.generator(j).parity;
        for (size_t m = 0; m < cs.size(); ++m) {
            for (const auto& [mono, c] : cs[m].terms()) {
                if (cs[m].weight_of(mono) != wtot - (long)m - 1)
                    throw InconsistentSpec("weight violation in [" + alg.generator(i).name +
                                           " lambda " + alg.generator(j).name + "] at lambda^" +
                                           std::to_string(m));
                if (cs[m].parity_of(mono) != ptot)
                    throw InconsistentSpec("parity violation in [" + alg.generator(i).name +
                                           " lambda " + alg.generator(j).name + "]");
            }
        }
    }
    // skew consistency for pairs stored in both directions (incl. diagonal)
    for (const auto& [ij, exprs] : spec.brackets) {
        auto [i, j] = ij;
        if (i > j || !spec.brackets.count({j, i})) continue;
        auto derived = skew_flip(alg, i, j, alg.bracket_coeffs(i, j));
        const auto& stored = alg.bracket_coeffs(j, i);
        size_t nm = std::max(derived.size(), stored.size());
        for (size_t m = 0; m < nm; ++m) {
            State d = m < derived.size() ? derived[m] : alg.zero();
            State s = m < stored.size() ? stored[m] : alg.zero();
            if (!(d == s))
                throw InconsistentSpec("skew-symmetry violation for pair (" +
                                       alg.generator(i).name + ", " + alg.generator(j).name + ")");
        }
    }
    return alg;
}

// Full residual scan: skew on all ordered pairs, Jacobi on generator triples.
// max_checks < 0 means unbounded.
inline ConsistencyReport check_presentation(const AlgebraSpec& spec, int max_checks = -1) {
    ConsistencyReport rep;
    Algebra alg;
    try {
        alg = build_algebra(spec);
    } catch (const InconsistentSpec& e) {
        // rebuild without validation so residuals can be reported
        auto impl = std::make_shared<detail::AlgebraImpl>();
        impl->gens = spec.generators;
        impl->spec = spec;
        alg = Algebra(impl);
    }
    int ngen = (int)alg.size();
    auto budget_left = [&]() { return max_checks < 0 || rep.checks < max_checks; };

    for (int i = 0; i < ngen && budget_left(); ++i) {
        for (int j = i; j < ngen && budget_left(); ++j) {
            rep.checks++;
            auto derived = skew_flip(alg, i, j, alg.bracket_coeffs(i, j));
            const auto& stored = alg.bracket_coeffs(j, i);
            size_t nm = std::max(derived.size(), stored.size());
            for (size_t m = 0; m < nm; ++m) {
                State d = m < derived.size() ? derived[m] : alg.zero();
                State s = m < stored.size() ? stored[m] : alg.zero();
                State res = d - s;
                if (!res.is_zero())
                    rep.skew.push_back({"skew(" + alg.generator(i).name + "," +
                                            alg.generator(j).name + ") lambda^" +
                                            std::to_string(m),
                                        res});
            }
        }
    }
    for (int i = 0; i < ngen && budget_left(); ++i) {
        for (int j = i; j < ngen && budget_left(); ++j) {
            for (int k = 0; k < ngen && budget_left(); ++k) {
                rep.checks++;
                State a = alg.gen(i), b = alg.gen(j), c = alg.gen(k);
                Rational wbc = alg.generator(j).weight + alg.generator(k).weight;
                Rational wab = alg.generator(i).weight + alg.generator(j).weight;
                int mmax = int_floor(wab - 1) + int_floor(alg.generator(k).weight);
                int nmaxj = int_floor(wbc - 1);
                Scalar sg = engine::koszul(alg.generator(i).parity, alg.generator(j).parity);
                for (int m = 0; m <= mmax; ++m) {
                    for (int n = 0; n <= nmaxj; ++n) {
                        State lhs = nth_product(a, nth_product(b, c, n), m);
                        State rhs = sg * nth_product(b, nth_product(a, c, m), n);
                        for (int t = 0; t <= m; ++t) {
                            State ab = nth_product(a, b, t);
                            if (ab.is_zero()) continue;
                            rhs += Scalar(binom_int(m, t)) * nth_product(ab, c, m + n - t);
                        }
                        State res = lhs - rhs;
                        if (!res.is_zero())
                            rep.jacobi.push_back(
                                {"jacobi(" + alg.generator(i).name + "," + alg.generator(j).name +
                                     "," + alg.generator(k).name + ") m=" + std::to_string(m) +
                                     " n=" + std::to_string(n),
                                 res});
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace superw
