#pragma once

// Test-only second implementation of the products: explicit modes acting on
// the Fock vacuum, with fields split into creation/annihilation halves. Valid
// for free-field algebras whose generator brackets are multiples of the unit
// (Heisenberg, bc, beta-gamma and tensor products of those). Independent of
// the lambda-calculus recursion in wick.hpp.

#include "superw/wick.hpp"

namespace superw::oracle {

struct ModeLetter {
    int gen;
    int mode; // <= -1 here; negative modes supercommute freely
    auto operator<=>(const ModeLetter&) const = default;
};
using ModeWord = std::vector<ModeLetter>; // kept sorted

using FockVec = std::map<ModeWord, Scalar>;

inline void fv_add(FockVec& v, const ModeWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

// constant bracket data of a free-field algebra: [g lambda h] = (A + B lambda) 1
struct FreeField {
    Algebra alg;
    std::vector<std::vector<Scalar>> A, B;

    explicit FreeField(const Algebra& a) : alg(a) {
        size_t r = a.size();
        A.assign(r, std::vector<Scalar>(r));
        B.assign(r, std::vector<Scalar>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                const auto& cs = a.bracket_coeffs((int)i, (int)j);
                for (size_t m = 0; m < cs.size(); ++m) {
                    for (const auto& [mono, c] : cs[m].terms()) {
                        if (!mono.empty())
                            throw std::invalid_argument("oracle needs constant brackets");
                        if (m == 0) A[i][j] = c;
                        else if (m == 1) B[i][j] = c;
                        else if (!c.is_zero())
                            throw std::invalid_argument("oracle needs degree <= 1 brackets");
                    }
                }
            }
    }

    Parity gp(int g) const { return alg.generator(g).parity; }
    Rational gw(int g) const { return alg.generator(g).weight; }

    // g_(m) acting on a basis word (modes all <= -1)
    FockVec mode_apply(int g, int m, const ModeWord& w) const {
        FockVec out;
        if (m <= -1) {
            // insert with Koszul sign at the sorted position
            ModeLetter L{g, m};
            Parity pg = gp(g);
            int sign = 1;
            size_t pos = 0;
            while (pos < w.size() && w[pos] < L) {
                if (pg == Parity::odd && gp(w[pos].gen) == Parity::odd) sign = -sign;
                ++pos;
            }
            if (pos < w.size() && w[pos] == L && pg == Parity::odd) return out; // square of odd mode
            ModeWord nw = w;
            nw.insert(nw.begin() + (long)pos, L);
            fv_add(out, nw, Scalar(Rational(sign)));
            return out;
        }
        // annihilation: supercommute through, [g_(m), h_(q)] = A d_{m+q,-1} + B m d_{m+q,0}
        int sign = 1;
        for (size_t i = 0; i < w.size(); ++i) {
            const auto& L = w[i];
            Scalar c = A[(size_t)g][(size_t)L.gen] * Scalar((m + L.mode == -1) ? 1 : 0) +
                       B[(size_t)g][(size_t)L.gen] * Scalar(Rational(m)) *
                           Scalar((m + L.mode == 0) ? 1 : 0);
            if (!c.is_zero()) {
                ModeWord nw = w;
                nw.erase(nw.begin() + (long)i);
                fv_add(out, nw, Scalar(Rational(sign)) * c);
            }
            if (gp(g) == Parity::odd && gp(L.gen) == Parity::odd) sign = -sign;
        }
        return out; // g_(m)|0> = 0 for m >= 0
    }

    FockVec mode_apply(int g, int m, const FockVec& v) const {
        FockVec out;
        for (const auto& [w, c] : v) {
            FockVec t = mode_apply(g, m, w);
            for (const auto& [w2, c2] : t) fv_add(out, w2, c * c2);
        }
        return out;
    }

    // (d^der g)_(m) = (-1)^der m(m-1)...(m-der+1) g_(m-der)
    FockVec dsym_apply(const Symbol& s, int m, const FockVec& v) const {
        Rational f = 1;
        for (int t = 0; t < s.der; ++t) f *= (m - t);
        if (s.der % 2) f = -f;
        if (f == 0) return {};
        FockVec out = mode_apply(s.gen, m - s.der, v);
        for (auto& [w, c] : out) c *= Scalar(f);
        FockVec res;
        for (auto& [w, c] : out) fv_add(res, w, c);
        return res;
    }

    Rational word_weight(const ModeWord& w) const {
        Rational r = 0;
        for (const auto& L : w) r += gw(L.gen) - L.mode - 1;
        return r;
    }
    Rational fock_max_weight(const FockVec& v) const {
        Rational r = 0;
        for (const auto& [w, c] : v)
            if (word_weight(w) > r) r = word_weight(w);
        return r;
    }
    Rational mono_weight(const Mono& m) const {
        Rational r = 0;
        for (const auto& s : m) r += gw(s.gen) + s.der;
        return r;
    }

    // (mono)_(n) v via the normal-ordered field splitting
    FockVec mono_mode(const Mono& mono, int n, const FockVec& v) const {
        if (v.empty()) return {};
        if (mono.empty()) return n == -1 ? v : FockVec{};
        Symbol f = mono.front();
        Mono rest(mono.begin() + 1, mono.end());
        if (rest.empty()) return dsym_apply(f, n, v);
        FockVec out;
        Rational wf = gw(f.gen) + f.der;
        Rational wrest = mono_weight(rest);
        Rational wv = fock_max_weight(v);
        // sum over m <= -1 of f_(m) rest_(n-1-m) v
        int mlow = n - int_floor(wrest + wv); // below this rest_(n-1-m)v = 0
        for (int m = -1; m >= mlow - 1; --m) {
            FockVec t = mono_mode(rest, n - 1 - m, v);
            if (t.empty()) continue;
            FockVec u = dsym_apply(f, m, t);
            for (const auto& [w, c] : u) fv_add(out, w, c);
        }
        // Koszul sign for moving f past rest
        Parity pf = gp(f.gen), pr = Parity::even;
        for (const auto& s : rest) pr = pr ^ gp(s.gen);
        Scalar sgn = engine::koszul(pf, pr);
        int mhigh = int_floor(wf + wv); // above this f_(m) v = 0
        for (int m = 0; m <= mhigh; ++m) {
            FockVec t = dsym_apply(f, m, v);
            if (t.empty()) continue;
            FockVec u = mono_mode(rest, n - 1 - m, t);
            for (const auto& [w, c] : u) fv_add(out, w, sgn * c);
        }
        return out;
    }

    // conversions: canonical monomial <-> sorted mode word
    FockVec state_to_fock(const State& s) const {
        FockVec out;
        for (const auto& [m, c] : s.terms()) {
            ModeWord w;
            Scalar norm(1);
            for (const auto& sym : m) {
                w.push_back({sym.gen, -1 - sym.der});
                norm = norm * factorial(sym.der); // (d^d g)_(-1) = d! g_(-1-d)
            }
            std::sort(w.begin(), w.end()); // (gen asc, mode asc); adjust sign below
            // canonical monomial order (gen, der asc) maps to (gen asc, mode desc);
            // compute the Koszul sign of the resorting
            ModeWord orig;
            for (const auto& sym : m) orig.push_back({sym.gen, -1 - sym.der});
            int sign = resort_sign(orig);
            fv_add(out, w, Scalar(Rational(sign)) * norm * c);
        }
        return out;
    }

    int resort_sign(ModeWord w) const {
        // bubble sort counting odd-odd transpositions
        int sign = 1;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = 0; j + 1 < w.size() - i; ++j)
                if (w[j + 1] < w[j]) {
                    if (gp(w[j].gen) == Parity::odd && gp(w[j + 1].gen) == Parity::odd)
                        sign = -sign;
                    std::swap(w[j], w[j + 1]);
                }
        return sign;
    }

    State fock_to_state(const FockVec& v) const {
        State out(alg);
        for (const auto& [w, c] : v) {
            // sorted mode word -> canonical monomial, undoing the divided powers
            Mono m;
            Scalar norm(1);
            ModeWord target; // canonical order: (gen asc, der asc) ie mode desc per gen
            for (const auto& L : w) target.push_back(L);
            std::stable_sort(target.begin(), target.end(), [](auto& a, auto& b) {
                if (a.gen != b.gen) return a.gen < b.gen;
                return a.mode > b.mode;
            });
            int sign = 1;
            {
                // sign of permuting sorted word into canonical order
                ModeWord tmp = w;
                for (size_t i = 0; i < target.size(); ++i) {
                    size_t j = i;
                    while (tmp[j] != target[i]) ++j;
                    while (j > i) {
                        if (gp(tmp[j].gen) == Parity::odd && gp(tmp[j - 1].gen) == Parity::odd)
                            sign = -sign;
                        std::swap(tmp[j], tmp[j - 1]);
                        --j;
                    }
                }
            }
            for (const auto& L : target) {
                int der = -1 - L.mode;
                m.push_back({L.gen, der});
                norm = norm / factorial(der);
            }
            out.add_term(m, Scalar(Rational(sign)) * norm * c);
        }
        return out;
    }

    State nth(const State& a, const State& b, int n) const {
        FockVec vb = state_to_fock(b);
        FockVec out;
        for (const auto& [m, c] : a.terms()) {
            Scalar norm(1);
            for (const auto& sym : m) norm = norm * (Scalar(1) / factorial(sym.der));
            (void)norm; // mono_mode works with plain d^der symbols, no divided powers
            FockVec t = mono_mode(m, n, vb);
            for (const auto& [w, c2] : t) fv_add(out, w, c * c2);
        }
        return fock_to_state(out);
    }

    LambdaPoly bracket(const State& a, const State& b) const {
        LambdaPoly r;
        int nmax = int_floor(a.max_weight() + b.max_weight());
        for (int n = 0; n <= nmax; ++n) r.c.push_back((Scalar(1) / factorial(n)) * nth(a, b, n));
        r.trim();
        return r;
    }
};

} // namespace superw::oracle
