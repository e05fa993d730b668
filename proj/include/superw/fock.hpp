#pragma once

#include "superw/presets.hpp"
#include "superw/wick.hpp"

namespace superw {

using WeightVector = std::vector<Scalar>;

// Heisenberg quadratic space with an optional integral lattice direction.
// P-polynomials of Fock states live as States over `alg`; exponents are
// WeightVectors in the generator basis.
class FockSpace {
  public:
    FockSpace(std::vector<std::vector<Scalar>> gram, std::vector<std::string> names,
              int lattice_dir = -1)
        : gram_(std::move(gram)), x_(lattice_dir) {
        alg_ = heisenberg(gram_, std::move(names));
    }

    const Algebra& algebra() const { return alg_; }
    size_t rank() const { return gram_.size(); }
    int lattice_dir() const { return x_; }
    const Scalar& gram(size_t i, size_t j) const { return gram_[i][j]; }

    Scalar pairing(const WeightVector& a, const WeightVector& b) const {
        Scalar r;
        for (size_t i = 0; i < rank(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < rank(); ++j) {
                if (b[j].is_zero()) continue;
                r += a[i] * gram_[i][j] * b[j];
            }
        }
        return r;
    }

    // pairing with a single generator: (u_i, gamma)
    Scalar gen_pairing(int i, const WeightVector& g) const {
        Scalar r;
        for (size_t j = 0; j < rank(); ++j)
            if (!g[j].is_zero()) r += gram_[(size_t)i][j] * g[j];
        return r;
    }

    WeightVector zero_vec() const { return WeightVector(rank(), Scalar(0)); }

    bool is_integer(const Scalar& s, long long* out = nullptr) const {
        if (s.is_zero()) {
            if (out) *out = 0;
            return true;
        }
        if (!s.is_constant()) return false;
        Rational c = s.constant();
        if (rat_den(c) != 1) return false;
        if (out) *out = rat_num(c).convert_to<long long>();
        return true;
    }

    Parity lattice_parity(const WeightVector& g) const {
        if (x_ < 0) return Parity::even;
        long long n = 0;
        if (!is_integer(g[(size_t)x_], &n))
            throw NonIntegralPairing("lattice coordinate " + g[(size_t)x_].str() +
                                     " is not an integer");
        return (n % 2) ? Parity::odd : Parity::even;
    }

    // complete Schur states S_d of a given exponent, cached per exponent
    const State& schur(const WeightVector& beta, int d) const {
        std::unique_lock<std::mutex> lk(mu_);
        auto& vec = schur_[beta];
        if (vec.empty()) vec.push_back(alg_.unit());
        while ((int)vec.size() <= d) {
            int dd = (int)vec.size();
            State acc(alg_);
            for (int m = 1; m <= dd; ++m) {
                State term(alg_);
                for (size_t i = 0; i < rank(); ++i)
                    if (!beta[i].is_zero())
                        term += beta[i] *
                                engine::insert_sym(alg_, Symbol{(int)i, m - 1}, vec[(size_t)(dd - m)]);
                acc += (Scalar(1) / factorial(m - 1)) * term;
            }
            vec.push_back((Scalar(1) / Scalar(dd)) * acc);
        }
        return vec[(size_t)d];
    }

  private:
    std::vector<std::vector<Scalar>> gram_;
    Algebra alg_;
    int x_;
    mutable std::map<WeightVector, std::vector<State>> schur_;
    mutable std::mutex mu_;
};

// polynomial part times e^gamma
struct FockState {
    State P;
    WeightVector gamma;

    bool is_zero() const { return P.is_zero(); }
    bool operator==(const FockState& o) const { return P == o.P && (is_zero() || gamma == o.gamma); }
    FockState& operator+=(const FockState& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (gamma != o.gamma) throw std::invalid_argument("Fock exponents differ in a sum");
        P += o.P;
        return *this;
    }
    friend FockState operator+(FockState a, const FockState& b) { return a += b; }
    friend FockState operator*(const Scalar& c, FockState a) {
        a.P = c * a.P;
        return a;
    }
    FockState operator-() const { return Scalar(-1) * (*this); }
    friend FockState operator-(FockState a, const FockState& b) { return a + (-b); }
    std::string str() const;
};

struct ScreeningCharge {
    State P;
    WeightVector beta;
};

inline FockState fock_vector(const FockSpace& sp, WeightVector gamma) {
    return FockState{sp.algebra().unit(), std::move(gamma)};
}

inline FockState fock_zero(const FockSpace& sp, const WeightVector& gamma) {
    return FockState{sp.algebra().zero(), gamma};
}

inline Parity fock_parity(const FockSpace& sp, const FockState& w) {
    return w.P.parity() ^ sp.lattice_parity(w.gamma);
}

inline Scalar fock_weight(const FockSpace& sp, const FockState& w) {
    Scalar half = Scalar(Rational(1, 2));
    return Scalar(w.P.max_weight()) + half * sp.pairing(w.gamma, w.gamma);
}

// d(Q e^g) = (dQ) e^g + :g_field Q: e^g
inline FockState fock_translate(const FockSpace& sp, const FockState& w) {
    State p = translate(w.P);
    for (size_t i = 0; i < sp.rank(); ++i)
        if (!w.gamma[i].is_zero())
            p += w.gamma[i] * engine::insert_sym(sp.algebra(), Symbol{(int)i, 0}, w.P);
    return FockState{std::move(p), w.gamma};
}

inline FockState fock_translate_n(const FockSpace& sp, FockState w, int k) {
    for (int i = 0; i < k; ++i) w = fock_translate(sp, w);
    return w;
}

// annihilation action (d^d u_i)_(m) on a Fock state, m >= 0
inline FockState ann_mode(const FockSpace& sp, Symbol f, int m, const FockState& w);

namespace fockdetail {

inline FockState ann_gen(const FockSpace& sp, int g, int m, const State& Q,
                         const WeightVector& gamma) {
    const Algebra& alg = sp.algebra();
    FockState out = fock_zero(sp, gamma);
    for (const auto& [mono, c] : Q.terms()) {
        if (mono.empty()) {
            if (m == 0) {
                Scalar ev = sp.gen_pairing(g, gamma);
                if (!ev.is_zero()) out += (c * ev) * fock_vector(sp, gamma);
            }
            continue;
        }
        Symbol s = mono.front();
        Mono rest(mono.begin() + 1, mono.end());
        State rest_state(alg);
        rest_state.add_term(rest, Scalar(1));
        // through the first symbol: contraction + pass-through
        // [u_g(m), (d^e u_h)_(-1)] = (e+1)! (u_g,u_h) delta_{m,e+1} id
        if (m == s.der + 1) {
            Scalar k = factorial(s.der + 1) * sp.gram((size_t)g, (size_t)s.gen);
            if (!k.is_zero()) out += (c * k) * FockState{rest_state, gamma};
        }
        FockState inner = ann_gen(sp, g, m, rest_state, gamma);
        if (!inner.is_zero())
            out += c * FockState{engine::insert_sym(alg, s, inner.P), gamma};
    }
    return out;
}

} // namespace fockdetail

inline FockState ann_mode(const FockSpace& sp, Symbol f, int m, const FockState& w) {
    // (d^d g)_(m) = (-1)^d m(m-1)...(m-d+1) g_(m-d)
    Rational fac = 1;
    for (int t = 0; t < f.der; ++t) fac *= (m - t);
    if (f.der % 2) fac = -fac;
    if (fac == 0) return fock_zero(sp, w.gamma);
    FockState r = fockdetail::ann_gen(sp, f.gen, m - f.der, w.P, w.gamma);
    return Scalar(fac) * r;
}

// [u_i lambda Q e^g] organized in lambda
inline std::vector<FockState> heis_bracket(const FockSpace& sp, int i, const FockState& w) {
    std::vector<FockState> out;
    int mmax = int_floor(w.P.max_weight() + 1);
    for (int m = 0; m <= mmax; ++m) {
        FockState c = (Scalar(1) / factorial(m)) * ann_mode(sp, Symbol{i, 0}, m, w);
        out.push_back(std::move(c));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// (P e^beta)_(n) (Q e^gamma): general lattice vertex operator mode
inline FockState vertex_mode(const FockSpace& sp, const FockState& a, int n, const FockState& w);

namespace fockdetail {

// Memoized evaluation context for one vertex-operator computation: the two
// exponents are fixed through the whole recursion, so monomial-level results
// are keyed by (left word, mode, right word).
struct VmCtx {
    const FockSpace& sp;
    WeightVector beta, gamma, target;
    long long pair = 0;
    std::map<std::tuple<Mono, int, Mono>, FockState> memo;

    VmCtx(const FockSpace& s, WeightVector b, WeightVector g)
        : sp(s), beta(std::move(b)), gamma(std::move(g)) {
        target.resize(sp.rank());
        for (size_t i = 0; i < sp.rank(); ++i) target[i] = beta[i] + gamma[i];
    }

    // (A e^beta)_(n) (Q e^gamma) for canonical monomials A, Q
    FockState run(const Mono& A, int n, const Mono& Q) {
        auto key = std::make_tuple(A, n, Q);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const Algebra& alg = sp.algebra();
        FockState out = fock_zero(sp, target);
        if (A.empty()) {
            // commute e^beta through the leading symbol of Q:
            // (e^b)_(n)(d^e h)_(-1) = (d^e h)_(-1)(e^b)_(n) - e!(h,b)(e^b)_(n-1-e)
            if (Q.empty()) {
                long long d = -(long long)n - 1 - pair;
                if (d >= 0) out = FockState{sp.schur(beta, (int)d), target};
            } else {
                Symbol s = Q.front();
                Mono rest(Q.begin() + 1, Q.end());
                FockState first = run(A, n, rest);
                if (!first.is_zero())
                    out += FockState{engine::insert_sym(alg, s, first.P), target};
                Scalar hb = sp.gen_pairing(s.gen, beta);
                if (!hb.is_zero()) {
                    FockState second = run(A, n - 1 - s.der, rest);
                    if (!second.is_zero())
                        out += (Scalar(-1) * factorial(s.der) * hb) * second;
                }
            }
        } else {
            // peel the leading symbol: (f_(-1) A')_(n) = sum_j f_(-1-j) A'_(n+j)
            //                        + sum_j A'_(n-1-j) f_(j)  (f is even)
            Symbol f = A.front();
            Mono rest(A.begin() + 1, A.end());
            long long degA = 0;
            for (const auto& s : rest) degA += 1 + s.der;
            long long degQ = 0;
            for (const auto& s : Q) degQ += 1 + s.der;
            int jcap1 = (int)(degA + degQ - pair - 1) - n;
            for (int j = 0; j <= jcap1; ++j) {
                FockState x = run(rest, n + j, Q);
                if (x.is_zero()) continue;
                Scalar k = Scalar(1) / factorial(j);
                out += k * FockState{engine::insert_sym(alg, Symbol{f.gen, f.der + j}, x.P),
                                     x.gamma};
            }
            int jcap2 = f.der + (int)degQ + 1;
            FockState wq{engine::mono_as_state(alg, Q), gamma};
            for (int j = 0; j <= jcap2; ++j) {
                FockState y = ann_mode(sp, f, j, wq);
                if (y.is_zero()) continue;
                for (const auto& [ym, yc] : y.P.terms()) {
                    FockState t = run(rest, n - 1 - j, ym);
                    if (!t.is_zero()) out += yc * t;
                }
            }
        }
        memo.emplace(std::move(key), out);
        return out;
    }
};

} // namespace fockdetail

inline FockState vertex_mode(const FockSpace& sp, const FockState& a, int n, const FockState& w) {
    Scalar pr = sp.pairing(a.gamma, w.gamma);
    long long pair = 0;
    if (!sp.is_integer(pr, &pair))
        throw NonIntegralPairing("exponent pairing " + pr.str() + " is not an integer");
    fockdetail::VmCtx ctx(sp, a.gamma, w.gamma);
    ctx.pair = pair;
    FockState out = fock_zero(sp, ctx.target);
    for (const auto& [am, ac] : a.P.terms())
        for (const auto& [wm, wc] : w.P.terms()) {
            FockState t = ctx.run(am, n, wm);
            if (!t.is_zero()) out += (ac * wc) * t;
        }
    return out;
}

// normally ordered product :s w: of a plain state with a Fock state; agrees
// with the va-core (-1)-product at gamma = 0
inline FockState fock_multiply(const FockSpace& sp, const State& s, const FockState& w) {
    return vertex_mode(sp, FockState{s, sp.zero_vec()}, -1, w);
}

// (P e^beta)_(0) w computed as a derivation over normal products with base
// cases on generators (by skew-symmetry) and on Fock vectors (vertex_mode);
// an independent route to vertex_mode(.,0,.)
inline FockState screen(const FockSpace& sp, const ScreeningCharge& S, const FockState& w) {
    const Algebra& alg = sp.algebra();
    FockState charge{S.P, S.beta};
    WeightVector target(sp.rank());
    for (size_t i = 0; i < sp.rank(); ++i) target[i] = S.beta[i] + w.gamma[i];
    FockState out = fock_zero(sp, target);

    for (const auto& [mono, c] : w.P.terms()) {
        if (mono.empty()) {
            out += c * vertex_mode(sp, charge, 0, fock_vector(sp, w.gamma));
            continue;
        }
        Symbol f = mono.front();
        Mono rest(mono.begin() + 1, mono.end());
        State rest_state(alg);
        rest_state.add_term(rest, Scalar(1));
        FockState W{rest_state, w.gamma};

        // S_(0) f by skew-symmetry: -(sum_j (-1)^j d^j (f_(j) S)/j!)
        FockState s0f = fock_zero(sp, S.beta);
        int jmax = f.der + int_floor(S.P.max_weight()) + 1;
        for (int j = 0; j <= jmax; ++j) {
            FockState fj = ann_mode(sp, f, j, charge);
            if (fj.is_zero()) continue;
            Scalar k = Scalar(Rational(j % 2 ? 1 : -1)) / factorial(j);
            s0f += k * fock_translate_n(sp, fj, j);
        }
        if (!s0f.is_zero()) out += c * vertex_mode(sp, s0f, -1, W);
        FockState inner = screen(sp, S, W);
        if (!inner.is_zero())
            out += c * FockState{engine::insert_sym(alg, f, inner.P), inner.gamma};
    }
    return out;
}

inline std::string FockState::str() const {
    if (is_zero()) return "0";
    std::string e;
    bool nontrivial = false;
    for (const auto& c : gamma)
        if (!c.is_zero()) nontrivial = true;
    if (nontrivial) {
        e = "|";
        for (size_t i = 0; i < gamma.size(); ++i) {
            if (i) e += ",";
            e += gamma[i].str();
        }
        e += ">";
    }
    std::string p = P.str();
    if (!nontrivial) return p;
    if (p == "1") return e;
    if (P.term_count() > 1) p = "(" + p + ")";
    return p + " " + e;
}

} // namespace superw
