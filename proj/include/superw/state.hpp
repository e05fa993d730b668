#pragma once

#include "superw/algebra.hpp"

#include <map>
#include <sstream>

namespace superw {

// Canonical normally ordered element: finite map from sorted monomials to
// Scalar. The empty monomial is the vacuum.
class State {
  public:
    State() = default;
    explicit State(Algebra a) : alg_(std::move(a)) {}

    const Algebra& algebra() const { return alg_; }
    bool attached() const { return alg_.valid(); }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Mono, Scalar>& terms() const { return t_; }

    Scalar coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Scalar() : it->second;
    }

    void add_term(const Mono& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    State& operator+=(const State& o) {
        adopt(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    State& operator-=(const State& o) {
        adopt(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const Scalar& c, State a) {
        if (c.is_zero()) return State(a.alg_);
        for (auto& [m, v] : a.t_) v *= c;
        return a;
    }
    State operator-() const { return Scalar(-1) * (*this); }
    bool operator==(const State& o) const { return t_ == o.t_; }

    Parity parity_of(const Mono& m) const {
        Parity p = Parity::even;
        for (const auto& s : m) p = p ^ alg_.parity(s);
        return p;
    }
    Rational weight_of(const Mono& m) const {
        Rational w = 0;
        for (const auto& s : m) w += alg_.sym_weight(s);
        return w;
    }
    // parity of a parity-homogeneous state (vacuum component counts as even)
    Parity parity() const {
        Parity p = Parity::even;
        bool first = true;
        for (const auto& [m, c] : t_) {
            Parity q = parity_of(m);
            if (first) p = q, first = false;
        }
        return p;
    }
    bool parity_homogeneous() const {
        bool first = true;
        Parity p = Parity::even;
        for (const auto& [m, c] : t_) {
            Parity q = parity_of(m);
            if (first) p = q, first = false;
            else if (q != p) return false;
        }
        return true;
    }
    bool weight_homogeneous() const {
        bool first = true;
        Rational w = 0;
        for (const auto& [m, c] : t_) {
            Rational v = weight_of(m);
            if (first) w = v, first = false;
            else if (v != w) return false;
        }
        return true;
    }
    Rational weight() const { // of a homogeneous state; 0 for the zero state
        if (t_.empty()) return 0;
        return weight_of(t_.begin()->first);
    }
    Rational max_weight() const {
        Rational w = 0;
        for (const auto& [m, c] : t_) {
            Rational v = weight_of(m);
            if (v > w) w = v;
        }
        return w;
    }

    std::string str() const;

  private:
    void adopt(const State& o) {
        if (!alg_.valid()) alg_ = o.alg_;
    }
    Algebra alg_;
    std::map<Mono, Scalar> t_;
};

inline State Algebra::zero() const { return State(*this); }
inline State Algebra::unit() const {
    State s(*this);
    s.add_term({}, Scalar(1));
    return s;
}
inline State Algebra::gen(int i) const { return gen_der(i, 0); }
inline State Algebra::gen_der(int i, int d) const {
    State s(*this);
    s.add_term({Symbol{i, d}}, Scalar(1));
    return s;
}

inline std::string sym_str(const Algebra& a, const Symbol& s) {
    std::string n = a.generator(s.gen).name;
    if (s.der == 0) return n;
    return "d^" + std::to_string(s.der) + " " + n;
}

inline std::string State::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-';
        if (first) {
            if (neg) os << "-", cs = cs.substr(1);
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool unit_coeff = (cs == "1");
        if (!unit_coeff || m.empty()) os << cs;
        if (!m.empty()) {
            if (!unit_coeff) os << "*";
            if (m.size() == 1) {
                os << sym_str(alg_, m[0]);
            } else {
                os << ":";
                for (size_t i = 0; i < m.size(); ++i) {
                    if (i) os << " ";
                    os << sym_str(alg_, m[i]);
                }
                os << ":";
            }
        }
    }
    return os.str();
}

// lambda-polynomial with State coefficients: entry m is the coefficient of
// lambda^m, i.e. a_(m)b/m!.
struct LambdaPoly {
    std::vector<State> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const {
        for (const auto& s : c)
            if (!s.is_zero()) return false;
        return true;
    }
    State coeff(size_t m) const {
        return m < c.size() ? c[m] : State();
    }
    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    bool operator==(const LambdaPoly& o) const {
        size_t n = std::max(c.size(), o.c.size());
        for (size_t i = 0; i < n; ++i) {
            State x = coeff(i), y = o.coeff(i);
            if (!(x == y)) return false;
        }
        return true;
    }
    std::string str() const {
        bool all0 = true;
        std::ostringstream os;
        bool first = true;
        for (size_t m = 0; m < c.size(); ++m) {
            if (c[m].is_zero()) continue;
            all0 = false;
            if (!first) os << " + ";
            first = false;
            std::string body = c[m].str();
            if (m == 0) {
                os << body;
            } else {
                if (c[m].term_count() > 1) body = "(" + body + ")";
                os << body << "*lambda";
                if (m > 1) os << "^" << m;
            }
        }
        return all0 ? "0" : os.str();
    }
};

} // namespace superw
