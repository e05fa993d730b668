#pragma once

#include "superw/basics.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <sstream>
#include <vector>

namespace superw {

// Dense univariate polynomial in eps over Rational, low degree.
class Poly {
  public:
    Poly() = default;
    Poly(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Poly eps() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    std::strong_ordering operator<=>(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // euclidean division, exact remainder chain
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        assert(!b.is_zero());
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo;
        int db = b.degree();
        while ((int)rem.size() - 1 >= db && !rem.empty()) {
            int dr = (int)rem.size() - 1;
            Rational f = rem.back() / b.leading();
            if ((int)quo.size() < dr - db + 1) quo.resize(dr - db + 1, Rational(0));
            quo[dr - db] = f;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        std::vector<Rational> r = c_;
        Rational l = r.back();
        for (auto& x : r) x /= l;
        return Poly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    std::string str() const; // integer-normalized rendering, defined below

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_; // c_[i] * eps^i
};

// Exact rational function in eps: the coefficient field of the whole kit.
// Canonical form: denominator monic and coprime to the numerator.
class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(int v) : num_(Rational(v)), den_(Rational(1)) {}
    Scalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}
    Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Scalar eps() { return Scalar(Poly::eps(), Poly(Rational(1))); }
    // k + h_vee = (eps+1)/eps; the level combination used everywhere.
    static Scalar level() { return Scalar(Poly::eps() + Poly(Rational(1)), Poly::eps()); }
    // varkappa = k + h_vee - 1 = 1/eps
    static Scalar varkappa() { return Scalar(Poly(Rational(1)), Poly::eps()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == 1; }
    Rational constant() const {
        assert(is_constant());
        return num_.coeff(0) / den_.coeff(0);
    }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        // cross-reduce before multiplying to keep degrees down
        Poly g1 = Poly::gcd(a.num_, b.den_);
        Poly g2 = Poly::gcd(b.num_, a.den_);
        Poly q, r;
        Poly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
        if (g1.degree() > 0) {
            Poly::divmod(an, g1, q, r), an = q;
            Poly::divmod(bd, g1, q, r), bd = q;
        }
        if (g2.degree() > 0) {
            Poly::divmod(bn, g2, q, r), bn = q;
            Poly::divmod(ad, g2, q, r), ad = q;
        }
        return Scalar(an * bn, ad * bd);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        assert(!b.is_zero());
        return a * Scalar(b.den_, b.num_);
    }
    Scalar operator-() const {
        Scalar s = *this;
        s.num_ = -s.num_;
        return s;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Scalar& o) const {
        if (auto c = num_ <=> o.num_; c != 0) return c;
        return den_ <=> o.den_;
    }

    std::string str() const;

  private:
    void reduce() {
        assert(!den_.is_zero());
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        if (den_.degree() == 0) {
            Rational l = den_.coeff(0);
            if (l != 1) {
                std::vector<Rational> n = num_.coeffs();
                for (auto& x : n) x /= l;
                num_ = Poly(std::move(n));
                den_ = Poly(Rational(1));
            }
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = q;
            Poly::divmod(den_, g, q, r);
            den_ = q;
        }
        // make the denominator monic
        Rational l = den_.leading();
        if (l != 1) {
            std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
            for (auto& x : n) x /= l;
            for (auto& x : d) x /= l;
            num_ = Poly(std::move(n));
            den_ = Poly(std::move(d));
        }
    }
    Poly num_, den_;
};

// alpha*(alpha-1)*...*(alpha-j+1)/j!
inline Scalar gen_binomial(int j, const Scalar& alpha) {
    assert(j >= 0);
    Scalar r(1);
    for (int w = 0; w < j; ++w) r = r * (alpha - Scalar(w)) / Scalar(w + 1);
    return r;
}

inline Rational evaluate(const Scalar& s, const Rational& eps_value) {
    Rational d = s.den().eval(eps_value);
    if (d == 0) throw PoleAtEvaluation("denominator vanishes at eps=" + rat_to_string(eps_value));
    return s.num().eval(eps_value) / d;
}

inline Scalar specialize(const Scalar& s, const Rational& eps_value) {
    return Scalar(evaluate(s, eps_value));
}

// --- rendering ------------------------------------------------------------

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    // clear rational denominators so the printed form has integer coefficients
    Int l(1);
    for (const auto& c : c_) l = boost::multiprecision::lcm(l, rat_den(c));
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int k = rat_num(c_[i]) * (l / rat_den(c_[i]));
        if (first) {
            if (k < 0) os << "-", k = -k;
        } else {
            os << (k < 0 ? " - " : " + ");
            if (k < 0) k = -k;
        }
        first = false;
        if (k != 1 || i == 0) os << k.str();
        if (i > 0) {
            if (k != 1) os << "*";
            os << "eps";
            if (i > 1) os << "^" << i;
        }
    }
    std::string body = os.str();
    if (l != 1) return "(" + body + ")/" + l.str();
    return body;
}

inline std::string Scalar::str() const {
    if (is_zero()) return "0";
    // integer-normalized p(eps)/q(eps)
    Int ln(1), ld(1);
    for (const auto& c : num_.coeffs()) ln = boost::multiprecision::lcm(ln, rat_den(c));
    for (const auto& c : den_.coeffs()) ld = boost::multiprecision::lcm(ld, rat_den(c));
    // scale both by lcm so each side is integral, then strip common integer content
    Int s = boost::multiprecision::lcm(ln, ld);
    auto scaled = [&](const Poly& p) {
        std::vector<Rational> v = p.coeffs();
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    };
    Poly n = scaled(num_), d = scaled(den_);
    Int g(0);
    for (const auto& c : n.coeffs()) g = boost::multiprecision::gcd(g, rat_num(c));
    for (const auto& c : d.coeffs()) g = boost::multiprecision::gcd(g, rat_num(c));
    if (g > 1) {
        auto divall = [&](const Poly& p) {
            std::vector<Rational> v = p.coeffs();
            for (auto& x : v) x /= Rational(g);
            return Poly(std::move(v));
        };
        n = divall(n);
        d = divall(d);
    }
    if (d.degree() == 0 && d.coeff(0) == 1) return n.str();
    std::string ns = n.str();
    if (n.degree() > 0 || ns.find('/') != std::string::npos) ns = "(" + ns + ")";
    std::string ds = d.str();
    if (d.degree() > 0 || ds.size() > 2) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace superw
