#pragma once

#include "superw/basics.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace superw {

// Truncated Laurent series in q^(1/2) with exact rational coefficients.
// Internally indexed by integer powers of v with v^2 = q; `trunc` is the
// inclusive bound: coefficients are reliable for q-exponent <= trunc, i.e.
// v-exponent <= 2*trunc. Truncation propagates as the min over operands.
class QSeries {
  public:
    QSeries() = default;
    explicit QSeries(int trunc) : trunc_(trunc) {}
    QSeries(Rational c, int trunc) : trunc_(trunc) {
        if (c != 0) c_[0] = std::move(c);
    }

    static QSeries one(int trunc) { return QSeries(Rational(1), trunc); }
    // c * q^(num/2)
    static QSeries half_power(Rational c, long long half_num, int trunc) {
        QSeries s(trunc);
        s.add(half_num, c);
        return s;
    }
    static QSeries power(Rational c, long long n, int trunc) {
        return half_power(std::move(c), 2 * n, trunc);
    }

    int trunc() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<long long, Rational>& coeffs() const { return c_; } // key: 2*exponent

    Rational coeff_half(long long v) const { // coefficient of q^(v/2)
        auto it = c_.find(v);
        return it == c_.end() ? Rational(0) : it->second;
    }
    Rational coeff(long long n) const { return coeff_half(2 * n); }

    void add(long long v, const Rational& c) {
        if (c == 0 || v > 2LL * trunc_) return;
        auto [it, fresh] = c_.emplace(v, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    QSeries& operator+=(const QSeries& o) {
        clip(std::min(trunc_, o.trunc_));
        for (const auto& [v, c] : o.c_) add(v, c);
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        clip(std::min(trunc_, o.trunc_));
        for (const auto& [v, c] : o.c_) add(v, -c);
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [va, ca] : a.c_)
            for (const auto& [vb, cb] : b.c_) r.add(va + vb, ca * cb);
        return r;
    }
    friend QSeries operator*(const Rational& c, QSeries a) {
        if (c == 0) return QSeries(a.trunc_);
        for (auto& [v, x] : a.c_) x *= c;
        return a;
    }
    QSeries operator-() const { return Rational(-1) * (*this); }

    QSeries clipped(int t) const {
        QSeries r = *this;
        r.clip(std::min(t, trunc_));
        return r;
    }

    // in-place multiplication by (1 - c q^{v/2})
    void mul_one_minus(const Rational& c, long long v) {
        if (c == 0) return;
        std::map<long long, Rational> shifted;
        for (const auto& [u, x] : c_) {
            if (u + v > 2LL * trunc_) break;
            shifted.emplace(u + v, -c * x);
        }
        for (const auto& [u, x] : shifted) add(u, x);
    }

    // equality of all coefficients up to the min truncation
    bool agrees(const QSeries& o) const {
        long long cap = 2LL * std::min(trunc_, o.trunc_);
        for (const auto& [v, c] : c_)
            if (v <= cap && o.coeff_half(v) != c) return false;
        for (const auto& [v, c] : o.c_)
            if (v <= cap && coeff_half(v) != c) return false;
        return true;
    }

    // multiplicative inverse of a series with nonzero lowest term, by the
    // direct coefficient recurrence (quadratic in the truncation)
    QSeries inverse() const {
        if (c_.empty()) throw std::domain_error("inverse of zero series");
        long long v0 = c_.begin()->first;
        Rational a0 = c_.begin()->second;
        long long wcap = 2LL * trunc_ - v0; // result exponents: w - v0 <= 2 trunc
        QSeries r(trunc_);
        if (wcap < 0) return r;
        std::vector<Rational> a((size_t)wcap + 1, Rational(0));
        for (const auto& [v, c] : c_)
            if (v - v0 <= wcap) a[(size_t)(v - v0)] = c;
        std::vector<Rational> b((size_t)wcap + 1, Rational(0));
        b[0] = Rational(1) / a0;
        for (long long w = 1; w <= wcap; ++w) {
            Rational s(0);
            for (long long u = 1; u <= w; ++u)
                if (a[(size_t)u] != 0 && b[(size_t)(w - u)] != 0)
                    s += a[(size_t)u] * b[(size_t)(w - u)];
            if (s != 0) b[(size_t)w] = -s / a0;
        }
        for (long long w = 0; w <= wcap; ++w) r.add(w - v0, b[(size_t)w]);
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, c] : c_) {
            Rational k = c;
            if (first) {
                if (k < 0) os << "-", k = -k;
            } else {
                os << (k < 0 ? " - " : " + ");
                if (k < 0) k = -k;
            }
            first = false;
            bool unitc = (k == 1) && v != 0;
            if (!unitc) os << rat_to_string(k);
            if (v != 0) {
                if (!unitc) os << "*";
                os << "q";
                if (v != 2) {
                    os << "^";
                    if (v % 2 == 0) os << (v / 2);
                    else os << "(" << v << "/2)";
                }
            }
        }
        return os.str();
    }

  private:
    void clip(int t) {
        trunc_ = t;
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first > 2LL * t) it = c_.erase(it);
            else ++it;
        }
    }
    std::map<long long, Rational> c_;
    int trunc_ = 0;
};

// (c q^(half/2); q)_len with a rational prefactor c; len < 0 means the
// infinite product. Finitely many factors may carry exponents <= 0; once the
// exponent passes the truncation the remaining factors are 1 + O(q^>trunc).
inline QSeries pochhammer_c(const Rational& c, long long half, long long len, int trunc) {
    QSeries r = QSeries::one(trunc);
    if (c == 0 || len == 0) return r;
    for (long long k = 0; len < 0 || k < len; ++k) {
        long long v = half + 2 * k;
        if (len < 0 && v > 2LL * trunc) break;
        r.mul_one_minus(c, v);
    }
    return r;
}

// (z; q)_len with z = sign * q^(half/2)
inline QSeries pochhammer(int sign, long long half, long long len, int trunc) {
    return pochhammer_c(Rational(sign), half, len, trunc);
}

// (q^a; q)_len
inline QSeries pochhammer_q(long long a, long long len, int trunc) {
    return pochhammer(+1, 2 * a, len, trunc);
}

// unary false theta: Phi_s(q) = sum_{m>=0} (-1)^m q^{m(m+1)/2 + m s}
inline QSeries false_theta(long long s, int trunc) {
    QSeries r(trunc);
    long long mcap = 2 * (std::abs(s) + trunc + 2);
    for (long long m = 0; m <= mcap; ++m) {
        long long v = m * (m + 1) + 2 * m * s; // half units
        if (v <= 2LL * trunc) r.add(v, Rational(m % 2 ? -1 : 1));
    }
    return r;
}

// finite Laurent polynomial in an auxiliary variable z with QSeries
// coefficients; per-q-order z-support is finite by construction
class ZQSeries {
  public:
    explicit ZQSeries(int trunc) : trunc_(trunc) {}
    static ZQSeries one(int trunc) {
        ZQSeries r(trunc);
        r.c_[0] = QSeries::one(trunc);
        return r;
    }

    int trunc() const { return trunc_; }
    const std::map<long long, QSeries>& coeffs() const { return c_; }
    QSeries zcoeff(long long n) const {
        auto it = c_.find(n);
        return it == c_.end() ? QSeries(trunc_) : it->second;
    }

    void add(long long zpow, const QSeries& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = c_.emplace(zpow, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b) {
        ZQSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [za, ca] : a.c_)
            for (const auto& [zb, cb] : b.c_) r.add(za + zb, ca * cb);
        return r;
    }
    friend ZQSeries operator+(ZQSeries a, const ZQSeries& b) {
        for (const auto& [z, c] : b.c_) a.add(z, c);
        return a;
    }

    // q-binomial expansion 1/(c z^{zdir} q^(h/2); q)_inf
    //   = sum_m c^m z^(m zdir) q^(mh/2)/(q;q)_m
    // (requires h > 0 so that the z-degree is bounded by the q-order)
    static ZQSeries inv_poch_c(int zdir, const Rational& c, long long half, int trunc) {
        if (half <= 0) throw std::invalid_argument("inv_poch needs a positive power of q");
        ZQSeries r(trunc);
        QSeries qm = QSeries::one(trunc); // 1/(q;q)_m, built incrementally
        Rational cm = 1;
        for (long long m = 0; m * half <= 2LL * trunc; ++m) {
            if (m > 0) {
                QSeries f = QSeries::one(trunc);
                f.add(2 * m, Rational(-1));
                qm = qm * f.inverse();
                cm *= c;
            }
            r.add(m * zdir, cm * (qm * QSeries::half_power(Rational(1), m * half, trunc)));
        }
        return r;
    }
    static ZQSeries inv_poch(long long half, int trunc) { return inv_poch_c(1, 1, half, trunc); }
    static ZQSeries inv_poch_zinv(long long half, int trunc) {
        return inv_poch_c(-1, 1, half, trunc);
    }
    // (c z^{zdir} q^(h/2); q)_len as a Laurent polynomial (len < 0: infinite,
    // truncated once the exponent passes the q-order)
    static ZQSeries poch_z(int zdir, const Rational& c, long long half, long long len,
                           int trunc) {
        ZQSeries r = one(trunc);
        for (long long k = 0; len < 0 || k < len; ++k) {
            long long v = half + 2 * k;
            if (len < 0 && v > 2LL * trunc) break;
            ZQSeries f = one(trunc);
            QSeries t(trunc);
            t.add(v, -c);
            f.add(zdir, t);
            r = r * f;
        }
        return r;
    }

  private:
    std::map<long long, QSeries> c_;
    int trunc_;
};

} // namespace superw
