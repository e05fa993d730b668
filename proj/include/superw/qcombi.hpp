#pragma once

#include "superw/qseries.hpp"

#include <tuple>

namespace superw {

// ch[z(V^kc(gl(n|1)))] = sum_m (-1)^m q^{m(m+1)/2} (q^{m+1};q)_{n-1}
//                        / ( (q;q)_inf^2 (q,...,q^{n-1};q)_inf )
inline QSeries center_character(int n, int trunc) {
    QSeries num(trunc);
    for (long long m = 0; m * (m + 1) <= 2LL * trunc; ++m) {
        QSeries t = pochhammer_q(m + 1, n - 1, trunc);
        QSeries shift = QSeries::half_power(Rational(m % 2 ? -1 : 1), m * (m + 1), trunc);
        num += shift * t;
    }
    QSeries den = pochhammer_q(1, -1, trunc) * pochhammer_q(1, -1, trunc);
    for (long long i = 1; i <= n - 1; ++i) den = den * pochhammer_q(i, -1, trunc);
    return num * den.inverse();
}

// constant z-term of 1/((q,...,q^{n-1}, zq, z^{-1}q^{n-1}; q)_inf), n >= 2
inline QSeries constant_term_character(int n, int trunc) {
    if (n < 2)
        throw std::invalid_argument("constant-term route needs n >= 2 (z^{-1} q^{n-1} factor)");
    ZQSeries f = ZQSeries::inv_poch(2, trunc) * ZQSeries::inv_poch_zinv(2 * (n - 1), trunc);
    QSeries ct = f.zcoeff(0);
    QSeries den = QSeries::one(trunc);
    for (long long i = 1; i <= n - 1; ++i) den = den * pochhammer_q(i, -1, trunc);
    return ct * den.inverse();
}

// F_{m,n}(q): generating function of plane partitions with pit (m+1, n+1),
// n >= m, as the closed multi-sum
inline QSeries pit_gf_formula(int m, int n, int trunc) {
    if (n < m) throw std::invalid_argument("pit formula needs n >= m");
    QSeries sum(trunc);
    std::vector<long long> k((size_t)std::max(m, 1), 0);
    // iterate k_1 >= ... >= k_m >= 0 with the quadratic exponent <= trunc
    auto exponent_half = [&]() {
        long long e = 0;
        for (int i = 0; i < m; ++i) e += k[(size_t)i] * (k[(size_t)i] + 2 * (i + 1) - 1);
        return e; // in half units: (1/2) sum k_i (k_i + 2i - 1) -> e half = sum(...)
    };
    auto kat = [&](int i) { return (i <= m) ? k[(size_t)i - 1] : 0LL; }; // 1-based, 0 beyond m
    std::function<void(int, long long)> rec = [&](int i, long long hi) {
        if (i > m) {
            long long eh = exponent_half();
            if (eh > 2LL * trunc) return;
            long long parity = 0;
            for (int t = 1; t <= m; ++t) parity += kat(t);
            QSeries term = QSeries::half_power(Rational(parity % 2 ? -1 : 1), eh, trunc);
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    QSeries f = QSeries::one(trunc);
                    f.add(2 * (kat(a) - kat(b) + b - a), Rational(-1));
                    term = term * f;
                }
            for (int a = 1; a <= m; ++a)
                for (int b = a + 1; b <= m; ++b) {
                    QSeries f = QSeries::one(trunc);
                    f.add(2 * (kat(a) - kat(b) + b - a), Rational(-1));
                    term = term * f;
                }
            sum += term;
            return;
        }
        for (long long v = 0; v <= hi; ++v) {
            k[(size_t)i - 1] = v;
            if (v * (v + 2 * i - 1) > 2LL * trunc) break;
            rec(i + 1, v);
        }
    };
    if (m == 0) {
        sum = QSeries::one(trunc);
    } else {
        rec(1, (long long)trunc + 1);
    }
    QSeries den = QSeries::one(trunc);
    QSeries qinf = pochhammer_q(1, -1, trunc);
    for (int i = 0; i < n + m; ++i) den = den * qinf;
    return sum * den.inverse();
}

// --- gl(3|2) characters ------------------------------------------------------

struct Gl32Characters {
    QSeries closed_form;
    QSeries constant_term_form;
    QSeries pbw_form;
};

inline Gl32Characters gl32_characters(int trunc) {
    Gl32Characters out{QSeries(trunc), QSeries(trunc), QSeries(trunc)};

    // closed Pochhammer form
    QSeries num = pochhammer(-1, 3, -1, trunc) * pochhammer(-1, 3, -1, trunc) *
                  pochhammer(-1, 5, -1, trunc) * pochhammer(-1, 5, -1, trunc);
    QSeries den = pochhammer_q(1, -1, trunc) * pochhammer_q(2, -1, trunc) *
                  pochhammer_q(2, -1, trunc) * pochhammer_q(3, -1, trunc);
    out.closed_form = num * den.inverse();

    // two-variable constant term with measure (z1 - z2)/(z1^2 z2):
    // CT = F_0^2 - F_1 F_{-1} for F(z) = prod over one variable
    ZQSeries F = ZQSeries::poch_z(+1, Rational(-1), 1, -1, trunc) *
                 ZQSeries::poch_z(-1, Rational(-1), 1, -1, trunc) *
                 ZQSeries::inv_poch(2, trunc) * ZQSeries::inv_poch_zinv(2, trunc);
    out.constant_term_form = F.zcoeff(0) * F.zcoeff(0) - F.zcoeff(1) * F.zcoeff(-1);

    // PBW form from the strong generator weights 1,2,2,3 | 3/2,3/2,5/2,5/2
    QSeries pbw = QSeries::one(trunc);
    for (long long w : {3, 3, 5, 5}) pbw = pbw * pochhammer(-1, w, -1, trunc);
    QSeries pden = QSeries::one(trunc);
    for (long long w : {1, 2, 2, 3}) pden = pden * pochhammer_q(w, -1, trunc);
    out.pbw_form = pbw * pden.inverse();
    return out;
}

// --- trigonometric beta-integral ---------------------------------------------

// both sides of
//   (z q^{1/2}, z^{-1} q^{1/2}; q)_inf / (a z q^{1/2}, b z^{-1} q^{1/2}; q)_inf
//   = sum_n (-1)^n (a q^{n+1}, b q^{-n+1}; q)_inf / (q, a b q; q)_inf
//                 q^{n^2/2} z^{-n}
inline ZQSeries beta_integral_lhs(const Rational& a, const Rational& b, int trunc) {
    ZQSeries lhs = ZQSeries::poch_z(+1, Rational(1), 1, -1, trunc) *
                   ZQSeries::poch_z(-1, Rational(1), 1, -1, trunc);
    if (a != 0) lhs = lhs * ZQSeries::inv_poch_c(+1, a, 1, trunc);
    if (b != 0) lhs = lhs * ZQSeries::inv_poch_c(-1, b, 1, trunc);
    return lhs;
}

inline ZQSeries beta_integral_rhs(const Rational& a, const Rational& b, int trunc) {
    ZQSeries rhs(trunc);
    long long ncap = 2LL * trunc + 2;
    // the (a q^{n+1}) / (b q^{-n+1}) prefixes reach q^{-|n|(|n|-1)/2}: the
    // z^{-n} term needs that much extra working depth to stay exact after the
    // q^{n^2/2} shift. The denominator inverse is computed once at the
    // deepest extension and clipped per term.
    int extmax = trunc + (int)(ncap * (ncap - 1) / 2);
    QSeries deninv =
        (pochhammer_q(1, -1, extmax) * pochhammer_c(a * b, 2, -1, extmax)).inverse();
    for (long long n = -ncap; n <= ncap; ++n) {
        long long M = std::abs(n) <= 1 ? 0 : std::abs(n) * (std::abs(n) - 1) / 2;
        int ext = trunc + (int)M;
        QSeries t = pochhammer_c(a, 2 * (n + 1), -1, ext) *
                    pochhammer_c(b, 2 * (-n + 1), -1, ext) * deninv.clipped(ext);
        QSeries coef = QSeries::half_power(Rational(n % 2 ? -1 : 1), n * n, ext) * t;
        rhs.add(-n, coef.clipped(trunc));
    }
    return rhs;
}

// zero iff the identity holds coefficientwise to the truncation; on failure,
// the z-coefficient difference closest to z^0 is returned
inline QSeries beta_integral_residual(const Rational& a, const Rational& b, int trunc) {
    ZQSeries lhs = beta_integral_lhs(a, b, trunc);
    ZQSeries rhs = beta_integral_rhs(a, b, trunc);
    long long ncap = 2LL * trunc + 2;
    for (long long d = 0; d <= ncap; ++d)
        for (long long n : {d, -d}) {
            QSeries diff = lhs.zcoeff(n) - rhs.zcoeff(n);
            if (!diff.is_zero()) return diff;
            if (d == 0) break;
        }
    return QSeries(trunc);
}

} // namespace superw
