#pragma once

#include "superw/basics.hpp"

#include <vector>

namespace superw {

// exact dense linear algebra over Rational
struct RatMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a; // row major

    RatMatrix() = default;
    RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// row echelon in place; returns pivot columns
inline std::vector<size_t> row_echelon(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Rational inv = m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(RatMatrix m) { return row_echelon(m).size(); }

// basis of the right nullspace
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    auto pivots = row_echelon(m);
    std::vector<bool> ispivot(m.cols, false);
    for (size_t c : pivots) ispivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t freec = 0; freec < m.cols; ++freec) {
        if (ispivot[freec]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

// does b lie in the row space spanned by rows of m?
inline bool in_row_span(const RatMatrix& m, const std::vector<Rational>& b) {
    RatMatrix with(m.rows + 1, m.cols);
    with.a.assign(m.a.begin(), m.a.end());
    with.a.insert(with.a.end(), b.begin(), b.end());
    return rank(m) == rank(with);
}

} // namespace superw
