#pragma once

#include "superw/basics.hpp"
#include "superw/diffpoly.hpp"

#include <limits>
#include <map>

namespace superw {

// Pseudo-differential operator with commuting differential-polynomial
// coefficients. Exponents are n or n+eps, uniformly over the operator
// (eps_shift flag); exact operators carry unbounded depth.
class PsiDO {
  public:
    PsiDO() = default;

    static constexpr int kExact = std::numeric_limits<int>::max();

    static PsiDO dop(const DiffPoly& f, int power) { // f * d^power, exact
        PsiDO p;
        p.eps_ = false;
        p.depth_ = kExact;
        p.lead_ = power;
        if (!f.is_zero()) p.c_[power] = f;
        return p;
    }
    static PsiDO partial() { return dop(DiffPoly(Scalar(1)), 1); }

    bool eps_shifted() const { return eps_; }
    int depth() const { return depth_; }
    bool exact() const { return depth_ == kExact; }
    const std::map<int, DiffPoly>& coeffs() const { return c_; }

    int lead() const { // integer part of the leading exponent
        int m = std::numeric_limits<int>::min();
        for (const auto& [e, f] : c_)
            if (e > m) m = e;
        return m;
    }
    int stored_lead() const { return lead_; }

    // coefficient of d^(e [+eps]); throws if e is below the stored truncation
    DiffPoly coeff(int e) const {
        if (!exact() && e < lead_ - depth_)
            throw DepthExceeded("coefficient at exponent offset " + std::to_string(lead_ - e) +
                                " requested, stored depth " + std::to_string(depth_));
        auto it = c_.find(e);
        return it == c_.end() ? DiffPoly() : it->second;
    }

    void add(int e, const DiffPoly& f) {
        if (f.is_zero()) return;
        auto [it, fresh] = c_.emplace(e, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    PsiDO& with_flags(bool eps, int depth, int lead) {
        eps_ = eps;
        depth_ = depth;
        lead_ = lead;
        return *this;
    }

    bool operator==(const PsiDO& o) const { return eps_ == o.eps_ && c_ == o.c_; }

    std::string str(const std::vector<std::string>& names) const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            std::string f = it->second.str(names);
            if (it->second.terms().size() > 1) f = "(" + f + ")";
            std::string e = std::to_string(it->first);
            if (eps_) e = (it->first == 0) ? "eps" : e + "+eps";
            s += f + "*D^(" + e + ")";
        }
        return s;
    }

  private:
    std::map<int, DiffPoly> c_; // integer part of exponent -> coefficient
    bool eps_ = false;
    int depth_ = kExact;
    int lead_ = 0;
};

// (f d^a)(g d^b) = sum_j binom(a, j) f (d^j g) d^(a+b-j), truncated `depth`
// below the leading exponent of the product. Exact composed with exact stays
// exact (the Leibniz sum is finite for integer exponents >= 0).
inline PsiDO compose(const PsiDO& A, const PsiDO& B, int depth) {
    if (A.eps_shifted() && B.eps_shifted())
        throw std::invalid_argument("composition of two eps-shifted operators");
    if (!A.exact() && A.depth() < depth)
        throw DepthExceeded("left operand depth insufficient");
    if (!B.exact() && B.depth() < depth)
        throw DepthExceeded("right operand depth insufficient");

    bool exact = A.exact() && B.exact() && !A.eps_shifted() && !B.eps_shifted();
    int leadR = A.lead() + B.lead();
    PsiDO R;
    R.with_flags(A.eps_shifted() || B.eps_shifted(), exact ? PsiDO::kExact : depth, leadR);
    Scalar eps = Scalar::eps();
    for (const auto& [a, f] : A.coeffs()) {
        if (exact && a < 0) throw std::invalid_argument("exact composition needs exponents >= 0");
        Scalar aexp = Scalar(Rational(a)) + (A.eps_shifted() ? eps : Scalar(0));
        for (const auto& [b, g] : B.coeffs()) {
            int jcap = exact ? a : (a + b) - (leadR - depth);
            DiffPoly gj = g;
            for (int j = 0; j <= jcap; ++j) {
                Scalar bin = gen_binomial(j, aexp);
                if (!bin.is_zero() && !gj.is_zero()) R.add(a + b - j, bin * (f * gj));
                if (j < jcap) gj = gj.derive();
            }
        }
    }
    return R;
}

} // namespace superw
