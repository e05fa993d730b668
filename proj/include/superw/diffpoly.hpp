#pragma once

#include "superw/scalar.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace superw {

// commuting symbol d^der x_var
struct CSym {
    int32_t var = 0;
    int32_t der = 0;
    auto operator<=>(const CSym&) const = default;
};
using CMono = std::vector<CSym>; // sorted, with multiplicity

// Differential polynomial in commuting variables of weight one.
class DiffPoly {
  public:
    DiffPoly() = default;
    explicit DiffPoly(Scalar c) {
        if (!c.is_zero()) t_[{}] = std::move(c);
    }
    static DiffPoly var(int v, int der = 0) {
        DiffPoly p;
        p.t_[{CSym{v, der}}] = Scalar(1);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
    }
    const std::map<CMono, Scalar>& terms() const { return t_; }
    Scalar coeff(const CMono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Scalar() : it->second;
    }

    void add_term(CMono m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    DiffPoly& operator+=(const DiffPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    DiffPoly& operator-=(const DiffPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const Scalar& c, DiffPoly a) {
        if (c.is_zero()) return DiffPoly();
        for (auto& [m, v] : a.t_) v *= c;
        return a;
    }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                CMono m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }
    DiffPoly operator-() const { return Scalar(-1) * (*this); }
    bool operator==(const DiffPoly& o) const { return t_ == o.t_; }

    // total derivative, Leibniz with d(d^j x) = d^{j+1} x
    DiffPoly derive() const {
        DiffPoly r;
        for (const auto& [m, c] : t_) {
            for (size_t i = 0; i < m.size(); ++i) {
                CMono n = m;
                n[i].der += 1;
                std::sort(n.begin(), n.end());
                r.add_term(std::move(n), c);
            }
        }
        return r;
    }
    DiffPoly derive_n(int k) const {
        DiffPoly r = *this;
        for (int i = 0; i < k; ++i) r = r.derive();
        return r;
    }

    // partial derivative with respect to the symbol d^der x_var
    DiffPoly partial(const CSym& s) const {
        DiffPoly r;
        for (const auto& [m, c] : t_) {
            int mult = 0;
            for (const auto& x : m) mult += (x == s);
            if (!mult) continue;
            CMono n = m;
            n.erase(std::find(n.begin(), n.end(), s));
            r.add_term(std::move(n), Scalar(mult) * c);
        }
        return r;
    }

    // substitute each variable by a DiffPoly (derivatives pushed through)
    DiffPoly substitute(const std::vector<DiffPoly>& images) const {
        DiffPoly r;
        for (const auto& [m, c] : t_) {
            DiffPoly prod(Scalar(1));
            for (const auto& s : m) prod = prod * images[(size_t)s.var].derive_n(s.der);
            r += c * prod;
        }
        return r;
    }

    Scalar eval_eps(const Rational& at) const = delete; // use specialize_eps

    DiffPoly specialize_eps(const Rational& at) const {
        DiffPoly r;
        for (const auto& [m, c] : t_) r.add_term(m, specialize(c, at));
        return r;
    }

    int max_var() const {
        int v = -1;
        for (const auto& [m, c] : t_)
            for (const auto& s : m) v = std::max(v, s.var);
        return v;
    }
    bool uses_var(int v) const {
        for (const auto& [m, c] : t_)
            for (const auto& s : m)
                if (s.var == v) return true;
        return false;
    }
    // weight with all variables of weight one
    Rational weight() const {
        if (t_.empty()) return 0;
        Rational w = 0;
        for (const auto& s : t_.begin()->first) w += 1 + s.der;
        return w;
    }
    bool weight_homogeneous() const {
        bool first = true;
        Rational w = 0;
        for (const auto& [m, c] : t_) {
            Rational v = 0;
            for (const auto& s : m) v += 1 + s.der;
            if (first) w = v, first = false;
            else if (v != w) return false;
        }
        return true;
    }
    int poly_degree() const {
        size_t d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.size());
        return (int)d;
    }

    std::string str(const std::vector<std::string>& names) const {
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
            bool sep = !unit_coeff && !m.empty();
            for (size_t i = 0; i < m.size(); ++i) {
                if (sep || i) os << "*";
                if (m[i].der) os << "d^" << m[i].der << " ";
                os << names[(size_t)m[i].var];
                sep = false;
            }
        }
        return os.str();
    }

  private:
    std::map<CMono, Scalar> t_;
};

} // namespace superw
