#pragma once

#include "superw/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace superw {

enum class Parity : uint8_t { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
    return Parity(uint8_t(a) ^ uint8_t(b));
}

struct Generator {
    std::string name;
    Parity parity = Parity::even;
    Rational weight = 1;
};

// d-th derivative of a generator; the total order (gen, der) fixes the
// canonical normal ordering of monomials.
struct Symbol {
    int32_t gen = 0;
    int32_t der = 0;
    auto operator<=>(const Symbol&) const = default;
};

using Mono = std::vector<Symbol>; // sorted ascending in canonical states

class Algebra;
class State;

// Symbolic element expression: usable as bracket-table data and evaluated
// against any generator map (identity for consistency checks, images for
// homomorphism checks).
class Expr {
  public:
    enum class K : uint8_t { zero, unit, gen, der, prod, sum, scale };

    Expr() : Expr(zero()) {}
    static Expr zero() { return Expr(std::make_shared<Node>(Node{K::zero, {}, 0, 0, {}})); }
    static Expr unit() { return Expr(std::make_shared<Node>(Node{K::unit, {}, 0, 0, {}})); }
    static Expr gen(int i) { return Expr(std::make_shared<Node>(Node{K::gen, {}, i, 0, {}})); }
    static Expr der(Expr a, int n) {
        if (n == 0) return a;
        return Expr(std::make_shared<Node>(Node{K::der, {}, 0, n, {std::move(a)}}));
    }
    static Expr prod(Expr a, Expr b) {
        return Expr(std::make_shared<Node>(Node{K::prod, {}, 0, 0, {std::move(a), std::move(b)}}));
    }
    static Expr sum(std::vector<Expr> xs) {
        return Expr(std::make_shared<Node>(Node{K::sum, {}, 0, 0, std::move(xs)}));
    }
    static Expr scale(Scalar c, Expr a) {
        return Expr(std::make_shared<Node>(Node{K::scale, std::move(c), 0, 0, {std::move(a)}}));
    }

    friend Expr operator+(Expr a, Expr b) { return sum({std::move(a), std::move(b)}); }
    friend Expr operator-(Expr a, Expr b) {
        return sum({std::move(a), scale(Scalar(-1), std::move(b))});
    }
    friend Expr operator*(Scalar c, Expr a) { return scale(std::move(c), std::move(a)); }

    State eval(const Algebra& target, const std::vector<State>& genmap) const;

    // same expression over a tensor factor embedded at generator offset `off`
    Expr shifted(int off) const {
        if (off == 0) return *this;
        std::vector<Expr> ch;
        for (const auto& e : n_->ch) ch.push_back(e.shifted(off));
        auto n = std::make_shared<Node>(*n_);
        n->ch = std::move(ch);
        if (n->k == K::gen) n->gen += off;
        return Expr(std::move(n));
    }

  private:
    struct Node {
        K k;
        Scalar c;
        int gen;
        int dern;
        std::vector<Expr> ch;
    };
    explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

struct AlgebraSpec {
    std::vector<Generator> generators;
    // (i,j) -> lambda-polynomial coefficients of [g_i lambda g_j]; entry m is
    // the coefficient of lambda^m. Missing pairs default to zero; a pair given
    // in one direction is completed by skew-symmetry.
    std::map<std::pair<int, int>, std::vector<Expr>> brackets;
};

namespace detail {

struct AlgebraImpl {
    std::vector<Generator> gens;
    AlgebraSpec spec;
    // evaluated lambda coefficients, both directions
    mutable std::map<std::pair<int, int>, std::vector<State>> table;
    // memo for monomial-level products: (monoA, monoB, n) -> state
    mutable std::map<std::tuple<Mono, Mono, int>, State> memo;
    mutable std::set<std::tuple<Mono, Mono, int>> in_progress;
    mutable std::recursive_mutex mu;
};

} // namespace detail

class Algebra {
  public:
    Algebra() = default;
    explicit Algebra(std::shared_ptr<detail::AlgebraImpl> p) : p_(std::move(p)) {}

    bool valid() const { return (bool)p_; }
    size_t size() const { return p_->gens.size(); }
    const Generator& generator(int i) const { return p_->gens[(size_t)i]; }
    int find(const std::string& name) const {
        for (size_t i = 0; i < p_->gens.size(); ++i)
            if (p_->gens[i].name == name) return (int)i;
        return -1;
    }
    Parity parity(const Symbol& s) const { return p_->gens[(size_t)s.gen].parity; }
    Rational sym_weight(const Symbol& s) const {
        return p_->gens[(size_t)s.gen].weight + s.der;
    }

    bool same(const Algebra& o) const { return p_ == o.p_; }
    detail::AlgebraImpl* impl() const { return p_.get(); }

    // states (defined in state.hpp / wick.hpp)
    State zero() const;
    State unit() const;
    State gen(int i) const;
    State gen_der(int i, int d) const;

    // lambda coefficients of [g_i lambda g_j]; evaluated lazily
    const std::vector<State>& bracket_coeffs(int i, int j) const;

  private:
    std::shared_ptr<detail::AlgebraImpl> p_;
};

} // namespace superw
