#pragma once

// Minimal expression language for the CLI:
//   identifiers for generators, d^j g for derivatives, :a b: right-nested
//   normal products, |c1,c2,...> Fock vectors, scalar literals in eps.
// Example: 3/2*eps :t1 d^2 t2: + :psi psi*:

#include "superw/fock.hpp"
#include "superw/wick.hpp"

#include <optional>

namespace superw {

struct ParsedElement {
    State state;                        // polynomial part
    std::optional<WeightVector> gamma;  // exponent when a Fock vector appears
};

class DslParser {
  public:
    DslParser(std::string src, const Algebra& alg, const FockSpace* space = nullptr)
        : s_(std::move(src)), alg_(alg), space_(space) {}

    ParsedElement parse() {
        ParsedElement r = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

    Scalar parse_scalar_only() {
        Scalar r = parse_sexpr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long long parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    // scalar grammar: sums/products/quotients of numbers and eps powers
    Scalar parse_sexpr() {
        Scalar r = parse_sterm();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                r += parse_sterm();
            } else if (c == '-') {
                ++pos_;
                r -= parse_sterm();
            } else {
                return r;
            }
        }
    }
    Scalar parse_sterm() {
        Scalar r = parse_sfactor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r *= parse_sfactor();
            } else if (c == '/') {
                ++pos_;
                Scalar d = parse_sfactor();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }
    Scalar parse_sfactor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_sfactor();
        }
        if (c == '(') {
            ++pos_;
            Scalar r = parse_sexpr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (isdigit((unsigned char)c)) {
            long long v = parse_int();
            Scalar r{Rational(v)};
            return maybe_power(r);
        }
        if (match_word("eps")) return maybe_power(Scalar::eps());
        fail("expected a scalar");
    }
    Scalar maybe_power(Scalar base) {
        if (peek() == '^') {
            ++pos_;
            long long e = parse_int();
            if (e < 0) fail("negative scalar powers are not supported");
            Scalar r(1);
            for (long long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    bool match_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) == 0) {
            size_t after = pos_ + w.size();
            if (after >= s_.size() || !isalnum((unsigned char)s_[after])) {
                pos_ = after;
                return true;
            }
        }
        return false;
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_' || s_[pos_] == '*'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return s_.substr(start, pos_ - start);
    }

    // d^j g | g
    State parse_symbol_atom() {
        skip_ws();
        int der = 0;
        size_t save = pos_;
        if (s_.compare(pos_, 2, "d^") == 0) {
            pos_ += 2;
            der = (int)parse_int();
            if (der < 0) fail("negative derivative order");
        } else if (pos_ + 1 < s_.size() && s_[pos_] == 'd' && s_[pos_ + 1] == ' ') {
            pos_ += 1;
            der = 1;
        }
        skip_ws();
        std::string name = parse_ident();
        int g = alg_.find(name);
        if (g < 0) {
            pos_ = save;
            fail("unknown generator '" + name + "'");
        }
        return alg_.gen_der(g, der);
    }

    ParsedElement parse_atom() {
        char c = peek();
        if (c == ':') {
            ++pos_;
            std::vector<State> factors;
            while (peek() != ':') {
                if (peek() == '\0') fail("unterminated normal product");
                factors.push_back(parse_symbol_atom());
            }
            ++pos_; // closing ':'
            if (factors.empty()) fail("empty normal product");
            State r = factors.back();
            for (size_t i = factors.size() - 1; i-- > 0;) r = normal_product(factors[i], r);
            return {r, std::nullopt};
        }
        if (c == '|') {
            if (!space_) fail("Fock vectors need a lattice-enabled algebra");
            ++pos_;
            WeightVector g = space_->zero_vec();
            size_t i = 0;
            while (true) {
                if (i >= g.size()) fail("too many Fock coordinates");
                g[i++] = parse_sexpr();
                if (eat(',')) continue;
                if (eat('>')) break;
                fail("expected ',' or '>' in Fock vector");
            }
            if (i != g.size()) fail("expected " + std::to_string(g.size()) + " Fock coordinates");
            return {alg_.unit(), std::move(g)};
        }
        if (c == '1') {
            ++pos_;
            return {alg_.unit(), std::nullopt};
        }
        return {parse_symbol_atom(), std::nullopt};
    }

    // term: product of scalar factors and atoms (juxtaposition or '*')
    ParsedElement parse_term() {
        Scalar coeff(1);
        std::optional<State> st;
        std::optional<WeightVector> gamma;
        bool any = false;
        auto scalar_ahead = [&]() {
            char c = peek();
            return isdigit((unsigned char)c) || c == '(' ||
                   (c == 'e' && s_.compare(pos_, 3, "eps") == 0 &&
                    (pos_ + 3 >= s_.size() || !isalnum((unsigned char)s_[pos_ + 3])));
        };
        while (true) {
            char c = peek();
            if (scalar_ahead()) {
                coeff *= parse_sfactor();
                // scalar products/quotients chain only while more scalars follow
                while (true) {
                    char op = peek();
                    if (op != '*' && op != '/') break;
                    size_t save = pos_;
                    ++pos_;
                    if (!scalar_ahead()) {
                        pos_ = save;
                        break;
                    }
                    Scalar f = parse_sfactor();
                    if (op == '/') {
                        if (f.is_zero()) fail("division by zero");
                        coeff /= f;
                    } else {
                        coeff *= f;
                    }
                }
                any = true;
            } else if (c == ':' || c == '|' || isalpha((unsigned char)c)) {
                ParsedElement a = parse_atom();
                if (a.gamma) {
                    if (gamma) fail("at most one Fock vector per term");
                    gamma = a.gamma;
                }
                st = st ? normal_product(*st, a.state) : a.state;
                any = true;
            } else if (c == '*') {
                ++pos_;
            } else {
                break;
            }
        }
        if (!any) fail("expected a term");
        State base = st ? *st : alg_.unit();
        return {coeff * base, gamma};
    }

    ParsedElement parse_sum() {
        ParsedElement r{alg_.zero(), std::nullopt};
        bool first = true;
        while (true) {
            char c = peek();
            Scalar sign(1);
            bool took_op = false;
            if (c == '+') {
                ++pos_;
                took_op = true;
            } else if (c == '-') {
                ++pos_;
                sign = Scalar(-1);
                took_op = true;
            } else if (!first) {
                break;
            }
            if (peek() == '\0') {
                if (first || took_op) fail("expected a term");
                break;
            }
            ParsedElement t = parse_term();
            if (t.gamma || r.gamma) {
                if (!first && !(t.gamma == r.gamma)) fail("mixed Fock exponents in a sum");
                r.gamma = t.gamma;
            }
            r.state += sign * t.state;
            first = false;
        }
        return r;
    }

    std::string s_;
    size_t pos_ = 0;
    const Algebra& alg_;
    const FockSpace* space_;
};

} // namespace superw
