#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

struct PoleAtEvaluation : std::runtime_error {
    explicit PoleAtEvaluation(const std::string& w) : std::runtime_error(w) {}
};
struct NonIntegralPairing : std::runtime_error {
    explicit NonIntegralPairing(const std::string& w) : std::runtime_error(w) {}
};
struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct InconsistentSpec : std::runtime_error {
    explicit InconsistentSpec(const std::string& w) : std::runtime_error(w) {}
};
struct NonHeisenbergGenerator : std::runtime_error {
    explicit NonHeisenbergGenerator(const std::string& w) : std::runtime_error(w) {}
};
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& w, size_t p) : std::runtime_error(w), pos(p) {}
};

// Deterministic generator for property tests; splitmix64 keeps runs
// reproducible across platforms (std distributions are not portable).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    // small signed rational with numerator in [-m, m]\{0} and denominator in [1, d]
    Rational small_rational(int m = 5, int d = 3) {
        long long num = (long long)below(2 * (uint64_t)m) - m;
        if (num >= 0) num += 1;
        long long den = (long long)below((uint64_t)d) + 1;
        return Rational(num, den);
    }

  private:
    uint64_t state_;
};

inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

} // namespace superw
