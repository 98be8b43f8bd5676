#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace hsparse {

__extension__ using Wide = unsigned __int128;

// Non-negative rational with an explicit +infinity (zero denominator).
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0) {
      num = 1;
      return;
    }
    std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  static Rational infinity() { return Rational(1, 0); }
  static Rational integer(std::uint64_t v) { return Rational(v, 1); }

  bool is_infinite() const { return den == 0; }
  // floor(k * this); callers never ask this of infinity.
  std::uint64_t floor_times(std::uint64_t k) const { return k * num / den; }
  Rational inverse() const { return num == 0 ? infinity() : Rational(den, num); }
  double to_double() const { return den == 0 ? 1e300 : static_cast<double>(num) / static_cast<double>(den); }

  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    Wide l = static_cast<Wide>(a.num) * b.den;
    Wide r = static_cast<Wide>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
};

}  // namespace hsparse
