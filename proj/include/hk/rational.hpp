#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hk {

// Exact rational arithmetic for crossing heights and positions.
// All geometry in this library starts from small integer endpoints, so
// numerators and denominators stay tiny; comparisons go through __int128
// anyway so nothing overflows.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0 always

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den - y.num * x.den, x.den * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num * y.num, x.den * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    return Rational(x.num * y.den, x.den * y.num);
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  // Largest integer <= num/den, correct for negative values too.
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace hk
