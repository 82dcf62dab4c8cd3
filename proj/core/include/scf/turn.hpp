#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "scf/errors.hpp"

namespace scf {

/// An exact rotation angle measured in full turns (theta / 2pi), reduced to
/// lowest terms and normalized into [0, 1). All torus coordinates, search
/// parameters and witnesses are Turns; no floating point enters the engines.
class Turn {
 public:
  constexpr Turn() : num_(0), den_(1) {}

  /// num/den turns, normalized mod 1. den must be nonzero.
  Turn(std::int64_t num, std::int64_t den) {
    if (den == 0) throw invalid_input("turn denominator must be nonzero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / (g ? g : 1);
    den_ = den / (g ? g : 1);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_half() const { return 2 * num_ == den_; }
  /// True when the angle equals its own negation mod 1 (0 or 1/2).
  bool is_self_symmetric() const { return is_zero() || is_half(); }

  /// -t mod 1.
  Turn negated() const { return is_zero() ? Turn() : Turn(den_ - num_, den_); }

  /// min(t, 1-t): identifies a rotation with its inverse.
  Turn folded() const {
    const Turn n = negated();
    return *this < n ? *this : n;
  }

  /// c*t mod 1 for an integer multiplier.
  Turn scaled(std::int64_t c) const {
    const std::int64_t r = ((c % den_) + den_) % den_;
    return Turn(static_cast<std::int64_t>((__int128)num_ * r % den_), den_);
  }

  friend Turn operator+(const Turn& a, const Turn& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t lcm = a.den_ / g * b.den_;
    const __int128 n = (__int128)a.num_ * (lcm / a.den_) + (__int128)b.num_ * (lcm / b.den_);
    return Turn(static_cast<std::int64_t>(n % lcm), lcm);
  }

  friend bool operator==(const Turn& a, const Turn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Turn& a, const Turn& b) {
    const __int128 lhs = (__int128)a.num_ * b.den_;
    const __int128 rhs = (__int128)b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  /// "p/q" in lowest terms ("0/1" for zero).
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p/q" or a bare integer; normalizes mod 1.
  static Turn parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Turn(std::stoll(text), 1);
      const std::int64_t p = std::stoll(text.substr(0, slash));
      const std::int64_t q = std::stoll(text.substr(slash + 1));
      return Turn(p, q);  // throws on q == 0
    } catch (const invalid_input&) {
      throw;
    } catch (const std::exception&) {
      throw invalid_input("cannot parse turn '" + text + "'");
    }
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace scf
