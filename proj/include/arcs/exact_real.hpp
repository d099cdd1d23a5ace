#pragma once

#include <cstdint>
#include <memory>

#include "arcs/numeric.hpp"

namespace arcs {

/// Sign of e^x - y for rational x and y > 0, decided rigorously with
/// directed-rounding interval evaluation at increasing precision. Since e^x
/// is irrational for every rational x != 0, the loop always terminates.
int compare_exp(const Rational& x, const Rational& y);

/// Sign of m^2 - c^2 * q * (ln q)^3, i.e. whether m >= c q^{1/2} (ln q)^{3/2}.
int compare_sqrt_log_threshold(std::uint64_t m, const Rational& c, std::uint64_t q);

/// Closed interval [lo, hi] certified to contain the natural logarithm of a
/// positive quantity. Endpoints are kept in MPFR at a fixed working
/// precision; every operation rounds lo down and hi up.
class LnInterval {
 public:
  LnInterval();
  LnInterval(const LnInterval& other);
  LnInterval& operator=(const LnInterval& other);
  LnInterval(LnInterval&&) noexcept;
  LnInterval& operator=(LnInterval&&) noexcept;
  ~LnInterval();

  /// ln(v) for an exact positive rational.
  static LnInterval of(const Rational& v);
  /// ln C(n, k) for integers 0 <= k <= n.
  static LnInterval binomial(std::uint64_t n, std::uint64_t k);
  /// ln of the generalised binomial C(x, k); requires x - k + 1 > 0.
  static LnInterval binomial(const Rational& x, std::uint64_t k);

  LnInterval& operator+=(const LnInterval& o);
  LnInterval& operator-=(const LnInterval& o);
  /// Scales by a non-negative integer.
  LnInterval& operator*=(std::uint64_t k);
  friend LnInterval operator+(LnInterval a, const LnInterval& b) { return a += b; }
  friend LnInterval operator-(LnInterval a, const LnInterval& b) { return a -= b; }
  friend LnInterval operator*(LnInterval a, std::uint64_t k) { return a *= k; }

  double lo() const;
  double hi() const;
  double mid() const;

  /// -1 if this < o certainly, +1 if this > o certainly, 0 if the intervals
  /// overlap (undecided).
  int compare(const LnInterval& o) const;

  static constexpr long kPrecisionBits = 256;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace arcs
