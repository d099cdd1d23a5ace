#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "arcs/exact_real.hpp"
#include "arcs/numeric.hpp"

namespace arcs {

enum class Verdict { kHolds, kViolated, kUndecided, kUnavailable };
std::string to_string(Verdict v);

/// One term of the counting chain, as a certified log-interval and, when
/// small enough, as an exact rational.
struct ChainTerm {
  std::string name;
  std::optional<LnInterval> ln;
  std::optional<Rational> exact;
};

/// prev <= next, with the side condition that makes the step valid.
struct ChainStep {
  std::string condition;
  bool applicable = false;
  Verdict verdict = Verdict::kUnavailable;
  std::string method;  // "exact" or "certified-log"
};

struct BoundFlags {
  bool m_ge_2f = false;
  bool m_le_q = false;
  bool m_le_x = false;                  // m <= (1 + eps) q
  bool container_condition = false;     // R >= e^{-beta f} (q^2 - f)
  bool identity_symbolic = false;       // beta f0 = ln q for f0^2 = 8 q ln q / eps, and q <= (1+eps)q <= R
  bool identity_integer_f = false;      // e^{-beta f} q^2 <= q for the rounded f
  std::optional<bool> m_ge_threshold;   // m >= C q^{1/2} (ln q)^{3/2}, when C is given
  bool alpha_lt_eps_over_4 = false;     // 6 f ln q / m < eps / 4
  bool alpha_absorbable = false;        // 6 f ln q / m <= eps / (2 (1 + eps))
};

/// The counting chain for arcs of size m containing a fixed f-set:
///   C(q^2, f) C(q^2 - f, f) C(X, m - 2f)
///     <= q^{4f} m^{2f} C(X, m) <= q^{6f} C(X, m) <= C(Y, m)
/// with X = (1 + eps) q, Y = (1 + 2 eps) q, f = ceil(sqrt(8 q ln q / eps)),
/// beta = eps f / (8q), R = ceil(X).
struct BoundReport {
  std::uint64_t q = 0;
  Rational epsilon;
  std::uint64_t m = 0;
  std::optional<Rational> c_constant;
  std::uint64_t f = 0;
  Rational beta;
  BigInt R;
  double alpha = 0.0;  // 6 f ln q / m, display only
  BoundFlags flags;
  std::array<ChainTerm, 4> terms;
  std::array<ChainStep, 3> steps;
  ChainTerm theorem_term;  // C((1 + eps) q, m), the statement's normalisation

  /// Every flag green (the threshold flag only when C was given).
  bool all_flags_green() const;
  /// No applicable step is violated.
  bool coherent() const;
};

/// Smallest integer f with f^2 >= 8 q ln q / eps, decided exactly.
std::uint64_t fingerprint_size(std::uint64_t q, const Rational& epsilon);

/// Requires q >= 2, eps > 0, m >= 1. Regimes where the chain does not apply
/// are flagged, not rejected.
BoundReport theorem_bound_chain(std::uint64_t q, const Rational& epsilon, std::uint64_t m,
                                std::optional<Rational> c_constant = std::nullopt);

}  // namespace arcs
