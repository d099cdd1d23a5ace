#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arcs {

/// An element of some F_q, identified by its index in [0, q).
///
/// The index is the base-p encoding of the polynomial coefficients
/// (constant term least significant); index 0 is zero, index 1 is one.
struct FieldElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1U << 14;

/// Arithmetic tables for F_q with q = p^e.
///
/// Multiplication and inversion go through discrete log / antilog tables
/// relative to a primitive element. Addition works coefficient-wise
/// mod p on the base-p digits. For e > 1 the modulus is the
/// lexicographically smallest monic irreducible of degree e, unless one is
/// supplied. Immutable after construction.
class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Monic modulus, coefficients c_0..c_e (c_e = 1). Just {0, 1} for e = 1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  FieldElement primitive_element() const noexcept { return {antilog_.size() > 1 ? antilog_[1] : 1U}; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// All q elements in index order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldSpec make_field(std::uint32_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>,
                              std::uint32_t);
  FieldSpec() = default;
  void check(FieldElement a) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;      // log_[a] for a != 0
  std::vector<std::uint32_t> antilog_;  // antilog_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> pow_p_;    // p^i, i in [0, e]
};

/// Builds F_{p^e}. Throws std::invalid_argument when p is not prime, e < 1,
/// p^e exceeds max_order, or a supplied modulus is not a monic irreducible
/// of degree e.
FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                     std::uint32_t max_order = kDefaultMaxFieldOrder);

/// Builds F_q for a prime power q.
FieldSpec make_field_of_order(std::uint32_t q, std::uint32_t max_order = kDefaultMaxFieldOrder);

bool is_prime(std::uint64_t n) noexcept;

/// True when the monic polynomial (coefficients c_0..c_d, c_d = 1) has no
/// monic factor of degree 1..d/2 over F_p.
bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace arcs
