// Naive reference implementations used only as test oracles. Nothing here
// touches the log tables or the incidence index.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arcs/finite_field.hpp"
#include "arcs/numeric.hpp"

namespace oracle {

// Schoolbook polynomial arithmetic over F_p modulo the field's modulus.
struct NaiveField {
  std::uint32_t p, e, q;
  std::vector<std::uint32_t> modulus;

  explicit NaiveField(const arcs::FieldSpec& f)
      : p(f.p()), e(f.e()), q(f.q()), modulus(f.modulus().begin(), f.modulus().end()) {}

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(e);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint32_t> prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = prod.size(); d-- > e;) {
      const std::uint32_t c = prod[d];
      if (!c) continue;
      for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + p * p - c * modulus[i] % p) % p;
    }
    prod.resize(e);
    return pack(prod);
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
};

// Point index i = x * q + y.
inline bool collinear(const NaiveField& F, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const std::uint32_t q = F.q;
  const std::uint32_t ax = a / q, ay = a % q, bx = b / q, by = b % q, cx = c / q, cy = c % q;
  const std::uint32_t lhs = F.mul(F.sub(bx, ax), F.sub(cy, ay));
  const std::uint32_t rhs = F.mul(F.sub(by, ay), F.sub(cx, ax));
  return lhs == rhs;
}

inline std::uint64_t collinear_triples(const NaiveField& F, const std::vector<std::uint32_t>& pts) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear(F, pts[i], pts[j], pts[k])) ++t;
  return t;
}

inline bool is_arc(const NaiveField& F, const std::vector<std::uint32_t>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear(F, pts[i], pts[j], pts[k])) return false;
  return true;
}

// Calls fn on every k-subset of [0, n) in lexicographic order.
inline void for_each_subset(std::uint32_t n, std::uint32_t k, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> s(k);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t depth, std::uint32_t start) {
    if (depth == k) {
      fn(s);
      return;
    }
    for (std::uint32_t i = start; i + (k - depth) <= n; ++i) {
      s[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Arcs of size m, by checking every m-subset.
inline std::uint64_t naive_arc_count(const NaiveField& F, std::uint32_t m) {
  std::uint64_t c = 0;
  for_each_subset(F.q * F.q, m, [&](const std::vector<std::uint32_t>& s) {
    if (is_arc(F, s)) ++c;
  });
  return c;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
