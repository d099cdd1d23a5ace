#include "arcs/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace arcs {
namespace {

using Poly = std::vector<std::uint32_t>;  // c_0..c_d over F_p

void trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() - 1 >= dm && !(a.size() == 1 && a[0] == 0)) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t e) {
  Poly d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

// Table-free multiplication used only while building the log tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const Poly& modulus, std::uint32_t p,
                       std::uint32_t e) {
  const Poly da = digits_of(a, p, e), db = digits_of(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(e, 0);
  return index_of(r, p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k, const Poly& modulus, std::uint32_t p, std::uint32_t e) {
  std::uint32_t result = 1;
  while (k) {
    if (k & 1U) result = slow_mul(result, a, modulus, p, e);
    a = slow_mul(a, a, modulus, p, e);
    k >>= 1U;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  if (coeffs.size() < 2 || coeffs.back() != 1) return false;
  const Poly f(coeffs.begin(), coeffs.end());
  const std::size_t d = f.size() - 1;
  for (std::size_t deg = 1; deg <= d / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(deg + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[deg] = 1;
      const Poly r = poly_mod(f, g, p);
      if (r.size() == 1 && r[0] == 0) return false;
    }
  }
  return true;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus,
                     std::uint32_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("make_field: order " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds limit " + std::to_string(max_order));
  }

  FieldSpec f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.pow_p_.resize(e + 1);
  f.pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= e; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * p;

  if (modulus) {
    if (modulus->size() != e + 1 || modulus->back() != 1)
      throw std::invalid_argument("make_field: modulus must be monic of degree e");
    for (auto c : *modulus)
      if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
    if (e > 1 && !is_irreducible(*modulus, p)) throw std::invalid_argument("make_field: supplied modulus is reducible");
    f.modulus_ = *modulus;
  } else if (e == 1) {
    f.modulus_ = {0, 1};
  } else {
    // Smallest monic irreducible in the order of the base-p integer c_0 + c_1 p + ...
    for (std::uint32_t code = 0; code < f.q_; ++code) {
      Poly cand = digits_of(code, p, e);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
  }

  // Field tables. For e = 1 the modulus is x, so reduction is plain mod p.
  const Poly& m = f.modulus_;
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < f.q_ && generator == 0; ++g) {
    bool primitive = slow_pow(g, order, m, p, e) == 1;
    for (auto r : factors) primitive = primitive && slow_pow(g, order / r, m, p, e) != 1;
    if (primitive) generator = g;
  }
  if (generator == 0) throw std::logic_error("make_field: no primitive element found");

  f.antilog_.assign(order, 0);
  f.log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    f.antilog_[k] = x;
    f.log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, generator, m, p, e);
  }
  if (x != 1) throw std::logic_error("make_field: generator order mismatch");
  return f;
}

FieldSpec make_field_of_order(std::uint32_t q, std::uint32_t max_order) {
  if (q < 2) throw std::invalid_argument("make_field_of_order: q must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("make_field_of_order: " + std::to_string(q) + " is not a prime power");
  return make_field(p, e, std::nullopt, max_order);
}

void FieldSpec::check(FieldElement a) const {
  if (a.index >= q_)
    throw std::out_of_range("field element " + std::to_string(a.index) + " outside F_" + std::to_string(q_));
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  FieldElement a{index};
  check(a);
  return a;
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (e_ == 1) return {(a.index + b.index) % p_};
  if (p_ == 2) return {a.index ^ b.index};
  std::uint32_t out = 0;
  std::uint32_t x = a.index, y = b.index;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  check(a);
  if (e_ == 1) return {(p_ - a.index) % p_};
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return {out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.index == 0 || b.index == 0) return {0};
  const std::uint32_t order = q_ - 1;
  return {antilog_[(log_[a.index] + log_[b.index]) % order]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  check(a);
  if (a.index == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  const std::uint32_t order = q_ - 1;
  return {antilog_[(order - log_[a.index]) % order]};
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t k) const {
  check(a);
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t order = q_ - 1;
  return {antilog_[(static_cast<std::uint64_t>(log_[a.index]) * (k % order)) % order]};
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

}  // namespace arcs
