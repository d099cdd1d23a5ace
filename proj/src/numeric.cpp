#include "arcs/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace arcs {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Balanced product tree; much faster than a left fold for long products.
BigInt product(std::vector<BigInt>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return BigInt(1);
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product(terms, lo, mid) * product(terms, mid, hi);
}

}  // namespace

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational binomial(const Rational& x, std::uint64_t k) {
  // x = a/b: x(x-1)...(x-k+1)/k! = prod(a - i b) / (b^k k!)
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  std::vector<BigInt> terms;
  terms.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) terms.emplace_back(a - BigInt(std::to_string(i)) * b);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), k);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  Rational r(product(terms, 0, terms.size()), den * fact);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "': expected A/B with integer A, B");
  Rational r{BigInt(std::string(num)), BigInt(std::string(den))};
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt floor(const Rational& v) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& v) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

}  // namespace arcs
