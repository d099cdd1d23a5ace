#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arcs/bound_chain.hpp"
#include "arcs/exact_real.hpp"

using arcs::BigInt;
using arcs::LnInterval;
using arcs::Rational;
using arcs::Verdict;

namespace {
bool contains(const LnInterval& iv, double v) { return iv.lo() <= v + 1e-9 * std::fabs(v) && v - 1e-9 * std::fabs(v) <= iv.hi(); }

double ln_rational(const Rational& r) {
  long en = 0, ed = 0;
  const double n = mpz_get_d_2exp(&en, r.get_num_mpz_t());
  const double d = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::log(n) - std::log(d) + double(en - ed) * std::log(2.0);
}
}  // namespace

TEST_CASE("exact exponential comparisons") {
  CHECK(arcs::compare_exp(Rational(1), Rational(2718281, 1000000)) > 0);
  CHECK(arcs::compare_exp(Rational(1), Rational(27183, 10000)) < 0);
  CHECK(arcs::compare_exp(Rational(0), Rational(1)) == 0);
  CHECK(arcs::compare_exp(Rational(-1), Rational(3678794, 10000000)) > 0);
  CHECK(arcs::compare_exp(Rational(-1), Rational(3678795, 10000000)) < 0);
  CHECK(arcs::compare_sqrt_log_threshold(116, Rational(1), 121) > 0);
  CHECK(arcs::compare_sqrt_log_threshold(115, Rational(1), 121) < 0);
}

TEST_CASE("log intervals enclose exact logarithms") {
  CHECK(contains(LnInterval::binomial(10, 3), std::log(120.0)));
  CHECK(contains(LnInterval::binomial(Rational(15, 2), 3), std::log(15.0 / 2 * 13.0 / 2 * 11.0 / 2 / 6)));
  CHECK(contains(LnInterval::binomial(Rational(3, 2), 1), std::log(1.5)));
  CHECK(contains(LnInterval::binomial(Rational(5, 4), 2), std::log(5.0 / 4 * 1.0 / 4 / 2)));
  CHECK(contains(LnInterval::of(Rational(7, 3)), std::log(7.0 / 3)));
  const auto big = LnInterval::binomial(1000000, 500);
  CHECK(contains(big, ln_rational(Rational(arcs::binomial(1000000, 500)))));
  CHECK(big.hi() - big.lo() < 1e-12 * big.hi());
  CHECK((LnInterval::of(Rational(2)) * 10).compare(LnInterval::of(Rational(1023))) > 0);
  CHECK((LnInterval::of(Rational(2)) * 10).compare(LnInterval::of(Rational(1025))) < 0);
  CHECK((LnInterval::of(Rational(2)) * 10).compare(LnInterval::of(Rational(1024))) == 0);
}

TEST_CASE("fingerprint size") {
  CHECK(arcs::fingerprint_size(121, Rational(1)) == 69);
  for (std::uint64_t q : {2, 3, 5, 7, 11, 49, 121, 1024, 99991}) {
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(3)}) {
      const double real = std::sqrt(8.0 * double(q) * std::log(double(q)) / eps.get_d());
      if (std::fabs(real - std::round(real)) < 1e-6) continue;
      CHECK(arcs::fingerprint_size(q, eps) == static_cast<std::uint64_t>(std::ceil(real)));
    }
  }
}

TEST_CASE("m < 2f makes the chain inapplicable") {
  const auto b = arcs::theorem_bound_chain(121, Rational(1), 100);
  CHECK(b.f == 69);
  CHECK_FALSE(b.flags.m_ge_2f);
  CHECK_FALSE(b.steps[0].applicable);
  CHECK_FALSE(b.all_flags_green());
  CHECK(b.coherent());
  CHECK(b.beta == Rational(69, 968));
  CHECK(b.R == 242);
}

TEST_CASE("parameter identity") {
  for (std::uint64_t q : {2, 9, 121, 4096, 1000003}) {
    for (const Rational& eps : {Rational(1, 3), Rational(1), Rational(5, 2)}) {
      const auto b = arcs::theorem_bound_chain(q, eps, q);
      CHECK(b.flags.identity_symbolic);
      CHECK(b.flags.identity_integer_f);
      CHECK(b.flags.container_condition);
    }
  }
}

TEST_CASE("exact terms agree with their log-intervals") {
  const auto b = arcs::theorem_bound_chain(49, Rational(3), 60);
  REQUIRE(b.flags.m_ge_2f);
  for (const auto& t : b.terms) {
    CAPTURE(t.name);
    REQUIRE(t.exact.has_value());
    REQUIRE(t.ln.has_value());
    CHECK(contains(*t.ln, ln_rational(*t.exact)));
  }
  CHECK(b.terms[3].exact == arcs::binomial(Rational(49 * 7), 60));
  CHECK(b.steps[0].method == "exact");
}

TEST_CASE("green flags imply every step holds") {
  struct Case {
    std::uint64_t q;
    Rational eps;
  };
  std::uint64_t green = 0;
  for (const auto& c : {Case{1U << 20, Rational(8)}, Case{9765625, Rational(3)}, Case{16777216, Rational(2)},
                        Case{43046721, Rational(1)}}) {
    for (std::uint64_t k = 0; k <= 4; ++k) {
      const std::uint64_t m = c.q - k * (c.q / 10);
      const auto b = arcs::theorem_bound_chain(c.q, c.eps, m);
      if (!b.all_flags_green()) continue;
      ++green;
      for (const auto& s : b.steps) {
        CHECK(s.applicable);
        CHECK(s.verdict == Verdict::kHolds);
      }
    }
  }
  CHECK(green >= 8);
}

TEST_CASE("threshold flag needs C") {
  CHECK_FALSE(arcs::theorem_bound_chain(121, Rational(1), 150).flags.m_ge_threshold.has_value());
  CHECK(*arcs::theorem_bound_chain(121, Rational(1), 150, Rational(1)).flags.m_ge_threshold);
  CHECK_FALSE(*arcs::theorem_bound_chain(121, Rational(1), 150, Rational(100)).flags.m_ge_threshold);
}

TEST_CASE("alpha flags") {
  // eps = 3: eps/4 = 3/4 is weaker than eps/(2(1+eps)) = 3/8.
  const auto b = arcs::theorem_bound_chain(9765625, Rational(3), 4000000);
  CHECK(b.alpha > 3.0 / 8);
  CHECK(b.alpha < 3.0 / 4);
  CHECK(b.flags.alpha_lt_eps_over_4);
  CHECK_FALSE(b.flags.alpha_absorbable);
  CHECK_FALSE(b.steps[2].applicable);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(arcs::theorem_bound_chain(1, Rational(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(arcs::theorem_bound_chain(5, Rational(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(arcs::theorem_bound_chain(5, Rational(1), 0), std::invalid_argument);
}
