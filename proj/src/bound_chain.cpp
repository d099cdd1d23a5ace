#include "arcs/bound_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcs {
namespace {

Rational from_u64(std::uint64_t v) { return Rational(BigInt(static_cast<unsigned long>(v))); }

// Exact values are materialised only below this size (natural log of the
// largest term) and arc size; beyond it the certified log-intervals decide.
constexpr double kExactLnLimit = 150000.0;
constexpr std::uint64_t kExactMaxM = 20000;

BigInt pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// ln C(x, k) when C(x, k) > 0 is guaranteed by x - k + 1 > 0.
std::optional<LnInterval> ln_binomial(const Rational& x, std::uint64_t k) {
  if (sgn(x - from_u64(k) + 1) <= 0) return std::nullopt;
  return LnInterval::binomial(x, k);
}

Verdict compare_terms(const ChainTerm& a, const ChainTerm& b, std::string& method) {
  if (a.exact && b.exact) {
    method = "exact";
    return *a.exact <= *b.exact ? Verdict::kHolds : Verdict::kViolated;
  }
  if (a.ln && b.ln) {
    method = "certified-log";
    switch (a.ln->compare(*b.ln)) {
      case -1: return Verdict::kHolds;
      case 1: return Verdict::kViolated;
      default: return Verdict::kUndecided;
    }
  }
  if (a.exact && sgn(*a.exact) == 0 && (b.ln || (b.exact && sgn(*b.exact) >= 0))) {
    method = "exact";
    return Verdict::kHolds;
  }
  method = "none";
  return Verdict::kUnavailable;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kUndecided: return "undecided";
    case Verdict::kUnavailable: return "unavailable";
  }
  return "unknown";
}

bool BoundReport::all_flags_green() const {
  return flags.m_ge_2f && flags.m_le_q && flags.m_le_x && flags.container_condition && flags.identity_symbolic &&
         flags.identity_integer_f && flags.m_ge_threshold.value_or(true) && flags.alpha_lt_eps_over_4 &&
         flags.alpha_absorbable;
}

bool BoundReport::coherent() const {
  return std::none_of(steps.begin(), steps.end(),
                      [](const ChainStep& s) { return s.applicable && s.verdict == Verdict::kViolated; });
}

std::uint64_t fingerprint_size(std::uint64_t q, const Rational& epsilon) {
  if (q < 2) throw std::invalid_argument("fingerprint_size: q must be >= 2");
  if (sgn(epsilon) <= 0) throw std::invalid_argument("fingerprint_size: epsilon must be positive");
  const Rational qq = from_u64(q);
  auto ok = [&](std::uint64_t f) { return compare_exp(epsilon * from_u64(f) * from_u64(f) / (8 * qq), qq) >= 0; };
  const double estimate = std::sqrt(8.0 * static_cast<double>(q) * std::log(static_cast<double>(q)) / epsilon.get_d());
  auto f = static_cast<std::uint64_t>(std::max(1.0, std::floor(estimate)));
  while (f > 1 && ok(f - 1)) --f;
  while (!ok(f)) ++f;
  return f;
}

BoundReport theorem_bound_chain(std::uint64_t q, const Rational& epsilon, std::uint64_t m,
                                std::optional<Rational> c_constant) {
  if (q < 2) throw std::invalid_argument("theorem_bound_chain: q must be >= 2");
  if (sgn(epsilon) <= 0) throw std::invalid_argument("theorem_bound_chain: epsilon must be positive");
  if (m < 1) throw std::invalid_argument("theorem_bound_chain: m must be >= 1");

  BoundReport rep;
  rep.q = q;
  rep.epsilon = epsilon;
  rep.m = m;
  rep.c_constant = c_constant;
  const Rational qq = from_u64(q), mm = from_u64(m);
  const std::uint64_t f = fingerprint_size(q, epsilon);
  const Rational ff = from_u64(f);
  rep.f = f;
  rep.beta = epsilon * ff / (8 * qq);
  rep.beta.canonicalize();
  const Rational x = (1 + epsilon) * qq;
  const Rational y = (1 + 2 * epsilon) * qq;
  rep.R = ceil(x);
  rep.alpha = 6.0 * static_cast<double>(f) * std::log(static_cast<double>(q)) / static_cast<double>(m);

  // Side conditions, all decided exactly.
  BoundFlags& fl = rep.flags;
  fl.m_ge_2f = m >= 2 * f;
  fl.m_le_q = m <= q;
  fl.m_le_x = mm <= x;
  const std::uint64_t q2 = q * q;
  fl.container_condition =
      f >= q2 || compare_exp(rep.beta * ff, from_u64(q2 - f) / Rational(rep.R)) >= 0;
  const Rational coefficient = (epsilon / (8 * qq)) * (8 * qq / epsilon);
  fl.identity_symbolic = coefficient == 1 && qq <= x && x <= Rational(rep.R);
  fl.identity_integer_f = compare_exp(rep.beta * ff, qq) >= 0;
  if (c_constant) fl.m_ge_threshold = compare_sqrt_log_threshold(m, *c_constant, q) >= 0;
  fl.alpha_lt_eps_over_4 = compare_exp(epsilon * mm / (24 * ff), qq) > 0;
  fl.alpha_absorbable = compare_exp(epsilon * mm / (12 * ff * (1 + epsilon)), qq) >= 0;

  // Terms as certified log-intervals.
  const LnInterval ln_q = LnInterval::of(qq);
  const LnInterval ln_m = LnInterval::of(mm);
  const auto ln_cx = ln_binomial(x, m);
  auto& [t1, t2, t3, t4] = rep.terms;
  t1.name = "C(q^2,f)*C(q^2-f,f)*C((1+eps)q,m-2f)";
  t2.name = "q^{4f}*m^{2f}*C((1+eps)q,m)";
  t3.name = "q^{6f}*C((1+eps)q,m)";
  t4.name = "C((1+2eps)q,m)";
  rep.theorem_term.name = "C((1+eps)q,m)";
  rep.theorem_term.ln = ln_cx;

  if (fl.m_ge_2f) {
    if (2 * f > q2) {
      t1.exact = Rational(0);
    } else if (auto tail = ln_binomial(x, m - 2 * f)) {
      t1.ln = LnInterval::binomial(q2, f) + LnInterval::binomial(q2 - f, f) + *tail;
    }
  }
  if (ln_cx) {
    t2.ln = ln_q * (4 * f) + ln_m * (2 * f) + *ln_cx;
    t3.ln = ln_q * (6 * f) + *ln_cx;
  }
  t4.ln = ln_binomial(y, m);

  // Exact values when they are small enough to be worth it.
  double largest = 0.0;
  bool all_ln = true;
  for (const auto& t : rep.terms) {
    if (t.ln)
      largest = std::max(largest, t.ln->hi());
    else if (!t.exact)
      all_ln = false;
  }
  if (all_ln && largest <= kExactLnLimit && m <= kExactMaxM) {
    const Rational cx = binomial(x, m);
    if (!t1.exact && t1.ln)
      t1.exact = Rational(binomial(q2, f) * binomial(q2 - f, f)) * binomial(x, m - 2 * f);
    if (t2.ln) t2.exact = Rational(pow(q, 4 * f) * pow(m, 2 * f)) * cx;
    if (t3.ln) t3.exact = Rational(pow(q, 6 * f)) * cx;
    if (t4.ln) t4.exact = binomial(y, m);
    if (rep.theorem_term.ln) rep.theorem_term.exact = cx;
  }

  auto& [s1, s2, s3] = rep.steps;
  s1.condition = "m >= 2f and m <= (1+eps)q";
  s1.applicable = fl.m_ge_2f && fl.m_le_x;
  s1.verdict = compare_terms(t1, t2, s1.method);
  s2.condition = "m <= q";
  s2.applicable = fl.m_le_q && fl.m_le_x;
  s2.verdict = compare_terms(t2, t3, s2.method);
  if (s2.verdict == Verdict::kUndecided) {
    // Both terms carry the factor C((1+eps)q, m); their ratio is (q/m)^{2f}.
    s2.verdict = m <= q ? Verdict::kHolds : Verdict::kViolated;
    s2.method = "exact-ratio";
  }
  s3.condition = "m <= q and 6 f ln q / m <= eps / (2(1+eps))";
  s3.applicable = fl.m_le_q && fl.alpha_absorbable;
  s3.verdict = compare_terms(t3, t4, s3.method);
  return rep;
}

}  // namespace arcs
