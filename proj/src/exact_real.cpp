#include "arcs/exact_real.hpp"

#include <stdexcept>
#include <utility>

#include <mpfr.h>

namespace arcs {
namespace {

// RAII holder for a single mpfr_t.
class Mp {
 public:
  explicit Mp(long prec) { mpfr_init2(v_, prec); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

constexpr long kMaxPrecision = 1L << 16;

// Location and value of the minimum of lgamma on (0, inf), rounded outward.
constexpr double kLgammaArgMinLo = 1.4616321449683622;
constexpr double kLgammaArgMinHi = 1.4616321449683624;
constexpr double kLgammaMinLower = -0.12148629053584962;

// Bounds for lgamma over [a_lo, a_hi] with 0 < a_lo <= a_hi.
void lgamma_bounds(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr a_lo, mpfr_srcptr a_hi) {
  const long prec = mpfr_get_prec(out_lo);
  Mp t(prec);
  int sign = 0;
  if (mpfr_cmp_d(a_lo, kLgammaArgMinHi) >= 0) {
    mpfr_lgamma(out_lo, &sign, a_lo, MPFR_RNDD);
    mpfr_lgamma(out_hi, &sign, a_hi, MPFR_RNDU);
  } else if (mpfr_cmp_d(a_hi, kLgammaArgMinLo) <= 0) {
    mpfr_lgamma(out_lo, &sign, a_hi, MPFR_RNDD);
    mpfr_lgamma(out_hi, &sign, a_lo, MPFR_RNDU);
  } else {
    mpfr_set_d(out_lo, kLgammaMinLower, MPFR_RNDD);
    mpfr_lgamma(out_hi, &sign, a_lo, MPFR_RNDU);
    mpfr_lgamma(t.get(), &sign, a_hi, MPFR_RNDU);
    mpfr_max(out_hi, out_hi, t.get(), MPFR_RNDU);
  }
}

}  // namespace

int compare_exp(const Rational& x, const Rational& y) {
  if (sgn(y) <= 0) throw std::invalid_argument("compare_exp: y must be positive");
  if (sgn(x) == 0) return cmp(Rational(1), y) < 0 ? -1 : (cmp(Rational(1), y) > 0 ? 1 : 0);
  for (long prec = 64; prec <= kMaxPrecision; prec *= 2) {
    Mp xl(prec), xh(prec), el(prec), eh(prec), yl(prec), yh(prec);
    mpfr_set_q(xl.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xh.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(el.get(), xl.get(), MPFR_RNDD);
    mpfr_exp(eh.get(), xh.get(), MPFR_RNDU);
    mpfr_set_q(yl.get(), y.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(yh.get(), y.get_mpq_t(), MPFR_RNDU);
    if (mpfr_less_p(eh.get(), yl.get())) return -1;
    if (mpfr_greater_p(el.get(), yh.get())) return 1;
  }
  throw std::runtime_error("compare_exp: precision limit reached");
}

int compare_sqrt_log_threshold(std::uint64_t m, const Rational& c, std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("compare_sqrt_log_threshold: q must be positive");
  const BigInt m2 = BigInt(m) * BigInt(m);
  if (sgn(c) == 0 || q == 1) return sgn(m2) > 0 ? 1 : 0;
  const Rational c2q = c * c * Rational(BigInt(q));
  for (long prec = 64; prec <= kMaxPrecision; prec *= 2) {
    Mp lo(prec), hi(prec), f(prec), ml(prec), mh(prec);
    mpfr_set_ui(lo.get(), q, MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_pow_ui(lo.get(), lo.get(), 3, MPFR_RNDD);
    mpfr_set_q(f.get(), c2q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(lo.get(), lo.get(), f.get(), MPFR_RNDD);

    mpfr_set_ui(hi.get(), q, MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_pow_ui(hi.get(), hi.get(), 3, MPFR_RNDU);
    mpfr_set_q(f.get(), c2q.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(hi.get(), hi.get(), f.get(), MPFR_RNDU);

    mpfr_set_z(ml.get(), m2.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(mh.get(), m2.get_mpz_t(), MPFR_RNDU);
    if (mpfr_less_p(mh.get(), lo.get())) return -1;
    if (mpfr_greater_p(ml.get(), hi.get())) return 1;
  }
  throw std::runtime_error("compare_sqrt_log_threshold: precision limit reached");
}

struct LnInterval::Impl {
  Mp lo{kPrecisionBits};
  Mp hi{kPrecisionBits};
};

LnInterval::LnInterval() : impl_(std::make_unique<Impl>()) {
  mpfr_set_zero(impl_->lo.get(), 1);
  mpfr_set_zero(impl_->hi.get(), 1);
}
LnInterval::LnInterval(const LnInterval& other) : impl_(std::make_unique<Impl>()) {
  mpfr_set(impl_->lo.get(), other.impl_->lo.get(), MPFR_RNDD);
  mpfr_set(impl_->hi.get(), other.impl_->hi.get(), MPFR_RNDU);
}
LnInterval& LnInterval::operator=(const LnInterval& other) {
  if (this != &other) {
    mpfr_set(impl_->lo.get(), other.impl_->lo.get(), MPFR_RNDD);
    mpfr_set(impl_->hi.get(), other.impl_->hi.get(), MPFR_RNDU);
  }
  return *this;
}
LnInterval::LnInterval(LnInterval&&) noexcept = default;
LnInterval& LnInterval::operator=(LnInterval&&) noexcept = default;
LnInterval::~LnInterval() = default;

LnInterval LnInterval::of(const Rational& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("LnInterval::of: non-positive argument");
  LnInterval r;
  mpfr_set_q(r.impl_->lo.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_log(r.impl_->lo.get(), r.impl_->lo.get(), MPFR_RNDD);
  mpfr_set_q(r.impl_->hi.get(), v.get_mpq_t(), MPFR_RNDU);
  mpfr_log(r.impl_->hi.get(), r.impl_->hi.get(), MPFR_RNDU);
  return r;
}

LnInterval LnInterval::binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("LnInterval::binomial: k > n");
  return binomial(Rational(BigInt(std::to_string(n))), k);
}

LnInterval LnInterval::binomial(const Rational& x, std::uint64_t k) {
  const Rational kq(BigInt(std::to_string(k)));
  if (sgn(x - kq + 1) <= 0) throw std::invalid_argument("LnInterval::binomial: x - k + 1 must be positive");
  const long p = kPrecisionBits;
  auto bounds_for = [p](const Rational& arg, Mp& lo, Mp& hi) {
    Mp al(p), ah(p);
    mpfr_set_q(al.get(), arg.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(ah.get(), arg.get_mpq_t(), MPFR_RNDU);
    lgamma_bounds(lo.get(), hi.get(), al.get(), ah.get());
  };
  Mp top_lo(p), top_hi(p), k_lo(p), k_hi(p), rest_lo(p), rest_hi(p);
  bounds_for(x + 1, top_lo, top_hi);
  bounds_for(kq + 1, k_lo, k_hi);
  bounds_for(x - kq + 1, rest_lo, rest_hi);
  LnInterval r;
  mpfr_sub(r.impl_->lo.get(), top_lo.get(), k_hi.get(), MPFR_RNDD);
  mpfr_sub(r.impl_->lo.get(), r.impl_->lo.get(), rest_hi.get(), MPFR_RNDD);
  mpfr_sub(r.impl_->hi.get(), top_hi.get(), k_lo.get(), MPFR_RNDU);
  mpfr_sub(r.impl_->hi.get(), r.impl_->hi.get(), rest_lo.get(), MPFR_RNDU);
  return r;
}

LnInterval& LnInterval::operator+=(const LnInterval& o) {
  mpfr_add(impl_->lo.get(), impl_->lo.get(), o.impl_->lo.get(), MPFR_RNDD);
  mpfr_add(impl_->hi.get(), impl_->hi.get(), o.impl_->hi.get(), MPFR_RNDU);
  return *this;
}

LnInterval& LnInterval::operator-=(const LnInterval& o) {
  Mp lo(kPrecisionBits);
  mpfr_sub(lo.get(), impl_->lo.get(), o.impl_->hi.get(), MPFR_RNDD);
  mpfr_sub(impl_->hi.get(), impl_->hi.get(), o.impl_->lo.get(), MPFR_RNDU);
  mpfr_set(impl_->lo.get(), lo.get(), MPFR_RNDD);
  return *this;
}

LnInterval& LnInterval::operator*=(std::uint64_t k) {
  mpfr_mul_ui(impl_->lo.get(), impl_->lo.get(), k, MPFR_RNDD);
  mpfr_mul_ui(impl_->hi.get(), impl_->hi.get(), k, MPFR_RNDU);
  return *this;
}

double LnInterval::lo() const { return mpfr_get_d(impl_->lo.get(), MPFR_RNDD); }
double LnInterval::hi() const { return mpfr_get_d(impl_->hi.get(), MPFR_RNDU); }
double LnInterval::mid() const { return 0.5 * (lo() + hi()); }

int LnInterval::compare(const LnInterval& o) const {
  if (mpfr_less_p(impl_->hi.get(), o.impl_->lo.get())) return -1;
  if (mpfr_greater_p(impl_->lo.get(), o.impl_->hi.get())) return 1;
  return 0;
}

}  // namespace arcs
