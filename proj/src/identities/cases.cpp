#include "identities/cases.hpp"

#include <cmath>
#include <cstdlib>

#include "qseries/error.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/qfactorial.hpp"
#include "qseries/qoperator.hpp"
#include "qseries/theta.hpp"

namespace qseries::cases {

namespace {

[[noreturn]] void near_pole(const char* what) {
  throw PoleError(std::string(what) + ": parameter within 1e-6 of a pole");
}

// Rejects a when some factor 1 - a q^k with k >= 0 is nearly zero.
void guard_forward(Complex a, Complex q, const char* what) {
  Complex t = a;
  for (int k = 0; k < 10000 && std::abs(t) >= 0.5; ++k, t *= q) {
    if (std::abs(Real(1) - t) < kNearPole) near_pole(what);
  }
}

// Rejects a when some factor 1 - a q^-k with 1 <= k <= m is nearly zero
// (m < 0 means no bound).
void guard_backward(Complex a, Complex q, std::int64_t m, const char* what) {
  if (a == Complex(0, 0) || q == Complex(0, 0)) return;
  Complex t = a / q;
  for (std::int64_t k = 1; (m < 0 || k <= m) && k < 10000; ++k, t /= q) {
    if (m < 0 && std::abs(t) > 2) break;
    if (std::abs(Real(1) - t) < kNearPole) near_pole(what);
  }
}

}  // namespace

Complex Draw::q(Real lo, Real hi) {
  const Complex v(rng_.uniform(lo, hi), 0);
  s_.set("q", v);
  return v;
}

Complex Draw::param(const std::string& name, Real lo, Real hi) {
  const Complex v = rng_.polar(lo, hi);
  s_.set(name, v);
  return v;
}

std::int64_t Draw::integer(const std::string& name, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = rng_.integer(lo, hi);
  s_.set_int(name, v);
  return v;
}

std::int64_t Draw::set_int(const std::string& name, std::int64_t v) {
  s_.set_int(name, v);
  return v;
}

Vec Draw::params(const std::string& prefix, std::int64_t count) {
  Vec v;
  for (std::int64_t i = 1; i <= count; ++i) v.push_back(param(prefix + std::to_string(i)));
  return v;
}

std::optional<Sample> Draw::finish() {
  if (!ok_) return std::nullopt;
  return std::move(s_);
}

Vec param_list(const Sample& s, const std::string& prefix, std::int64_t count) {
  Vec v;
  for (std::int64_t i = 1; i <= count; ++i) v.push_back(s.c(prefix + std::to_string(i)));
  return v;
}

Ext pinf(Complex a, Complex q, EvalContext& ctx) {
  return qpoch_infinite_ext(a, QBase(q), ctx.trunc);
}

Ext rinf(Complex a, Complex q, EvalContext& ctx) {
  guard_forward(a, q, "reciprocal product");
  return Ext(1.0) / qpoch_infinite_ext(a, QBase(q), ctx.trunc);
}

Ext pfin(Complex a, Complex q, std::int64_t n) {
  if (n < 0) guard_backward(a, q, -n, "finite product");
  return Ext(qpoch_finite(a, QBase(q), n));
}

Ext rfin(Complex a, Complex q, std::int64_t n) {
  if (n > 0) {
    Complex t = a;
    for (std::int64_t k = 0; k < n; ++k, t *= q)
      if (std::abs(Real(1) - t) < kNearPole) near_pole("finite product");
  }
  return Ext(qpoch_recip_finite(a, QBase(q), n));
}

Ext th(Complex x, Complex q, EvalContext& ctx) { return theta_product_ext(x, QBase(q), ctx.trunc); }

Ext hyp(const Vec& upper, const Vec& lower, Complex q, Complex z, EvalContext& ctx) {
  for (Complex b : lower) guard_forward(b, q, "series lower parameter");
  return phi_ext(upper, lower, QBase(q), z, ctx.trunc);
}

Ext eb(Complex y, Complex q, unsigned b, EvalContext& ctx) {
  if (b == 0) guard_forward(y, q, "E_0");
  return e_b_ext(y, QBase(q), b, ctx.trunc);
}

Ext bil(const std::function<Ext(std::int64_t)>& term, EvalContext& ctx) {
  TailStats stats;
  Ext v = bilateral_sum(term, ctx.trunc, &stats);
  ctx.note_tail(stats.max_tail());
  return v;
}

Ext bpsi(const Vec& upper, const Vec& lower, Complex q, Complex z, EvalContext& ctx) {
  for (Complex b : lower) guard_forward(b, q, "bilateral lower parameter");
  for (Complex a : upper) guard_backward(a, q, -1, "bilateral upper parameter");
  SeriesSpec spec{upper, lower, QBase(q), z, true};
  TailStats stats;
  Ext v = psi_ext(spec, ctx.trunc, &stats);
  ctx.note_tail(stats.max_tail());
  return v;
}

Ext eop(const PointFunction& f, Complex x, Complex y, Complex q, unsigned b, int sign,
        EvalContext& ctx) {
  EOpSpec op{y, QBase(q), b, sign};
  return apply_eop_ext(op, f, x, ctx.trunc);
}

Vec zeros(std::int64_t k) { return Vec(static_cast<std::size_t>(k > 0 ? k : 0), Complex(0, 0)); }

Vec cat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vec times(const Vec& v, Complex s) {
  Vec out;
  for (Complex c : v) out.push_back(c * s);
  return out;
}

Vec q_over(const Vec& v, Complex q, Complex x) {
  Vec out;
  for (Complex c : v) out.push_back(q / (c * x));
  return out;
}

Complex prod(const Vec& v) {
  Complex p(1, 0);
  for (Complex c : v) p *= c;
  return p;
}

Ext bracket(const Vec& upper, const Vec& lower, Complex t, Complex q, EvalContext& ctx) {
  Ext p(1.0);
  for (Complex a : upper) p *= pinf(a * t, q, ctx);
  for (Complex b : lower) p *= rinf(b * t, q, ctx);
  return p;
}

Ext ramkernel(Complex a, Complex b, Complex x, Complex q, EvalContext& ctx) {
  return pinf(a * x, q, ctx) * pinf(q / (a * x), q, ctx) * rinf(x, q, ctx) *
         rinf(b / (a * x), q, ctx);
}

void add(Cases& out, std::string id, char group, CaseStatus status, std::string anchor,
         IdentityCase::Draw draw, IdentityCase::Side lhs, IdentityCase::Side rhs) {
  // Structural filters are cheap, so a rejected draw is retried on the same
  // stream before it counts as a failed attempt.
  auto retried = [draw = std::move(draw)](SampleRng& rng) -> std::optional<Sample> {
    for (int i = 0; i < kStructuralRetries; ++i) {
      if (auto s = draw(rng)) return s;
    }
    return std::nullopt;
  };
  out.push_back(IdentityCase{std::move(id), group, status, std::move(anchor), std::move(retried),
                             std::move(lhs), std::move(rhs)});
}

}  // namespace qseries::cases
