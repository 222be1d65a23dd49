#pragma once

// Shared building blocks for the registered identity cases.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/ext.hpp"
#include "qseries/identities.hpp"
#include "qseries/qderivative.hpp"

namespace qseries::cases {

using Vec = std::vector<Complex>;
using Cases = std::vector<IdentityCase>;

// Reciprocal factors smaller than this make the draw unusable.
inline constexpr Real kNearPole = 1e-6;

// Draws per attempt before a structural filter gives up.
inline constexpr int kStructuralRetries = 1000;

// Collects the parameters of one draw with the default ranges.
class Draw {
 public:
  explicit Draw(SampleRng& rng) : rng_(rng) {}

  Complex q(Real lo = 0.05, Real hi = 0.6);
  Complex param(const std::string& name, Real lo = 0.1, Real hi = 0.8);
  Complex x(Real lo = 0.3, Real hi = 1.5) { return param("x", lo, hi); }
  Complex y(Real lo = 0.02, Real hi = 0.2) { return param("y", lo, hi); }
  std::int64_t integer(const std::string& name, std::int64_t lo, std::int64_t hi);
  // Records a value derived from earlier draws.
  std::int64_t set_int(const std::string& name, std::int64_t v);
  // prefix1 .. prefix<count>
  Vec params(const std::string& prefix, std::int64_t count);

  void require(bool ok) { ok_ = ok_ && ok; }
  std::optional<Sample> finish();

 private:
  SampleRng& rng_;
  Sample s_;
  bool ok_ = true;
};

Vec param_list(const Sample& s, const std::string& prefix, std::int64_t count);

// Evaluation helpers. Everything stays in extended range until the end.
Ext pinf(Complex a, Complex q, EvalContext& ctx);  // (a;q)_inf
Ext rinf(Complex a, Complex q, EvalContext& ctx);  // 1/(a;q)_inf, near-pole guarded
Ext pfin(Complex a, Complex q, std::int64_t n);    // (a;q)_n
Ext rfin(Complex a, Complex q, std::int64_t n);    // 1/(a;q)_n, near-pole guarded
Ext th(Complex x, Complex q, EvalContext& ctx);
Ext hyp(const Vec& upper, const Vec& lower, Complex q, Complex z, EvalContext& ctx);
Ext eb(Complex y, Complex q, unsigned b, EvalContext& ctx);
Ext bil(const std::function<Ext(std::int64_t)>& term, EvalContext& ctx);
Ext bpsi(const Vec& upper, const Vec& lower, Complex q, Complex z, EvalContext& ctx);
Ext eop(const PointFunction& f, Complex x, Complex y, Complex q, unsigned b, int sign,
        EvalContext& ctx);

inline Ext pw(Complex base, std::int64_t n) { return Ext::pow(Ext(base), n); }
inline Real sgn(std::int64_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }
inline std::int64_t c2(std::int64_t n) { return n * (n - 1) / 2; }

Vec zeros(std::int64_t k);
Vec cat(Vec a, const Vec& b);
Vec times(const Vec& v, Complex s);        // each v_i * s
Vec q_over(const Vec& v, Complex q, Complex x);  // each q / (v_i x)
Complex prod(const Vec& v);

// Product of (v_i t;q)_inf over the upper list divided by the same over the lower list.
Ext bracket(const Vec& upper, const Vec& lower, Complex t, Complex q, EvalContext& ctx);
// (ax, q/ax;q)_inf / (x, b/ax;q)_inf
Ext ramkernel(Complex a, Complex b, Complex x, Complex q, EvalContext& ctx);

void add(Cases& out, std::string id, char group, CaseStatus status, std::string anchor,
         IdentityCase::Draw draw, IdentityCase::Side lhs, IdentityCase::Side rhs);

void add_group_a(Cases& out);
void add_group_b(Cases& out);
void add_group_c(Cases& out);
void add_group_d(Cases& out);
void add_group_e(Cases& out);

}  // namespace qseries::cases
