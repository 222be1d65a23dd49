#include "qseries/qoperator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tails.hpp"

namespace qseries {

namespace {

constexpr std::size_t kGrowthAfter = 20;
constexpr std::size_t kGrowthSteps = 10;

}  // namespace

Ext apply_eop_ext(const EOpSpec& op, const PointFunction& f, Complex x, const Truncation& trunc,
                  std::size_t* terms) {
  if (op.sign != 1 && op.sign != -1) throw DomainError("apply_eop: sign must be +1 or -1");
  if (x == Complex(0, 0)) throw DomainError("apply_eop: x must be nonzero");
  const Complex q = op.base.value();
  if (op.sign < 0 && q == Complex(0, 0)) throw DomainError("apply_eop: D_{q^-1} needs q != 0");
  const Complex lam = op.sign > 0 ? q : Complex(1, 0) / q;
  const std::size_t cap = std::min(trunc.max_terms, op.max_terms);

  const Ext qb = Ext::pow(Ext(q), op.b);
  const Ext yext(op.y);
  const Ext xext(x);
  const Ext lam_ext(lam);

  detail::Accumulator acc(f.eval_ext(x), trunc);
  acc.start_tail();
  Ext coef(1.0);   // q^(b (k choose 2)) y^k / ((q;q)_k lam^(k choose 2) x^k)
  Ext qbk(1.0);    // q^(b k)
  Ext lam_k(1.0);  // lam^k
  Complex qk1 = q;  // q^(k+1)
  Real last = -INFINITY;
  std::size_t rising = 0;
  for (std::size_t k = 0;; ++k) {
    if (k + 1 >= cap) {
      std::ostringstream os;
      os << "apply_eop: not converged after " << cap << " terms";
      throw BudgetExceeded(os.str());
    }
    coef *= qbk * yext / (Ext(Complex(1, 0) - qk1) * lam_k * xext);
    qbk *= qb;
    lam_k *= lam_ext;
    qk1 *= q;

    const Complex arg = (lam_k * xext).to_complex();
    if (!std::isfinite(arg.real()) || !std::isfinite(arg.imag()) || arg == Complex(0, 0)) {
      throw DomainError("apply_eop: q^(+-k) x leaves the representable range");
    }
    const Ext t = coef.is_zero() ? Ext() : coef * f.eval_ext(arg);
    const bool done = acc.add(t);
    if (done) {
      if (terms) *terms = k + 2;
      return acc.sum();
    }
    const Real lt = t.log2_abs();
    rising = (k + 1 > kGrowthAfter && lt > last) ? rising + 1 : 0;
    last = lt;
    if (rising >= kGrowthSteps) {
      std::ostringstream os;
      os << "apply_eop: term magnitudes grew for " << kGrowthSteps << " consecutive k up to k = "
         << k + 1;
      throw DivergenceDetected(os.str());
    }
  }
}

Complex apply_eop(const EOpSpec& op, const PointFunction& f, Complex x, const Truncation& trunc,
                  std::size_t* terms) {
  return apply_eop_ext(op, f, x, trunc, terms).to_complex();
}

}  // namespace qseries
