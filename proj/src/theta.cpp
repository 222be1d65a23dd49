#include "qseries/theta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qseries/qfactorial.hpp"
#include "tails.hpp"

namespace qseries {

namespace {

void require_nonzero(Complex x) {
  if (x == Complex(0, 0)) throw DomainError("theta: x must be nonzero");
}

}  // namespace

Ext theta_series_ext(Complex x, QBase base, const Truncation& trunc, TailStats* stats) {
  require_nonzero(x);
  const Complex q = base.value();
  if (q == Complex(0, 0)) {
    if (stats) *stats = TailStats{1, 1};
    return Ext(Complex(1, 0) + Complex(1, 0) / x);
  }
  // theta(x) = x'^k q^-(k choose 2) theta(x') for x' = x q^k. Picking k so
  // that 1 <= |x'| < 1/|q| keeps every term at most 1 in size, which lets the
  // sum run in long double and absorbs the cancellation near zeros of theta.
  const Real lq = -std::log(std::abs(q));
  const auto k = static_cast<std::int64_t>(std::floor(std::log(std::abs(x)) / lq));
  const Complex xr = (Ext(x) * Ext::pow(Ext(q), k)).to_complex();
  const Ext scale = Ext::pow(Ext(xr), k) * Ext::pow(Ext(q), -(k * (k - 1) / 2));

  using W = std::complex<long double>;
  const W qw(q), xw(xr);
  const long double log_eps = std::log2(static_cast<long double>(trunc.eps));
  W sum(1);
  long double peak = 1;
  TailStats local;
  // Forward: t_{n+1} = t_n q^(n+1) x. Backward: t_{n-1} = t_n q^(-n) / x.
  auto tail = [&](W step, W ratio, std::size_t& count) {
    W t(1);
    std::size_t small = 0;
    while (small < trunc.consecutive_small) {
      if (count >= trunc.max_terms) detail::budget("theta_series", count);
      t *= step;
      step *= ratio;
      ++count;
      sum += t;
      peak = std::max(peak, std::abs(sum));
      const long double at = std::abs(t);
      small = (at == 0 || std::log2(at) < log_eps + std::log2(peak)) ? small + 1 : 0;
    }
  };
  tail(qw * xw, qw, local.forward);
  tail(W(1) / xw, qw, local.backward);
  if (stats) *stats = local;
  return scale * Ext(Complex(static_cast<Real>(sum.real()), static_cast<Real>(sum.imag())));
}

Complex theta_series(Complex x, QBase q, const Truncation& trunc, TailStats* stats) {
  return theta_series_ext(x, q, trunc, stats).to_complex();
}

Ext theta_product_ext(Complex x, QBase base, const Truncation& trunc, std::size_t* terms) {
  require_nonzero(x);
  const Complex q = base.value();
  std::size_t d1 = 0, d2 = 0, d3 = 0;
  const Ext p = qpoch_infinite_ext(q, base, trunc, &d1) * qpoch_infinite_ext(-q * x, base, trunc, &d2) *
                qpoch_infinite_ext(-Complex(1, 0) / x, base, trunc, &d3);
  if (terms) *terms = std::max({d1, d2, d3});
  return p;
}

Complex theta_product(Complex x, QBase q, const Truncation& trunc, std::size_t* terms) {
  return theta_product_ext(x, q, trunc, terms).to_complex();
}

}  // namespace qseries
