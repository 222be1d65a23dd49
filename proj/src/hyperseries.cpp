#include "qseries/hyperseries.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qseries/qfactorial.hpp"
#include "tails.hpp"

namespace qseries {

namespace {

const Complex kOne(1, 0);

Ext signed_power(Complex qn, long e) {
  Ext f(1.0);
  const Ext step(-qn);
  for (long i = 0; i < e; ++i) f *= step;
  return f;
}

[[noreturn]] void lower_pole(const char* what, std::size_t j, std::int64_t n) {
  std::ostringstream os;
  os << what << ": lower parameter " << j << " hits a pole at n = " << n;
  throw PoleError(os.str());
}

// prod (1 - p_i q^n) for the forward direction.
Complex forward_factor(const std::vector<Complex>& ps, Complex qn) {
  Complex f = kOne;
  for (const Complex& p : ps) f *= kOne - p * qn;
  return f;
}

// p = q^k for some integer k >= kmin.
bool is_q_power(Complex p, Complex q, long kmin) {
  const Real aq = std::abs(q);
  if (aq == 0 || aq >= 1 || p == Complex(0, 0)) return false;
  const Real k = std::round(std::log(std::abs(p)) / std::log(aq));
  if (k < static_cast<Real>(kmin) || k > 1e4) return false;
  return std::abs(kOne - p / std::pow(q, k)) < kPoleEps;
}

// Some upper a has a q^k = 1 with k >= 0, so the forward tail stops.
bool forward_terminates(const SeriesSpec& spec) {
  for (const Complex& a : spec.upper) {
    if (a != Complex(0, 0) && is_q_power(kOne / a, spec.base.value(), 0)) return true;
  }
  return false;
}

// Some lower b equals q^k with k >= 1, so 1/(b;q)_n vanishes for n <= -k.
bool backward_terminates(const SeriesSpec& spec) {
  for (const Complex& b : spec.lower) {
    if (is_q_power(b, spec.base.value(), 1)) return true;
  }
  return false;
}

// Index of an upper factor 1 - a q^n that vanishes, or -1.
long vanishing_upper(const std::vector<Complex>& ps, Complex qn) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (std::abs(kOne - ps[i] * qn) < kPoleEps) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace

Ext phi_ext(const SeriesSpec& spec, const Truncation& trunc, std::size_t* terms) {
  const long r = static_cast<long>(spec.upper.size());
  const long s = static_cast<long>(spec.lower.size());
  const bool finite = forward_terminates(spec);
  if (r > s + 1 && !finite) throw DomainError("phi: r > s+1, the series diverges for z != 0");
  if (r == s + 1 && !finite && !(std::abs(spec.z) < 1)) {
    std::ostringstream os;
    os << "phi: z: |z| = " << std::abs(spec.z) << " must be < 1 when r = s+1";
    throw DomainError(os.str());
  }
  const long e = 1 + s - r;
  const Complex q = spec.base.value();
  detail::Accumulator acc(Ext(1.0), trunc);
  acc.start_tail();
  Ext t(1.0);
  Complex qn = kOne;  // q^n
  for (std::size_t n = 0;; ++n) {
    if (n >= trunc.max_terms) detail::budget("phi", n);
    Complex den = kOne;
    for (std::size_t j = 0; j < spec.lower.size(); ++j) {
      Complex f = kOne - spec.lower[j] * qn;
      if (std::abs(f) < kPoleEps) lower_pole("phi", j, static_cast<std::int64_t>(n));
      den *= f;
    }
    if (vanishing_upper(spec.upper, qn) >= 0) {
      if (terms) *terms = n + 1;
      return acc.sum();
    }
    const Complex num = forward_factor(spec.upper, qn);
    const Complex qn1 = qn * q;
    t *= Ext(num * spec.z / (den * (kOne - qn1)));
    if (e > 0) t *= signed_power(qn, e);
    qn = qn1;
    if (acc.add(t)) {
      if (terms) *terms = n + 1;
      return acc.sum();
    }
  }
}

Complex phi(const SeriesSpec& spec, const Truncation& trunc, std::size_t* terms) {
  return phi_ext(spec, trunc, terms).to_complex();
}

Ext phi_ext(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc) {
  return phi_ext(SeriesSpec{std::move(upper), std::move(lower), q, z, false}, trunc);
}

Complex phi(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc) {
  return phi_ext(std::move(upper), std::move(lower), q, z, trunc).to_complex();
}

DomainStatus convergence_domain(const SeriesSpec& spec, Real margin) {
  DomainStatus st;
  st.margin = margin;
  const long r = static_cast<long>(spec.upper.size());
  const long s = static_cast<long>(spec.lower.size());
  const Real inf = std::numeric_limits<Real>::infinity();

  st.upper_bound = s == r ? 1.0 : (s > r ? inf : 0.0);

  long zu = 0;
  long zl = 0;
  Real pa = 1;
  Real pb = 1;
  for (const Complex& a : spec.upper) {
    if (a == Complex(0, 0)) ++zu;
    else pa *= std::abs(a);
  }
  for (const Complex& b : spec.lower) {
    if (b == Complex(0, 0)) ++zl;
    else pb *= std::abs(b);
  }
  if (zl > zu) st.lower_bound = 0;
  else if (zl < zu) st.lower_bound = inf;
  else st.lower_bound = pb / pa;
  if (forward_terminates(spec)) st.upper_bound = inf;
  if (spec.bilateral && backward_terminates(spec)) st.lower_bound = 0;

  const Real az = std::abs(spec.z);
  const bool above = st.lower_bound == 0 ? az > 0 : az > st.lower_bound * (1 + margin);
  const bool below = az < st.upper_bound * (1 - margin);
  st.inside = above && below;
  return st;
}

Ext psi_ext(const SeriesSpec& spec, const Truncation& trunc, TailStats* stats) {
  const long r = static_cast<long>(spec.upper.size());
  const long s = static_cast<long>(spec.lower.size());
  if (spec.z == Complex(0, 0)) throw DomainError("psi: z must be nonzero");
  const Complex q = spec.base.value();
  if (q == Complex(0, 0)) throw DomainError("psi: q must be nonzero for negative indices");
  const DomainStatus dom = convergence_domain(spec);
  if (!dom.inside) {
    std::ostringstream os;
    os << "psi: z: |z| = " << std::abs(spec.z) << " outside the annulus (" << dom.lower_bound
       << ", " << dom.upper_bound << ") with margin " << dom.margin;
    throw DomainError(os.str());
  }
  const long e = s - r;
  const Ext zext(spec.z);
  const Ext qinv(kOne / q);

  // Forward: t_{n+1} = t_n prod(1-a q^n)/prod(1-b q^n) z [(-1) q^n]^(s-r).
  Complex qn = kOne;
  auto up = [&](std::int64_t n, const Ext& t) {
    Complex den = kOne;
    for (std::size_t j = 0; j < spec.lower.size(); ++j) {
      Complex f = kOne - spec.lower[j] * qn;
      if (std::abs(f) < kPoleEps) lower_pole("psi", j, n);
      den *= f;
    }
    if (vanishing_upper(spec.upper, qn) >= 0) {
      qn *= q;
      return Ext();
    }
    Ext next = t * Ext(forward_factor(spec.upper, qn) / den) * zext;
    if (e > 0) next *= signed_power(qn, e);
    qn *= q;
    return next;
  };

  // Backward: t_{n-1} = t_n prod(1-b q^{n-1})/prod(1-a q^{n-1}) / z / [(-1) q^{n-1}]^(s-r).
  // With m = 1-n, q^{n-1} = q^{-m} and the last factor is (-q^m)^(s-r).
  Ext qminus(1.0);   // q^{-m}
  Complex qm = kOne;  // q^m
  auto down = [&](std::int64_t n, const Ext& t) {
    qminus *= qinv;
    qm *= q;
    Ext num(1.0);
    for (const Complex& b : spec.lower) {
      const Ext f = Ext(1.0) - Ext(b) * qminus;
      if (std::exp2(f.log2_abs()) < kPoleEps) return Ext();
      num *= f;
    }
    Ext den(1.0);
    for (std::size_t i = 0; i < spec.upper.size(); ++i) {
      Ext f = Ext(1.0) - Ext(spec.upper[i]) * qminus;
      if (std::exp2(f.log2_abs()) < kPoleEps) {
        std::ostringstream os;
        os << "psi: upper parameter " << i << " hits a pole at n = " << n - 1;
        throw PoleError(os.str());
      }
      den *= f;
    }
    Ext next = t * num / den / zext;
    if (e > 0) next *= signed_power(qm, e);
    return next;
  };

  return detail::sum_two_tails(Ext(1.0), up, down, trunc, stats, "psi");
}

Complex psi(const SeriesSpec& spec, const Truncation& trunc, TailStats* stats) {
  return psi_ext(spec, trunc, stats).to_complex();
}

Complex psi(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc, TailStats* stats) {
  return psi(SeriesSpec{std::move(upper), std::move(lower), q, z, true}, trunc, stats);
}

Ext e_b_ext(Complex y, QBase base, unsigned b, const Truncation& trunc, std::size_t* terms) {
  if (terms) *terms = 0;
  const Complex q = base.value();
  if (b == 0) {
    // Any factor 1 - y q^k near zero is a pole of the reciprocal.
    Complex yq = y;
    for (std::size_t k = 0; k < trunc.max_terms && std::abs(yq) >= trunc.eps; ++k) {
      if (std::abs(kOne - yq) < kPoleEps) {
        std::ostringstream os;
        os << "e_b: y: 1/(y;q)_inf has a pole (y q^" << k << " = 1)";
        throw PoleError(os.str());
      }
      yq *= q;
    }
    return Ext(1.0) / qpoch_infinite_ext(y, base, trunc, terms);
  }
  if (b == 1) return qpoch_infinite_ext(-y, base, trunc, terms);

  detail::Accumulator acc(Ext(1.0), trunc);
  acc.start_tail();
  Ext t(1.0);
  const Ext yext(y);
  Complex qn = kOne;  // q^n
  for (std::size_t n = 0;; ++n) {
    if (n >= trunc.max_terms) detail::budget("e_b", n);
    // t_{n+1} = t_n q^(b n) y / (1 - q^(n+1))
    const Complex qn1 = qn * q;
    t *= Ext::pow(Ext(qn), b) * yext / Ext(kOne - qn1);
    qn = qn1;
    if (acc.add(t)) {
      if (terms) *terms = n + 1;
      return acc.sum();
    }
  }
}

Complex e_b(Complex y, QBase q, unsigned b, const Truncation& trunc, std::size_t* terms) {
  return e_b_ext(y, q, b, trunc, terms).to_complex();
}

Complex kinf(Complex y, QBase q, const Truncation& trunc, std::size_t* terms) {
  return e_b(y, q, 2, trunc, terms);
}

Ext bilateral_sum(const std::function<Ext(std::int64_t)>& term, const Truncation& trunc,
                  TailStats* stats) {
  std::int64_t up_n = 0;
  std::int64_t down_n = 0;
  auto up = [&](std::int64_t, const Ext&) { return term(++up_n); };
  auto down = [&](std::int64_t, const Ext&) { return term(--down_n); };
  return detail::sum_two_tails(term(0), up, down, trunc, stats, "bilateral_sum");
}

}  // namespace qseries
