#include "qseries/qfactorial.hpp"

#include <sstream>
#include <string>

namespace qseries {

namespace {

std::string fmt(Complex v) {
  std::ostringstream os;
  os.precision(17);
  os << v.real();
  if (v.imag() != 0) os << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  return os.str();
}

[[noreturn]] void pole(const char* what, Complex a, std::int64_t k) {
  std::ostringstream os;
  os << what << ": factor vanishes at k = " << k << " (parameter " << fmt(a) << ")";
  throw PoleError(os.str());
}

// prod_{k=1}^{m} (1 - a q^{-k}), as an extended value.
Ext inverse_side_product(Complex a, Complex q, std::int64_t m, const char* what,
                         bool check_pole) {
  if (a == Complex(0, 0)) return Ext(1.0);
  if (q == Complex(0, 0)) {
    throw DomainError(std::string(what) + ": negative index needs q != 0");
  }
  Complex qinv = Complex(1, 0) / q;
  Complex aq = a;
  Ext p(1.0);
  for (std::int64_t k = 1; k <= m; ++k) {
    aq *= qinv;
    Complex f = Complex(1, 0) - aq;
    if (check_pole && std::abs(f) < kPoleEps) pole(what, a, -k);
    p *= Ext(f);
  }
  return p;
}

Ext forward_product(Complex a, Complex q, std::int64_t n, const char* what, bool check_pole) {
  Ext p(1.0);
  Complex aq = a;
  for (std::int64_t k = 0; k < n; ++k) {
    Complex f = Complex(1, 0) - aq;
    if (check_pole && std::abs(f) < kPoleEps) pole(what, a, k);
    p *= Ext(f);
    aq *= q;
  }
  return p;
}

}  // namespace

Complex qpoch_finite(Complex a, QBase q, std::int64_t n) {
  if (n >= 0) return forward_product(a, q, n, "qpoch_finite", false).to_complex();
  return (Ext(1.0) / inverse_side_product(a, q, -n, "qpoch_finite", true)).to_complex();
}

Complex qpoch_recip_finite(Complex b, QBase q, std::int64_t n) {
  if (n >= 0) {
    return (Ext(1.0) / forward_product(b, q, n, "qpoch_recip_finite", true)).to_complex();
  }
  return inverse_side_product(b, q, -n, "qpoch_recip_finite", false).to_complex();
}

Ext qpoch_infinite_ext(Complex a, QBase base, const Truncation& trunc, std::size_t* terms) {
  if (terms) *terms = 0;
  if (a == Complex(0, 0)) return Ext(1.0);
  const Complex q = base.value();
  Ext p(1.0);
  Complex aq = a;
  std::size_t small = 0;
  for (std::size_t k = 0; k < trunc.max_terms; ++k) {
    p *= Ext(Complex(1, 0) - aq);
    small = std::abs(aq) < trunc.eps ? small + 1 : 0;
    if (small >= trunc.consecutive_small || p.is_zero()) {
      if (terms) *terms = k + 1;
      return p;
    }
    aq *= q;
  }
  std::ostringstream os;
  os << "qpoch_infinite: no convergence within " << trunc.max_terms << " factors (a = " << fmt(a)
     << ")";
  throw BudgetExceeded(os.str());
}

Complex qpoch_infinite(Complex a, QBase q, const Truncation& trunc, std::size_t* terms) {
  return qpoch_infinite_ext(a, q, trunc, terms).to_complex();
}

Complex qpoch_multi(std::span<const Complex> as, QBase q, std::int64_t n) {
  Ext p(1.0);
  for (std::size_t i = 0; i < as.size(); ++i) {
    try {
      p *= Ext(qpoch_finite(as[i], q, n));
    } catch (const PoleError& e) {
      throw PoleError("qpoch_multi: parameter " + std::to_string(i) + ": " + e.what());
    }
  }
  return p.to_complex();
}

Ext qpoch_multi_ext(std::span<const Complex> as, QBase q, const Truncation& trunc) {
  Ext p(1.0);
  for (std::size_t i = 0; i < as.size(); ++i) {
    try {
      p *= qpoch_infinite_ext(as[i], q, trunc);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("qpoch_multi: parameter " + std::to_string(i) + ": " + e.what());
    }
  }
  return p;
}

Complex qpoch_multi(std::span<const Complex> as, QBase q, Infinite, const Truncation& trunc) {
  return qpoch_multi_ext(as, q, trunc).to_complex();
}

}  // namespace qseries
