#pragma once

#include <complex>
#include <cstddef>

namespace qseries {

// Swap these two aliases to change the working precision everywhere.
using Real = double;
using Complex = std::complex<Real>;

// Factors closer than this to zero in a reciprocal position are poles.
inline constexpr Real kPoleEps = 1e-12;

// Relative margin kept from the edge of an annulus of convergence.
inline constexpr Real kDomainMargin = 0.05;

struct Truncation {
  Real eps = 1e-14;
  std::size_t max_terms = 10000;
  std::size_t consecutive_small = 3;

  // Throws DomainError when a field breaks its invariant.
  void validate() const;
};

// Base q with |q| < 1. q = 0 is allowed.
class QBase {
 public:
  QBase(Complex q);
  QBase(Real q) : QBase(Complex(q, 0)) {}

  Complex value() const { return q_; }
  operator Complex() const { return q_; }

 private:
  Complex q_;
};

}  // namespace qseries
