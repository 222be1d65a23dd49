#pragma once

#include <cstddef>

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/qderivative.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

// E_q(y D_{q^sign} | q^b) = sum_k q^(b (k choose 2)) y^k / (q;q)_k D_{q^sign}^k.
struct EOpSpec {
  Complex y;
  QBase base;
  unsigned b = 0;
  int sign = +1;  // +1 for D_q, -1 for D_{q^-1}
  // Each term costs one evaluation of f, so the cap sits well below the
  // series default.
  std::size_t max_terms = 200;
};

// Applies the operator to f at x. Stops like the other sums (term below eps
// times the largest partial sum, consecutive_small times). Throws
// DivergenceDetected when term magnitudes rise for 10 consecutive k past
// k = 20, and BudgetExceeded at min(trunc.max_terms, op.max_terms).
Complex apply_eop(const EOpSpec& op, const PointFunction& f, Complex x,
                  const Truncation& trunc = {}, std::size_t* terms = nullptr);
Ext apply_eop_ext(const EOpSpec& op, const PointFunction& f, Complex x,
                  const Truncation& trunc = {}, std::size_t* terms = nullptr);

}  // namespace qseries
