#pragma once

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

// Jacobi theta function
//   theta(x;q) = sum_n q^(n+1 choose 2) x^n = (q;q)_inf (-qx;q)_inf (-1/x;q)_inf.
// Both forms reject x = 0. theta() is the product form.

Complex theta_series(Complex x, QBase q, const Truncation& trunc = {},
                     TailStats* stats = nullptr);
Ext theta_series_ext(Complex x, QBase q, const Truncation& trunc = {},
                     TailStats* stats = nullptr);

// terms, if given, receives the longest of the three product depths.
Complex theta_product(Complex x, QBase q, const Truncation& trunc = {},
                      std::size_t* terms = nullptr);
Ext theta_product_ext(Complex x, QBase q, const Truncation& trunc = {},
                      std::size_t* terms = nullptr);

inline Complex theta(Complex x, QBase q, const Truncation& trunc = {}) {
  return theta_product(x, q, trunc);
}
inline Ext theta_ext(Complex x, QBase q, const Truncation& trunc = {}) {
  return theta_product_ext(x, q, trunc);
}

}  // namespace qseries
