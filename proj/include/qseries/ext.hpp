#pragma once

#include <cstdint>

#include "qseries/scalar.hpp"

namespace qseries {

// Complex number with a separate binary exponent: value = m * 2^e.
//
// Products like theta(q^-k x) or q^(k choose 2) leave the binary64 range
// long before the series they belong to has converged. Keeping the
// exponent apart lets those terms be formed and compared exactly as in
// plain arithmetic, with a single rounding back at the end.
class Ext {
 public:
  Ext() = default;
  Ext(Complex v);  // NOLINT(google-explicit-constructor)
  Ext(Real v) : Ext(Complex(v, 0)) {}
  Ext(Complex m, std::int64_t e);

  Complex mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }

  bool is_zero() const { return m_ == Complex(0, 0); }
  bool is_finite() const;

  // Rounds to binary64; overflows to inf and underflows to 0 as usual.
  Complex to_complex() const;

  // log2|value|, -inf for zero.
  Real log2_abs() const;

  Ext& operator*=(const Ext& o);
  Ext& operator/=(const Ext& o);
  Ext& operator+=(const Ext& o);
  Ext& operator-=(const Ext& o);
  Ext operator-() const { return Ext(-m_, e_); }

  friend Ext operator*(Ext a, const Ext& b) { return a *= b; }
  friend Ext operator/(Ext a, const Ext& b) { return a /= b; }
  friend Ext operator+(Ext a, const Ext& b) { return a += b; }
  friend Ext operator-(Ext a, const Ext& b) { return a -= b; }

  // base^n by repeated squaring, n of either sign.
  static Ext pow(const Ext& base, std::int64_t n);

 private:
  void rebalance();
  void normalize();

  Complex m_{0, 0};
  std::int64_t e_ = 0;
};

// |a| < |b| compared on the log scale.
inline bool abs_less(const Ext& a, const Ext& b) {
  return a.log2_abs() < b.log2_abs();
}

}  // namespace qseries
