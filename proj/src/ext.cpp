#include "qseries/ext.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qseries {

namespace {

constexpr Real kHigh = 0x1p200;
constexpr Real kLow = 0x1p-200;

Complex scale2(Complex v, int k) {
  return {std::ldexp(v.real(), k), std::ldexp(v.imag(), k)};
}

Real max_component(Complex v) {
  return std::max(std::fabs(v.real()), std::fabs(v.imag()));
}

}  // namespace

Ext::Ext(Complex v) : m_(v), e_(0) { rebalance(); }

Ext::Ext(Complex m, std::int64_t e) : m_(m), e_(e) { rebalance(); }

bool Ext::is_finite() const {
  return std::isfinite(m_.real()) && std::isfinite(m_.imag());
}

void Ext::normalize() {
  Real s = max_component(m_);
  if (s == 0) {
    m_ = {0, 0};
    e_ = 0;
    return;
  }
  if (!std::isfinite(s)) return;
  int k = 0;
  std::frexp(s, &k);
  m_ = scale2(m_, -k);
  e_ += k;
}

// Cheap path: only renormalize when the mantissa drifts far from 1.
void Ext::rebalance() {
  Real s = max_component(m_);
  if (s == 0) {
    e_ = 0;
    return;
  }
  if (s > kHigh || s < kLow) normalize();
}

Complex Ext::to_complex() const {
  if (is_zero()) return {0, 0};
  std::int64_t e = std::clamp<std::int64_t>(e_, -5000, 5000);
  return scale2(m_, static_cast<int>(e));
}

Real Ext::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<Real>::infinity();
  return std::log2(std::abs(m_)) + static_cast<Real>(e_);
}

Ext& Ext::operator*=(const Ext& o) {
  m_ *= o.m_;
  e_ += o.e_;
  rebalance();
  return *this;
}

Ext& Ext::operator/=(const Ext& o) {
  m_ /= o.m_;
  e_ -= o.e_;
  rebalance();
  return *this;
}

Ext& Ext::operator+=(const Ext& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Ext b = o;
  normalize();
  b.normalize();
  std::int64_t d = e_ - b.e_;
  if (d >= 0) {
    if (d <= 1100) m_ += scale2(b.m_, static_cast<int>(-d));
  } else {
    if (-d <= 1100) {
      m_ = scale2(m_, static_cast<int>(d)) + b.m_;
    } else {
      m_ = b.m_;
    }
    e_ = b.e_;
  }
  rebalance();
  return *this;
}

Ext& Ext::operator-=(const Ext& o) { return *this += -o; }

Ext Ext::pow(const Ext& base, std::int64_t n) {
  if (n < 0) return Ext(1.0) / pow(base, -n);
  Ext result(1.0);
  Ext b = base;
  while (n > 0) {
    if (n & 1) result *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return result;
}

}  // namespace qseries
