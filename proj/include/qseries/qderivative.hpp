#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

// A map C -> C evaluated pointwise. Values are produced in extended range
// so f(q^-k x) can be huge without overflowing.
class PointFunction {
 public:
  using ExtFn = std::function<Ext(Complex)>;
  using PlainFn = std::function<Complex(Complex)>;

  PointFunction() = default;
  explicit PointFunction(ExtFn f, std::string domain_note = {});

  static PointFunction plain(PlainFn f, std::string domain_note = {});
  static PointFunction constant(Complex c);
  // x^n for integer n.
  static PointFunction power(std::int64_t n);

  Ext eval_ext(Complex x) const { return f_(x); }
  Complex eval(Complex x) const { return f_(x).to_complex(); }
  Complex operator()(Complex x) const { return eval(x); }

  const std::string& domain_note() const { return note_; }

  friend PointFunction operator+(const PointFunction& f, const PointFunction& g);
  friend PointFunction operator-(const PointFunction& f, const PointFunction& g);
  friend PointFunction operator*(const PointFunction& f, const PointFunction& g);
  friend PointFunction operator/(const PointFunction& f, const PointFunction& g);
  friend PointFunction operator*(Complex c, const PointFunction& f);

 private:
  ExtFn f_;
  std::string note_;
};

// (D_lambda f)(x) = f(lambda x) / x.
Complex d_lambda(const PointFunction& f, Complex lam, Complex x);

// D_lambda^n f(x) = f(lambda^n x) / (lambda^(n choose 2) x^n).
// DomainError for x = 0, lambda = 0, or lambda^n x outside binary64 range.
Complex d_lambda_iter(const PointFunction& f, Complex lam, std::int64_t n, Complex x);
Ext d_lambda_iter_ext(const PointFunction& f, Complex lam, std::int64_t n, Complex x);

}  // namespace qseries
