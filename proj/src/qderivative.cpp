#include "qseries/qderivative.hpp"

#include <cmath>
#include <utility>

namespace qseries {

namespace {

std::string join(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  return a + "; " + b;
}

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

PointFunction::PointFunction(ExtFn f, std::string domain_note)
    : f_(std::move(f)), note_(std::move(domain_note)) {}

PointFunction PointFunction::plain(PlainFn f, std::string domain_note) {
  return PointFunction([f = std::move(f)](Complex x) { return Ext(f(x)); },
                       std::move(domain_note));
}

PointFunction PointFunction::constant(Complex c) {
  return PointFunction([c](Complex) { return Ext(c); });
}

PointFunction PointFunction::power(std::int64_t n) {
  return PointFunction([n](Complex x) { return Ext::pow(Ext(x), n); },
                       n < 0 ? "x != 0" : "");
}

PointFunction operator+(const PointFunction& f, const PointFunction& g) {
  return PointFunction([f, g](Complex x) { return f.eval_ext(x) + g.eval_ext(x); },
                       join(f.note_, g.note_));
}

PointFunction operator-(const PointFunction& f, const PointFunction& g) {
  return PointFunction([f, g](Complex x) { return f.eval_ext(x) - g.eval_ext(x); },
                       join(f.note_, g.note_));
}

PointFunction operator*(const PointFunction& f, const PointFunction& g) {
  return PointFunction([f, g](Complex x) { return f.eval_ext(x) * g.eval_ext(x); },
                       join(f.note_, g.note_));
}

PointFunction operator/(const PointFunction& f, const PointFunction& g) {
  return PointFunction([f, g](Complex x) { return f.eval_ext(x) / g.eval_ext(x); },
                       join(join(f.note_, g.note_), "zeros of the divisor"));
}

PointFunction operator*(Complex c, const PointFunction& f) {
  return PointFunction([c, f](Complex x) { return Ext(c) * f.eval_ext(x); }, f.note_);
}

Complex d_lambda(const PointFunction& f, Complex lam, Complex x) {
  if (x == Complex(0, 0)) throw DomainError("d_lambda: x must be nonzero");
  return (f.eval_ext(lam * x) / Ext(x)).to_complex();
}

Ext d_lambda_iter_ext(const PointFunction& f, Complex lam, std::int64_t n, Complex x) {
  if (x == Complex(0, 0)) throw DomainError("d_lambda_iter: x must be nonzero");
  if (lam == Complex(0, 0)) throw DomainError("d_lambda_iter: lambda must be nonzero");
  if (n < 0) throw DomainError("d_lambda_iter: n must be non-negative");
  if (n == 0) return f.eval_ext(x);
  const Ext lam_n = Ext::pow(Ext(lam), n);
  const Complex arg = (lam_n * Ext(x)).to_complex();
  if (!finite(arg) || arg == Complex(0, 0)) {
    throw DomainError("d_lambda_iter: lambda^n x leaves the representable range");
  }
  const Ext pref = Ext::pow(Ext(lam), n * (n - 1) / 2) * Ext::pow(Ext(x), n);
  return f.eval_ext(arg) / pref;
}

Complex d_lambda_iter(const PointFunction& f, Complex lam, std::int64_t n, Complex x) {
  return d_lambda_iter_ext(f, lam, n, x).to_complex();
}

}  // namespace qseries
