#include "doctest.h"
#include "oracle.hpp"
#include "qseries/error.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/qfactorial.hpp"
#include "qseries/qoperator.hpp"
#include "qseries/theta.hpp"

using namespace qseries;

namespace {

// The operator applied to x^n straight from its definition.
oracle::LC eop_power_oracle(Complex qc, Complex yc, Complex xc, unsigned b, int sign,
                            std::int64_t n, int depth = 150) {
  using oracle::ipow;
  const oracle::LC q = oracle::lc(qc), y = oracle::lc(yc), x = oracle::lc(xc);
  oracle::LC sum = 0;
  for (std::int64_t k = 0; k < depth; ++k) {
    const std::int64_t tri = k * (k - 1) / 2;
    // lambda^(kn) / lambda^tri folded into one power of q so nothing overflows.
    const std::int64_t e = static_cast<std::int64_t>(b) * tri + sign * (k * n - tri);
    sum += ipow(q, e) * ipow(y / x, k) * ipow(x, n) / oracle::qpoch(q, q, k);
  }
  return sum;
}

PointFunction theta_at(Complex a, Real q) {
  return PointFunction([a, q](Complex t) { return theta_ext(a * t, q); });
}

}  // namespace

TEST_SUITE("qoperator") {
  TEST_CASE("y = 0 leaves f unchanged") {
    const auto f = PointFunction::plain([](Complex x) { return std::exp(x); });
    for (int sign : {+1, -1}) {
      EOpSpec op{0, 0.4, 2, sign};
      CHECK(apply_eop(op, f, Complex(0.3, 0.1)) == f(Complex(0.3, 0.1)));
    }
  }

  TEST_CASE("power example with b = 2") {
    const Real q = 0.45;
    const Complex x(0.8, 0.2), y(0.1, -0.05);
    const std::int64_t n = 2;
    const Complex got = apply_eop(EOpSpec{y, q, 2, +1}, PointFunction::power(n), x);
    const Complex want = std::pow(x, 2) * e_b(std::pow(q, 2) * y / x, q, 1);
    CHECK(oracle::rel(got, want) < 1e-12);
  }

  TEST_CASE("theta example with b = 1 and inverse base") {
    const Real q = 0.4;
    const Complex a(0.5, 0.1), x(0.9, -0.3), y(0.12, 0.05);
    const Complex got = apply_eop(EOpSpec{y, q, 1, -1}, theta_at(a, q), x);
    CHECK(oracle::rel(got, theta(a * x, q) * qpoch_infinite(-a * y, q)) < 1e-11);
  }

  TEST_CASE("power action against closed form and oracle") {
    oracle::Gen g(51);
    int done = 0;
    while (done < 40) {
      const Real q = g.real(0.1, 0.6);
      const Complex x = g.polar(0.3, 1.5), y = g.polar(0.02, 0.2);
      const int sign = g.integer(0, 1) ? +1 : -1;
      const auto b = static_cast<unsigned>(g.integer(sign > 0 ? 1 : 0, 4));
      const auto n = g.integer(-3, 3);
      const Complex arg = std::pow(q, static_cast<Real>(sign * n)) * y / x;
      const unsigned eb_index = sign > 0 ? b - 1 : b + 1;
      if (eb_index == 0 && std::abs(arg) > 0.7) continue;
      const Complex got = apply_eop(EOpSpec{y, q, b, sign}, PointFunction::power(n), x);
      const Complex closed = std::pow(x, static_cast<Real>(n)) * e_b(arg, q, eb_index);
      CHECK(oracle::rel(got, closed) < 1e-9);
      const Complex brute = oracle::back(eop_power_oracle(q, y, x, b, sign, n));
      CHECK(oracle::rel(got, brute) < 1e-11);
      ++done;
    }
  }

  TEST_CASE("theta action") {
    oracle::Gen g(52);
    int done = 0;
    while (done < 30) {
      const Real q = g.real(0.1, 0.6);
      const Complex a = g.polar(0.1, 0.8), x = g.polar(0.3, 1.5), y = g.polar(0.02, 0.2);
      const bool forward = g.integer(0, 1) == 1;
      if (forward) {
        const auto b = static_cast<unsigned>(g.integer(2, 5));
        const Complex arg = y / (q * a * x * x);
        if (b == 2 && std::abs(arg) > 0.7) continue;
        const Complex got = apply_eop(EOpSpec{y, q, b, +1}, theta_at(a, q), x);
        CHECK(oracle::rel(got, theta(a * x, q) * e_b(arg, q, b - 2)) < 1e-9);
      } else {
        const auto b = static_cast<unsigned>(g.integer(0, 3));
        const Complex got = apply_eop(EOpSpec{y, q, b, -1}, theta_at(a, q), x);
        CHECK(oracle::rel(got, theta(a * x, q) * e_b(a * y, q, b)) < 1e-9);
      }
      ++done;
    }
  }

  TEST_CASE("linear in the operand") {
    oracle::Gen g(53);
    for (int i = 0; i < 20; ++i) {
      const Real q = g.real(0.1, 0.6);
      const Complex a = g.polar(0.1, 0.8), x = g.polar(0.3, 1.5), y = g.polar(0.02, 0.2);
      const Complex al = g.polar(0.2, 2), be = g.polar(0.2, 2);
      const auto f = theta_at(a, q);
      const auto h = PointFunction::power(g.integer(-3, 3));
      EOpSpec op{y, q, 3, +1};
      const Complex lhs = apply_eop(op, al * f + be * h, x);
      const Complex rhs = al * apply_eop(op, f, x) + be * apply_eop(op, h, x);
      CHECK(oracle::rel(lhs, rhs) < 1e-12);
    }
  }

  TEST_CASE("divergence and budget") {
    // E_0 of y/x with |y/x| > 1: terms grow geometrically.
    EOpSpec op{2.0, 0.5, 1, +1};
    CHECK_THROWS_AS(apply_eop(op, PointFunction::power(0), 1.0), DivergenceDetected);
    EOpSpec slow{0.95, 0.5, 1, +1};
    CHECK_THROWS_AS(apply_eop(slow, PointFunction::power(0), 1.0), BudgetExceeded);
    EOpSpec capped{0.5, 0.5, 1, +1};
    capped.max_terms = 10;
    CHECK_THROWS_AS(apply_eop(capped, PointFunction::power(0), 1.0), BudgetExceeded);
  }

  TEST_CASE("term count is reported") {
    std::size_t terms = 0;
    apply_eop(EOpSpec{0.1, 0.5, 2, +1}, PointFunction::power(1), 0.8, {}, &terms);
    CHECK(terms > 0);
    CHECK(terms < 40);
  }
}
