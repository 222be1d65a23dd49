#include "doctest.h"
#include "oracle.hpp"
#include "qseries/error.hpp"
#include "qseries/qderivative.hpp"

using namespace qseries;

namespace {

PointFunction as_fn(const oracle::Poly& p) {
  return PointFunction::plain([p](Complex x) { return p(x); });
}

Complex ipow(Complex b, std::int64_t n) { return std::pow(b, static_cast<double>(n)); }

struct Point {
  Complex lam, x;
};

Point draw_point(oracle::Gen& g) { return {g.polar(0.3, 1.5), g.polar(0.3, 1.5)}; }

}  // namespace

TEST_SUITE("qderivative") {
  TEST_CASE("single-step examples") {
    CHECK(std::abs(d_lambda(PointFunction::constant(5), 0.7, 2) - 2.5) < 1e-15);
    CHECK(std::abs(d_lambda(PointFunction::power(2), 2, 3) - 12.0) < 1e-14);
    CHECK(std::abs(d_lambda(PointFunction::power(1), 1, 7) - 1.0) < 1e-15);
    CHECK_THROWS_AS(d_lambda(PointFunction::power(2), 0.5, 0), DomainError);
  }

  TEST_CASE("iterate examples") {
    const auto f = PointFunction::plain([](Complex x) { return std::exp(x); });
    const Complex x(0.4, -0.3);
    CHECK(d_lambda_iter(f, 0.6, 0, x) == f(x));
    const Complex v = d_lambda_iter(PointFunction::power(3), 0.5, 2, x);
    CHECK(oracle::rel(v, std::pow(0.5, 5) * x) < 1e-14);
    CHECK_THROWS_AS(d_lambda_iter(f, 0.0, 2, x), DomainError);
    CHECK_THROWS_AS(d_lambda_iter(f, 0.5, 2, 0.0), DomainError);
  }

  TEST_CASE("iterate equals nested single steps") {
    oracle::Gen g(41);
    for (int i = 0; i < 20; ++i) {
      const auto p = oracle::random_poly(g);
      const auto f = as_fn(p);
      const auto [lam, x] = draw_point(g);
      const PointFunction d1 = PointFunction::plain([&](Complex t) { return d_lambda(f, lam, t); });
      const PointFunction d2 = PointFunction::plain([&](Complex t) { return d_lambda(d1, lam, t); });
      CHECK(oracle::rel(d_lambda_iter(f, lam, 3, x), d_lambda(d2, lam, x)) < 1e-12);
    }
  }

  TEST_CASE("power rule") {
    oracle::Gen g(42);
    for (int i = 0; i < 20; ++i) {
      const auto n = g.integer(-4, 5);
      const auto k = g.integer(0, 4);
      const Real lam = g.real(0.2, 1.5);
      const Complex x = g.polar(0.3, 1.5);
      const Real tri = static_cast<Real>(k * (k - 1) / 2);
      const Complex want = std::pow(lam, static_cast<Real>(k * n) - tri) * ipow(x, n - k);
      CHECK(oracle::rel(d_lambda_iter(PointFunction::power(n), lam, k, x), want) < 1e-12);
    }
  }

  TEST_CASE("product rule in all three forms") {
    oracle::Gen g(43);
    for (int i = 0; i < 20; ++i) {
      const auto fp = oracle::random_poly(g), gp = oracle::random_poly(g);
      const auto f = as_fn(fp), h = as_fn(gp);
      const auto [lam, x] = draw_point(g);
      const Complex lhs = d_lambda(f * h, lam, x);
      CHECK(oracle::rel(lhs, fp(lam * x) * d_lambda(h, lam, x)) < 1e-12);
      CHECK(oracle::rel(lhs, d_lambda(f, lam, x) * gp(lam * x)) < 1e-12);
      CHECK(oracle::rel(lhs, x * d_lambda(f, lam, x) * d_lambda(h, lam, x)) < 1e-12);
      const Complex avg =
          0.5 * (fp(lam * x) * d_lambda(h, lam, x) + d_lambda(f, lam, x) * gp(lam * x));
      CHECK(oracle::rel(lhs, avg) < 1e-12);
    }
  }

  TEST_CASE("quotient rule") {
    oracle::Gen g(44);
    for (int i = 0; i < 20; ++i) {
      const auto fp = oracle::random_poly(g), gp = oracle::random_poly(g);
      const auto [lam, x] = draw_point(g);
      if (std::abs(gp(lam * x)) < 1e-3) continue;
      const Complex lhs = d_lambda(as_fn(fp) / as_fn(gp), lam, x);
      CHECK(oracle::rel(lhs, d_lambda(as_fn(fp), lam, x) / gp(lam * x)) < 1e-12);
    }
  }

  TEST_CASE("linearity") {
    oracle::Gen g(45);
    for (int i = 0; i < 20; ++i) {
      const auto f = as_fn(oracle::random_poly(g)), h = as_fn(oracle::random_poly(g));
      const Complex a = g.polar(0.1, 2), b = g.polar(0.1, 2);
      const auto [lam, x] = draw_point(g);
      const Complex lhs = d_lambda(a * f + b * h, lam, x);
      const Complex rhs = a * d_lambda(f, lam, x) + b * d_lambda(h, lam, x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(a * d_lambda(f, lam, x)) +
                                            std::abs(b * d_lambda(h, lam, x))));
      const Complex diff = d_lambda(f - h, lam, x);
      CHECK(std::abs(diff - (d_lambda(f, lam, x) - d_lambda(h, lam, x))) <=
            1e-12 * (std::abs(d_lambda(f, lam, x)) + std::abs(d_lambda(h, lam, x))));
    }
  }

  TEST_CASE("Leibniz rule for iterates") {
    oracle::Gen g(46);
    for (int i = 0; i < 20; ++i) {
      const auto f = as_fn(oracle::random_poly(g)), h = as_fn(oracle::random_poly(g));
      const auto [lam, x] = draw_point(g);
      const auto n = g.integer(0, 4);
      const Complex lhs = d_lambda_iter(f * h, lam, n, x);
      const Complex rhs = ipow(lam, n * (n - 1) / 2) * ipow(x, n) * d_lambda_iter(f, lam, n, x) *
                          d_lambda_iter(h, lam, n, x);
      CHECK(oracle::rel(lhs, rhs) < 1e-11);
    }
  }

  TEST_CASE("k-fold product rule") {
    oracle::Gen g(47);
    for (int i = 0; i < 20; ++i) {
      const auto f1 = as_fn(oracle::random_poly(g)), f2 = as_fn(oracle::random_poly(g)),
                 f3 = as_fn(oracle::random_poly(g));
      const auto [lam, x] = draw_point(g);
      const auto n = g.integer(0, 3);
      const Complex lhs = d_lambda_iter(f1 * f2 * f3, lam, n, x);
      const Complex rhs = ipow(lam, 2 * (n * (n - 1) / 2)) * ipow(x, 2 * n) *
                          d_lambda_iter(f1, lam, n, x) * d_lambda_iter(f2, lam, n, x) *
                          d_lambda_iter(f3, lam, n, x);
      CHECK(oracle::rel(lhs, rhs) < 1e-11);
    }
  }

  TEST_CASE("extended range iterate") {
    // About 10^1067: beyond binary64, fine in extended range.
    const PointFunction f([](Complex t) { return Ext(1.0) / Ext(t); });
    const Ext v = d_lambda_iter_ext(f, 0.05, 40, Complex(0.5, 0));
    CHECK(v.is_finite());
    CHECK_FALSE(std::isfinite(v.to_complex().real()));
  }

  TEST_CASE("evaluation is deterministic") {
    const auto f = PointFunction::plain([](Complex x) { return std::sin(x) + x * x; });
    CHECK(f(Complex(0.3, 0.2)) == f(Complex(0.3, 0.2)));
  }
}
