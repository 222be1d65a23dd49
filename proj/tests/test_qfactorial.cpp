#include <array>

#include "doctest.h"
#include "oracle.hpp"
#include "qseries/error.hpp"
#include "qseries/qfactorial.hpp"

using namespace qseries;

TEST_SUITE("qfactorial") {
  TEST_CASE("finite product examples") {
    CHECK(qpoch_finite({0.7, 0.3}, 0.4, 0) == Complex(1, 0));
    CHECK(std::abs(qpoch_finite(0.5, 0.5, 3) - 0.328125) < 1e-15);
    CHECK(std::abs(qpoch_finite(0.3, 0.5, -1) - 2.5) < 1e-14);
    CHECK_THROWS_AS(qpoch_finite(0.5, 0.5, -1), PoleError);
  }

  TEST_CASE("reciprocal examples") {
    CHECK(qpoch_recip_finite(0.4, 0.4, -2) == Complex(0, 0));
    CHECK(std::abs(qpoch_recip_finite(0.3, 0.5, 2) - 1.0 / (0.7 * 0.85)) < 1e-14);
    CHECK(qpoch_recip_finite({0.2, -0.9}, 0.1, 0) == Complex(1, 0));
    CHECK_THROWS_AS(qpoch_recip_finite(4.0, 0.5, 3), PoleError);
  }

  TEST_CASE("infinite product examples") {
    CHECK(qpoch_infinite(0, 0.5) == Complex(1, 0));
    CHECK(std::abs(qpoch_infinite(0.5, 0.5) - 0.2887880950866024) < 1e-13);
    CHECK(qpoch_infinite(1, 0.3) == Complex(0, 0));
    std::size_t terms = 0;
    qpoch_infinite(0.9, 0.5, {}, &terms);
    CHECK(terms > 40);
    CHECK(terms < 60);
  }

  TEST_CASE("multiple factorial examples") {
    CHECK(qpoch_multi(std::span<const Complex>{}, 0.3, 5) == Complex(1, 0));
    const std::array<Complex, 2> as{0.5, 0.25};
    CHECK(std::abs(qpoch_multi(as, 0.5, 2) - 0.24609375) < 1e-15);
    const std::array<Complex, 3> zeros{0, 0, 0};
    CHECK(qpoch_multi(zeros, 0.5, kInfinity) == Complex(1, 0));
  }

  TEST_CASE("base q = 0 keeps only the first factor") {
    CHECK(std::abs(qpoch_finite(0.3, 0.0, 5) - 0.7) < 1e-15);
    CHECK(std::abs(qpoch_infinite({0.2, 0.1}, 0.0) - Complex(0.8, -0.1)) < 1e-15);
  }

  TEST_CASE("invalid base and truncation are rejected") {
    CHECK_THROWS_AS(QBase(1.0), DomainError);
    CHECK_THROWS_AS(QBase(Complex(0.8, 0.8)), DomainError);
    Truncation t;
    t.eps = 0;
    CHECK_THROWS_AS(t.validate(), DomainError);
    t = {};
    t.consecutive_small = 0;
    CHECK_THROWS_AS(t.validate(), DomainError);
  }

  TEST_CASE("finite products match the brute-force oracle") {
    oracle::Gen g(11);
    for (int i = 0; i < 60; ++i) {
      const Complex a = g.polar(0.1, 2.0);
      const Complex q = g.polar(0.05, 0.9);
      const auto n = g.integer(-6, 6);
      const Complex want = oracle::back(oracle::qpoch(oracle::lc(a), oracle::lc(q), n));
      CHECK(oracle::rel(qpoch_finite(a, q, n), want) < 1e-12);
    }
  }

  TEST_CASE("infinite product matches the oracle") {
    oracle::Gen g(12);
    for (int i = 0; i < 40; ++i) {
      const Complex a = g.polar(0.0, 3.0);
      const Complex q = g.polar(0.0, 0.8);
      const Complex want = oracle::back(oracle::qpoch_inf(oracle::lc(a), oracle::lc(q)));
      CHECK(oracle::rel(qpoch_infinite(a, q), want) < 1e-12);
    }
  }

  TEST_CASE("factorial times reciprocal is one") {
    oracle::Gen g(13);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      const Complex a = g.polar(0.1, 2.0);
      const Complex q = g.polar(0.05, 0.6);
      const auto n = g.integer(-6, 6);
      try {
        const Complex p = qpoch_finite(a, q, n) * qpoch_recip_finite(a, q, n);
        CHECK(std::abs(p - 1.0) < 1e-12);
        ++checked;
      } catch (const PoleError&) {
      }
    }
    CHECK(checked > 150);
  }

  TEST_CASE("shift up and shift down") {
    oracle::Gen g(14);
    for (int i = 0; i < 50; ++i) {
      const Complex a = g.polar(0.1, 0.9);
      const Complex q = g.polar(0.05, 0.6);
      const auto n = g.integer(0, 6);
      const Complex qn = std::pow(q, static_cast<double>(n));
      const Complex up = qpoch_infinite(qn * a, q);
      CHECK(oracle::rel(up, qpoch_infinite(a, q) / qpoch_finite(a, q, n)) < 1e-10);

      const Real tri = static_cast<Real>(n * (n + 1) / 2);
      const Complex down = qpoch_infinite(a / qn, q);
      const Complex rhs = std::pow(-a, static_cast<double>(n)) / std::pow(q, tri) *
                          qpoch_finite(q / a, q, n) * qpoch_infinite(a, q);
      CHECK(oracle::rel(down, rhs) < 1e-10);
    }
  }

  TEST_CASE("inverted base as a finite product") {
    oracle::Gen g(15);
    for (int i = 0; i < 30; ++i) {
      const Complex a = g.polar(0.1, 2.0);
      const Complex q = g.polar(0.2, 0.9);
      const auto n = g.integer(0, 6);
      Complex direct = 1;
      for (std::int64_t k = 0; k < n; ++k) direct *= 1.0 - a * std::pow(q, -static_cast<double>(k));
      const Complex rhs = std::pow(q, -static_cast<double>(n * (n - 1) / 2)) *
                          std::pow(-a, static_cast<double>(n)) * qpoch_finite(1.0 / a, q, n);
      CHECK(oracle::rel(direct, rhs) < 1e-10);
    }
  }

  TEST_CASE("telescoping over integer splits") {
    oracle::Gen g(16);
    for (int i = 0; i < 60; ++i) {
      const Complex a = g.polar(0.1, 0.9);
      const Complex q = g.polar(0.1, 0.6);
      const auto m = g.integer(-4, 4), n = g.integer(-4, 4);
      try {
        const Complex whole = qpoch_finite(a, q, m + n);
        const Complex split =
            qpoch_finite(a, q, m) * qpoch_finite(a * std::pow(q, static_cast<double>(m)), q, n);
        CHECK(oracle::rel(whole, split) < 1e-11);
      } catch (const PoleError&) {
      }
    }
  }
}
