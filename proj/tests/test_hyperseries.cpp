#include <limits>

#include "doctest.h"
#include "oracle.hpp"
#include "qseries/error.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/qfactorial.hpp"
#include "qseries/theta.hpp"

using namespace qseries;

namespace {

std::vector<oracle::LC> lcs(const std::vector<Complex>& v) {
  std::vector<oracle::LC> out;
  for (Complex z : v) out.push_back(oracle::lc(z));
  return out;
}

Complex ramanujan_rhs(Complex a, Complex b, Complex q, Complex z) {
  return qpoch_infinite(q, q) * qpoch_infinite(b / a, q) * qpoch_infinite(a * z, q) *
         qpoch_infinite(q / (a * z), q) /
         (qpoch_infinite(b, q) * qpoch_infinite(q / a, q) * qpoch_infinite(z, q) *
          qpoch_infinite(b / (a * z), q));
}

}  // namespace

TEST_SUITE("hyperseries") {
  TEST_CASE("unilateral examples") {
    CHECK(phi({0.3}, {}, 0.4, 0) == Complex(1, 0));
    const Complex want = qpoch_infinite(0.15, 0.4) / qpoch_infinite(0.5, 0.4);
    CHECK(oracle::rel(phi({0.3}, {}, 0.4, 0.5), want) < 1e-13);
  }

  TEST_CASE("terminating series") {
    const Real q = 0.5;
    const Complex a = 1.0 / (q * q), b = 0.3, c = 0.7, z = 0.9;
    std::size_t terms = 0;
    const Complex v = phi(SeriesSpec{{a, b}, {c}, q, z}, {}, &terms);
    Complex brute = 0;
    for (int n = 0; n <= 2; ++n) {
      brute += qpoch_finite(a, q, n) * qpoch_finite(b, q, n) /
               (qpoch_finite(q, q, n) * qpoch_finite(c, q, n)) * std::pow(z, n);
    }
    CHECK(oracle::rel(v, brute) < 1e-13);
    CHECK(terms <= 4);
  }

  TEST_CASE("domain errors for unilateral series") {
    CHECK_THROWS_AS(phi({0.3, 0.2, 0.1}, {0.5}, 0.4, 0.1), DomainError);
    CHECK_THROWS_AS(phi({0.3}, {}, 0.4, 1.0), DomainError);
    CHECK_THROWS_AS(phi({0.3}, {2.0}, 0.5, 0.1), PoleError);  // 1 - 2 q at n = 1
  }

  TEST_CASE("q-binomial theorem") {
    oracle::Gen g(31);
    for (int i = 0; i < 30; ++i) {
      const Complex a = g.polar(0.1, 2.0);
      const Complex q = g.polar(0.05, 0.8);
      const Complex z = g.polar(0.0, 0.7);
      const Complex want = qpoch_infinite(a * z, q) / qpoch_infinite(z, q);
      CHECK(oracle::rel(phi({a}, {}, q, z), want) < 1e-9);
    }
  }

  TEST_CASE("Ramanujan 1psi1 sum") {
    CHECK(oracle::rel(psi({0.6}, {0.1}, 0.4, 0.5), ramanujan_rhs(0.6, 0.1, 0.4, 0.5)) < 1e-10);
    oracle::Gen g(32);
    int done = 0;
    while (done < 30) {
      const Complex q = g.real(0.05, 0.6);
      const Complex a = g.polar(0.1, 0.8), b = g.polar(0.1, 0.8);
      const Complex z = g.polar(0.2, 0.7);
      if (std::abs(b / a) > 0.5 * std::abs(z)) continue;
      CHECK(oracle::rel(psi({a}, {b}, q, z), ramanujan_rhs(a, b, q, z)) < 1e-8);
      ++done;
    }
  }

  TEST_CASE("lower parameter q turns psi into phi") {
    oracle::Gen g(33);
    for (int i = 0; i < 20; ++i) {
      const Complex q = g.polar(0.05, 0.6);
      const Complex a = g.polar(0.1, 0.8), b = g.polar(0.1, 0.8);
      const Complex z = g.polar(0.1, 0.7);
      CHECK(oracle::rel(psi({a}, {q}, q, z), phi({a}, {}, q, z)) < 1e-10);
      CHECK(oracle::rel(psi({a}, {q, b}, q, z), phi({a}, {b}, q, z)) < 1e-10);
      CHECK(oracle::rel(psi({a, 0.3}, {b, q}, q, z), phi({a, 0.3}, {b}, q, z)) < 1e-10);
    }
  }

  TEST_CASE("0psi1 with b = 0 is a theta function") {
    oracle::Gen g(34);
    for (int i = 0; i < 20; ++i) {
      const Complex q = g.polar(0.05, 0.6);
      const Complex z = g.polar(0.2, 2.0);
      CHECK(oracle::rel(psi({}, {0}, q, z), theta_series(-z / q, q)) < 1e-11);
    }
  }

  TEST_CASE("recurrence matches per-term products") {
    oracle::Gen g(35);
    for (int i = 0; i < 20; ++i) {
      const Complex q = g.polar(0.05, 0.6);
      const auto r = g.integer(0, 3);
      const auto s = g.integer(std::max<std::int64_t>(0, r - 1), 3);
      std::vector<Complex> up, lo;
      for (std::int64_t k = 0; k < r; ++k) up.push_back(g.polar(0.1, 0.8));
      for (std::int64_t k = 0; k < s; ++k) lo.push_back(g.polar(0.1, 0.8));
      const Complex z = g.polar(0.05, r == s + 1 ? 0.7 : 2.0);
      const Complex want = oracle::back(oracle::phi(lcs(up), lcs(lo), oracle::lc(q), oracle::lc(z)));
      CHECK(oracle::rel(phi(up, lo, q, z), want) < 1e-11);
    }
  }

  TEST_CASE("bilateral recurrence matches per-term products") {
    oracle::Gen g(36);
    int done = 0;
    while (done < 20) {
      const Complex q = g.real(0.2, 0.6);
      const auto r = g.integer(1, 2);
      const auto s = g.integer(r, 3);
      std::vector<Complex> up, lo;
      for (std::int64_t k = 0; k < r; ++k) up.push_back(g.polar(0.3, 0.8));
      for (std::int64_t k = 0; k < s; ++k) lo.push_back(g.polar(0.1, 0.8));
      const Complex z = g.polar(0.2, r == s ? 0.7 : 1.5);
      SeriesSpec spec{up, lo, q, z, true};
      if (!convergence_domain(spec, 0.3).inside) continue;
      const Complex want = oracle::back(oracle::psi(lcs(up), lcs(lo), oracle::lc(q), oracle::lc(z)));
      CHECK(oracle::rel(psi(spec), want) < 1e-10);
      ++done;
    }
  }

  TEST_CASE("1psi1 with lower q is 1phi0") {
    const Complex q = 0.45, a = Complex(0.3, 0.2), z = Complex(-0.2, 0.4);
    CHECK(oracle::rel(psi({a}, {q}, q, z), qpoch_infinite(a * z, q) / qpoch_infinite(z, q)) < 1e-12);
  }

  TEST_CASE("convergence domain") {
    SeriesSpec s{{0.6}, {0.1}, 0.4, 0.5, true};
    DomainStatus d = convergence_domain(s);
    CHECK(d.inside);
    CHECK(d.lower_bound == doctest::Approx(1.0 / 6.0));
    CHECK(d.upper_bound == doctest::Approx(1.0));
    s.z = 0.1;
    CHECK_FALSE(convergence_domain(s).inside);
    CHECK_THROWS_AS(psi(s), DomainError);

    SeriesSpec wide{{0.3}, {0.2, 0.7}, 0.5, 7.0, true};
    d = convergence_domain(wide);
    CHECK(d.inside);
    CHECK(d.upper_bound == std::numeric_limits<Real>::infinity());

    SeriesSpec theta_like{{}, {0}, 0.5, 0.01, true};
    d = convergence_domain(theta_like);
    CHECK(d.inside);
    CHECK(d.lower_bound == 0);
  }

  TEST_CASE("E_b family") {
    for (unsigned b = 0; b <= 4; ++b) CHECK(e_b(0, 0.5, b) == Complex(1, 0));
    CHECK(oracle::rel(e_b(0.3, 0.5, 1), qpoch_infinite(-0.3, 0.5)) < 1e-14);
    CHECK(oracle::rel(e_b(0.3, 0.5, 0), 1.0 / qpoch_infinite(0.3, 0.5)) < 1e-14);
    const Complex series0 = oracle::back(oracle::e_b(0.3, 0.5, 0));
    CHECK(oracle::rel(e_b(0.3, 0.5, 0), series0) < 1e-10);
    oracle::Gen g(37);
    for (int i = 0; i < 20; ++i) {
      const Complex q = g.polar(0.05, 0.7);
      const Complex y = g.polar(0.0, 3.0);
      const auto b = static_cast<unsigned>(g.integer(1, 4));
      const Complex want = oracle::back(oracle::e_b(oracle::lc(y), oracle::lc(q), b));
      CHECK(oracle::rel(e_b(y, q, b), want) < 1e-11);
    }
  }

  TEST_CASE("K_inf") {
    CHECK(kinf(0, 0.5) == Complex(1, 0));
    Complex brute = 0;
    for (int n = 0; n < 40; ++n)
      brute += std::pow(0.5, n * (n - 1)) / qpoch_finite(0.5, 0.5, n);
    CHECK(std::abs(kinf(1, 0.5) - brute) < 1e-12);
    CHECK(kinf(-2, 0.3) == e_b(-2, 0.3, 2));
  }

  TEST_CASE("bilateral sum tails and failures") {
    TailStats st;
    const Ext v = bilateral_sum([](std::int64_t n) { return Ext(std::pow(0.5, std::abs(n))); }, {}, &st);
    CHECK(std::abs(v.to_complex() - 3.0) < 1e-13);
    CHECK(st.forward > 40);
    CHECK(st.backward > 40);
    CHECK_THROWS_AS(
        bilateral_sum([](std::int64_t n) { return Ext(std::pow(1.5, std::abs(n))); }),
        DivergenceDetected);
    Truncation tight;
    tight.max_terms = 10;
    CHECK_THROWS_AS(
        bilateral_sum([](std::int64_t n) { return Ext(std::pow(0.9, std::abs(n))); }, tight),
        BudgetExceeded);
  }

  TEST_CASE("cancellation guard near x = -1") {
    // Partial sums pass close to zero; the stop rule uses the running maximum.
    const Complex x(-1.0, 1e-9);
    CHECK(oracle::rel(theta_series(x, 0.5), theta_product(x, 0.5)) < 1e-5);
  }
}
