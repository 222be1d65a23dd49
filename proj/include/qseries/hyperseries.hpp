#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

struct SeriesSpec {
  std::vector<Complex> upper;  // a_1..a_r
  std::vector<Complex> lower;  // b_1..b_s
  QBase base;
  Complex z;
  bool bilateral = false;
};

struct DomainStatus {
  bool inside = false;
  Real lower_bound = 0;  // inner radius of the annulus
  Real upper_bound = 1;  // outer radius; +inf when s > r
  Real margin = kDomainMargin;
};

// Number of terms taken on each side of a two-sided sum.
struct TailStats {
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t max_tail() const { return forward > backward ? forward : backward; }
};

// r phi s with the factor [(-1)^n q^(n choose 2)]^(1+s-r), by term recurrence.
// DomainError when r > s+1, or r = s+1 with |z| >= 1.
Complex phi(const SeriesSpec& spec, const Truncation& trunc = {}, std::size_t* terms = nullptr);
Ext phi_ext(const SeriesSpec& spec, const Truncation& trunc = {}, std::size_t* terms = nullptr);
Complex phi(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc = {});
Ext phi_ext(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc = {});

// r psi s with the factor [(-1)^n q^(n choose 2)]^(s-r). Both tails run from
// n = 0 by term recurrence; a lower parameter equal to q^k zeroes the
// negative tail from n = -k on. DomainError outside the annulus.
Complex psi(const SeriesSpec& spec, const Truncation& trunc = {}, TailStats* stats = nullptr);
Ext psi_ext(const SeriesSpec& spec, const Truncation& trunc = {}, TailStats* stats = nullptr);
Complex psi(std::vector<Complex> upper, std::vector<Complex> lower, QBase q, Complex z,
            const Truncation& trunc = {}, TailStats* stats = nullptr);

// Annulus of convergence of a bilateral series and whether z sits inside it
// with the given relative margin on both radii.
//
// The negative tail behaves like (prod b / prod a / z)^m when the numbers of
// zero parameters above and below agree, decays superexponentially when
// more lower parameters are zero, and diverges when more upper ones are.
DomainStatus convergence_domain(const SeriesSpec& spec, Real margin = kDomainMargin);

// E_b(y;q) = sum q^(b (n choose 2)) y^n / (q;q)_n.
// b = 0 is 1/(y;q)_inf, b = 1 is (-y;q)_inf, b >= 2 is summed directly.
Complex e_b(Complex y, QBase q, unsigned b, const Truncation& trunc = {},
            std::size_t* terms = nullptr);
Ext e_b_ext(Complex y, QBase q, unsigned b, const Truncation& trunc = {},
            std::size_t* terms = nullptr);

// K_inf(y) = E_2(y;q).
Complex kinf(Complex y, QBase q, const Truncation& trunc = {}, std::size_t* terms = nullptr);

// Sum of term(n) over all integers. Each tail stops once consecutive_small
// successive terms fall below eps times the largest partial sum seen so far.
// Sustained term growth raises DivergenceDetected.
Ext bilateral_sum(const std::function<Ext(std::int64_t)>& term, const Truncation& trunc = {},
                  TailStats* stats = nullptr);

}  // namespace qseries
