#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qseries/error.hpp"
#include "qseries/ext.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

// (a;q)_n. For n < 0 uses (a;q)_{-m} = 1 / (a q^{-m};q)_m, which keeps
// (q^n a;q)_inf = (a;q)_inf / (a;q)_n valid for every integer n.
// Throws PoleError when a factor of that reciprocal is within kPoleEps of 0.
Complex qpoch_finite(Complex a, QBase q, std::int64_t n);

// 1 / (b;q)_n. For n < 0 this is the plain product (b q^n;q)_{-n}, so it is
// exactly 0 when b = q^k with 1 <= k <= -n; only n > 0 can raise PoleError.
Complex qpoch_recip_finite(Complex b, QBase q, std::int64_t n);

// (a;q)_inf, stopping once |a q^k| < eps for consecutive_small successive k.
// The neglected tail changes the result by a relative amount of roughly
// |a q^K| / (1 - |q|). `terms` receives the number of factors used.
Complex qpoch_infinite(Complex a, QBase q, const Truncation& trunc = {},
                       std::size_t* terms = nullptr);
Ext qpoch_infinite_ext(Complex a, QBase q, const Truncation& trunc = {},
                       std::size_t* terms = nullptr);

struct Infinite {};
inline constexpr Infinite kInfinity{};

// (a_1, ..., a_m; q)_n and (a_1, ..., a_m; q)_inf.
Complex qpoch_multi(std::span<const Complex> as, QBase q, std::int64_t n);
Complex qpoch_multi(std::span<const Complex> as, QBase q, Infinite,
                    const Truncation& trunc = {});
Ext qpoch_multi_ext(std::span<const Complex> as, QBase q, const Truncation& trunc = {});

}  // namespace qseries
