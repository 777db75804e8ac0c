#pragma once

#include <cstdint>

#include "core/errors.hpp"

namespace catcomb {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Binomial coefficient with the extended convention used throughout the
// closed forms: C(a,b) = 0 whenever b < 0, b > a, or a < 0.
u64 binom(i64 a, i64 b);

// Exact division; throws InternalError when the division leaves a remainder
// (an inexact division in a closed form is always a transcription bug).
u64 exact_div(u128 numerator, u64 denominator);

// nth Catalan number, exact.
u64 catalan_number(int n);

// 2^e as u64 (e must fit; e < 0 is an internal error).
u64 pow2(i64 e);

}  // namespace catcomb
