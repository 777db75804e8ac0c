#include "core/numeric.hpp"

#include <array>
#include <string>

namespace catcomb {

namespace {

constexpr int kPascalRows = 68;  // C(66,33) still fits in u64

struct PascalTable {
  std::array<std::array<u64, kPascalRows>, kPascalRows> c{};
  PascalTable() {
    for (int a = 0; a < kPascalRows; ++a) {
      c[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

u64 binom(i64 a, i64 b) {
  if (b < 0 || a < 0 || b > a) {
    return 0;
  }
  if (a >= kPascalRows) {
    fail(ErrorCode::BoundsError,
         "binomial argument " + std::to_string(a) +
             " exceeds the supported range");
  }
  return pascal().c[static_cast<int>(a)][static_cast<int>(b)];
}

u64 exact_div(u128 numerator, u64 denominator) {
  if (denominator == 0) {
    fail(ErrorCode::InternalError, "division by zero in a closed form");
  }
  if (numerator % denominator != 0) {
    fail(ErrorCode::InternalError,
         "inexact division in a closed form (quotient would truncate)");
  }
  u128 q = numerator / denominator;
  if (q > static_cast<u128>(~static_cast<u64>(0))) {
    fail(ErrorCode::BoundsError, "closed-form value exceeds 64 bits");
  }
  return static_cast<u64>(q);
}

u64 catalan_number(int n) {
  return exact_div(binom(2 * static_cast<i64>(n), n), static_cast<u64>(n) + 1);
}

u64 pow2(i64 e) {
  if (e < 0 || e >= 64) {
    fail(ErrorCode::InternalError, "power of two out of range");
  }
  return static_cast<u64>(1) << e;
}

}  // namespace catcomb
