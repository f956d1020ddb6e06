#pragma once

#include <cstdint>
#include <vector>

namespace degcx {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Exact rank over the rationals via fraction-free (Bareiss) elimination.
// Runs in 64-bit arithmetic and falls back to arbitrary precision as soon
// as an intermediate minor would overflow, so the result is always exact.
int exact_rank(const IntMatrix& m);

// The arbitrary-precision path on its own; exposed so the two routes can be
// checked against each other.
int exact_rank_bignum(const IntMatrix& m);

}  // namespace degcx
