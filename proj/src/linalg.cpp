#include "degcx/linalg.hpp"

#include <gmpxx.h>

#include <limits>
#include <utility>

namespace degcx {

namespace {

// One Bareiss step: a[i][j] <- (a[i][j]*pivot - a[i][k]*a[k][j]) / prev.
// The division is exact; every entry of the working matrix is a minor of
// the input, which keeps the growth polynomial in the pivot sizes.
//
// The int64 driver reports failure instead of overflowing.
bool rank_int64(const IntMatrix& m, int& rank_out) {
  const std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  IntMatrix w = m;
  std::int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int pr = -1;
    for (int i = r; i < w.rows && pr < 0; ++i)
      if (w.at(i, c) != 0) pr = i;
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(pr, j), w.at(r, j));
    const std::int64_t pivot = w.at(r, c);
    for (int i = r + 1; i < w.rows; ++i) {
      const std::int64_t lead = w.at(i, c);
      for (int j = c; j < w.cols; ++j) {
        __int128 num = static_cast<__int128>(w.at(i, j)) * pivot -
                       static_cast<__int128>(lead) * w.at(r, j);
        __int128 q = num / prev;
        if (q > kMax || q < -kMax) return false;
        w.at(i, j) = static_cast<std::int64_t>(q);
      }
    }
    prev = pivot;
    ++r;
  }
  rank_out = r;
  return true;
}

}  // namespace

int exact_rank_bignum(const IntMatrix& m) {
  std::vector<mpz_class> w(m.a.begin(), m.a.end());
  auto at = [&w, &m](int r, int c) -> mpz_class& {
    return w[static_cast<std::size_t>(r) * m.cols + c];
  };
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows && pr < 0; ++i)
      if (at(i, c) != 0) pr = i;
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(at(pr, j), at(r, j));
    const mpz_class pivot = at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      const mpz_class lead = at(i, c);
      for (int j = c; j < m.cols; ++j) {
        mpz_class num = at(i, j) * pivot - lead * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    ++r;
  }
  return r;
}

int exact_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int r = 0;
  if (rank_int64(m, r)) return r;
  return exact_rank_bignum(m);
}

}  // namespace degcx
