#include "degcx/primes.hpp"

#include <algorithm>

namespace degcx {

namespace {

void require_symbolic_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("minimal primes need a nonzero, non-unit ideal");
  if (!ideal.is_squarefree())
    throw std::invalid_argument("symbolic operations are restricted to squarefree ideals");
}

}  // namespace

PrimeList minimal_primes(const MonomialIdeal& ideal) {
  require_symbolic_input(ideal);
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  const VertexSet universe = ideal.support();

  PrimeList primes;
  // Subset enumeration over the support universe. P is a minimal transversal
  // iff it meets every edge and every vertex of P has an edge it covers alone.
  VertexSet p = 0;
  do {
    bool covers = true;
    VertexSet needed = 0;
    for (VertexSet e : edges) {
      VertexSet hit = e & p;
      if (hit == 0) {
        covers = false;
        break;
      }
      if ((hit & (hit - 1)) == 0) needed |= hit;  // single-vertex hit
    }
    if (covers && needed == p) primes.push_back(p);
    p = (p - universe) & universe;
  } while (p != 0);

  std::sort(primes.begin(), primes.end(), vertex_set_less);
  return primes;
}

bool symbolic_membership(const MonomialIdeal& ideal, int s, const ExponentVector& gamma) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be positive");
  if (gamma.vars() != ideal.vars())
    throw std::invalid_argument("monomial length does not match the variable count");
  if (!gamma.nonnegative())
    throw std::invalid_argument("symbolic membership needs a nonnegative exponent vector");
  for (VertexSet p : minimal_primes(ideal)) {
    long long deg = 0;
    for (int i : set_to_list(p)) deg += gamma[i];
    if (deg < s) return false;
  }
  return true;
}

MonomialIdeal prime_power_ideal(int n, VertexSet p, int s) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be positive");
  if (p == 0) throw std::invalid_argument("empty prime");
  std::vector<int> vars = set_to_list(p);
  std::vector<ExponentVector> gens;
  std::vector<int> e(n, 0);
  // All ways to distribute s among the variables of p.
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx + 1 == vars.size()) {
      e[vars[idx]] = remaining;
      gens.push_back(ExponentVector(e));
      e[vars[idx]] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[vars[idx]] = k;
      self(self, idx + 1, remaining - k);
      e[vars[idx]] = 0;
    }
  };
  rec(rec, 0, s);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal symbolic_power_ideal(const MonomialIdeal& ideal, int s) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be positive");
  require_symbolic_input(ideal);
  MonomialIdeal acc = MonomialIdeal::unit(ideal.vars());
  for (VertexSet p : minimal_primes(ideal))
    acc = intersection(acc, prime_power_ideal(ideal.vars(), p, s));
  return acc;
}

PrimeList fiber_product_primes(const MonomialIdeal& i_side, const MonomialIdeal& j_side,
                               int m) {
  const int n = i_side.vars();
  if (j_side.vars() != n)
    throw std::invalid_argument("ideals live in different rings");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");
  const VertexSet x = block_mask(0, m);
  const VertexSet y = block_mask(m, n);
  if ((i_side.support() & ~x) || (j_side.support() & ~y))
    throw std::invalid_argument("ideal support escapes its block");

  PrimeList raw;
  for (VertexSet q : minimal_primes(i_side)) raw.push_back(q | y);
  for (VertexSet r : minimal_primes(j_side)) raw.push_back(x | r);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // Keep the antichain. The raw union can pick up one embedded prime when a
  // side ideal is its whole block's maximal ideal (x | r with r the full
  // second block, say, strictly contains every q | y).
  PrimeList primes;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
      if (i != j && (raw[j] & raw[i]) == raw[j]) dominated = true;
    if (!dominated) primes.push_back(raw[i]);
  }
  std::sort(primes.begin(), primes.end(), vertex_set_less);
  return primes;
}

}  // namespace degcx
