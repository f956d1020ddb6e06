#include "degcx/cohomology.hpp"

#include <algorithm>

#include "degcx/primes.hpp"

namespace degcx {

namespace {

// The gate of the dimension formula: the negative support must be a face of
// the degree-0 complex, i.e. no generator's support may sit inside it.
bool gate_open(const MonomialIdeal& ideal, VertexSet neg) {
  for (const auto& g : ideal.generators())
    if ((g.support() & ~neg) == 0) return false;
  return true;
}

HomologyDims shift_to_cohomology(const HomologyDims& h, int neg_size) {
  HomologyDims out;
  for (const auto& [d, dim] : h) out[d + neg_size + 1] = dim;
  return out;
}

long long convolve_at(const HomologyDims& ha, const HomologyDims& hb, int target) {
  long long total = 0;
  for (const auto& [u, du] : ha) {
    auto it = hb.find(target - u);
    if (it != hb.end()) total += du * it->second;
  }
  return total;
}

struct BlockSide {
  HomologyDims coh;    // p -> dim of the block-local cohomology
  bool proper = false; // block complex has a nonempty face
  bool active = false;
};

BlockSide block_side(const MonomialIdeal& block_ideal, const ExponentVector& alpha) {
  BlockSide side;
  side.active = true;
  const VertexSet neg = alpha.negative_support();
  SimplicialComplex c = degree_complex(block_ideal, alpha);
  side.proper = c.is_proper();
  if (gate_open(block_ideal, neg))
    side.coh = shift_to_cohomology(reduced_homology_dims(c), set_size(neg));
  return side;
}

}  // namespace

HomologyDims local_cohomology_all(const MonomialIdeal& ideal, const ExponentVector& gamma) {
  const VertexSet neg = gamma.negative_support();
  if (!gate_open(ideal, neg)) return {};
  return shift_to_cohomology(reduced_homology_dims(degree_complex(ideal, gamma)),
                             set_size(neg));
}

long long local_cohomology_dim(const MonomialIdeal& ideal, const ExponentVector& gamma,
                               int p) {
  if (p < 0) throw std::invalid_argument("cohomological degree must be nonnegative");
  return dim_at(local_cohomology_all(ideal, gamma), p);
}

long long cohomology_sum_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                             const ExponentVector& gamma, int p) {
  if (p < 0) throw std::invalid_argument("cohomological degree must be nonnegative");
  const int n = a.vars();
  if (b.vars() != n || gamma.vars() != n)
    throw std::invalid_argument("ring dimensions disagree");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");
  HomologyDims ha =
      local_cohomology_all(restrict_to_block(a, 0, m), slice(gamma, 0, m));
  HomologyDims hb =
      local_cohomology_all(restrict_to_block(b, m, n), slice(gamma, m, n));
  return convolve_at(ha, hb, p);
}

long long cohomology_product_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                 const ExponentVector& gamma, int p) {
  if (p < 0) throw std::invalid_argument("cohomological degree must be nonnegative");
  const int n = a.vars();
  if (b.vars() != n || gamma.vars() != n)
    throw std::invalid_argument("ring dimensions disagree");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");

  const VertexSet neg = gamma.negative_support();
  // A block that is negative throughout turns its join factor into the
  // irrelevant complex instead of a contractible simplex, so the union
  // collapses onto the other side's complex and the answer is that side's
  // cohomology shifted by the block size. The convolution only covers
  // degrees where each block keeps a nonnegative entry.
  if ((block_mask(0, m) & ~neg) == 0) {
    int q = p - m;
    return q < 0 ? 0
                 : local_cohomology_dim(restrict_to_block(b, m, n), slice(gamma, m, n), q);
  }
  if ((block_mask(m, n) & ~neg) == 0) {
    int q = p - (n - m);
    return q < 0 ? 0
                 : local_cohomology_dim(restrict_to_block(a, 0, m), slice(gamma, 0, m), q);
  }

  HomologyDims ha =
      local_cohomology_all(restrict_to_block(a, 0, m), slice(gamma, 0, m));
  HomologyDims hb =
      local_cohomology_all(restrict_to_block(b, m, n), slice(gamma, m, n));
  return convolve_at(ha, hb, p - 1);
}

namespace {

struct FiberSides {
  BlockSide a, b;
};

FiberSides fiber_sides(const MonomialIdeal& a, const MonomialIdeal& b, int m, int s,
                       PowerMode mode, const ExponentVector& gamma) {
  const int n = a.vars();
  if (b.vars() != n || gamma.vars() != n)
    throw std::invalid_argument("ring dimensions disagree");
  if (s < 1) throw std::invalid_argument("power must be positive");
  if (!a.is_squarefree() || !b.is_squarefree())
    throw std::invalid_argument("fiber product decomposition needs squarefree ideals");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");

  const VertexSet neg = gamma.negative_support();
  long long alpha_deg = 0, beta_deg = 0;
  for (int i = 0; i < m; ++i) alpha_deg += gamma[i];
  for (int i = m; i < n; ++i) beta_deg += gamma[i];

  auto side_power = [&](const MonomialIdeal& block_ideal, long long t) {
    return mode == PowerMode::Ordinary
               ? power(block_ideal, static_cast<int>(t))
               : symbolic_power_ideal(block_ideal, static_cast<int>(t));
  };

  FiberSides sides;
  if ((neg & block_mask(m, n)) == 0 && beta_deg < s)
    sides.a = block_side(side_power(restrict_to_block(a, 0, m), s - beta_deg),
                         slice(gamma, 0, m));
  if ((neg & block_mask(0, m)) == 0 && alpha_deg < s)
    sides.b = block_side(side_power(restrict_to_block(b, m, n), s - alpha_deg),
                         slice(gamma, m, n));
  return sides;
}

}  // namespace

bool cohomology_fiber_extra_unit(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                 int s, PowerMode mode, const ExponentVector& gamma) {
  FiberSides sides = fiber_sides(a, b, m, s, mode, gamma);
  return sides.a.proper && sides.b.proper;
}

HomologyDims cohomology_fiber_all(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                  int s, PowerMode mode, const ExponentVector& gamma) {
  const int n = a.vars();
  FiberSides sides = fiber_sides(a, b, m, s, mode, gamma);
  BlockSide& side_a = sides.a;
  BlockSide& side_b = sides.b;
  const VertexSet neg = gamma.negative_support();

  HomologyDims out;
  for (const auto& [p, d] : side_a.coh)
    if (p >= 1) out[p] += d;
  for (const auto& [p, d] : side_b.coh)
    if (p >= 1) out[p] += d;
  if (side_a.proper && side_b.proper) out[1] += 1;

  // p = 0 is nonzero (and then 1) exactly when the degree complex is
  // {empty}: no nonempty face, the empty face present, no negative entries.
  if (neg == 0 && !side_a.proper && !side_b.proper) {
    MonomialIdeal fib = sum(sum(a, b), block_product_ideal(n, m));
    MonomialIdeal fib_power =
        mode == PowerMode::Ordinary ? power(fib, s) : symbolic_power_ideal(fib, s);
    if (!localized_membership(fib_power, gamma, 0)) out[0] = 1;
  }

  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

long long cohomology_fiber_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                               int s, PowerMode mode, const ExponentVector& gamma, int p) {
  if (p < 0) throw std::invalid_argument("cohomological degree must be nonnegative");
  return dim_at(cohomology_fiber_all(a, b, m, s, mode, gamma), p);
}

CohomologyTable scan_cohomology(const MonomialIdeal& ideal,
                                std::size_t max_lattice_points) {
  CohomologyTable table;
  table.n = ideal.vars();
  table.rho = ideal.max_exponents();

  std::size_t points = 1;
  for (int r : table.rho) {
    points *= static_cast<std::size_t>(r) + 1;
    if (points > max_lattice_points) throw ScanLimitError(points);
  }

  std::vector<int> gamma(table.n, -1);
  for (;;) {
    HomologyDims dims = local_cohomology_all(ideal, ExponentVector(gamma));
    for (const auto& [p, dim] : dims) table.entries[{p, gamma}] = dim;
    int i = 0;
    while (i < table.n && gamma[i] == table.rho[i] - 1) gamma[i++] = -1;
    if (i == table.n) break;
    ++gamma[i];
  }
  return table;
}

namespace {

CohomologyExtreme extreme_of(const MonomialIdeal& ideal, std::size_t cap, bool want_reg) {
  if (ideal.is_unit())
    throw std::invalid_argument("the quotient by the unit ideal is the zero ring");
  if (ideal.is_zero()) {
    CohomologyExtreme e;
    e.zero_ideal_convention = true;
    e.value = want_reg ? 0 : ideal.vars();
    e.p = want_reg ? 0 : ideal.vars();
    e.gamma.assign(ideal.vars(), 0);
    return e;
  }
  CohomologyTable table = scan_cohomology(ideal, cap);
  CohomologyExtreme best;
  bool first = true;
  for (const auto& [key, dim] : table.entries) {
    (void)dim;
    const auto& [p, gamma] = key;
    long long g_total = 0;
    for (int v : gamma) g_total += v;
    long long candidate = want_reg ? p + g_total : p;
    if (first || (want_reg ? candidate > best.value : candidate < best.value)) {
      best.value = candidate;
      best.p = p;
      best.gamma = gamma;
      first = false;
    }
  }
  return best;
}

}  // namespace

CohomologyExtreme reg_of_quotient(const MonomialIdeal& ideal, std::size_t cap) {
  return extreme_of(ideal, cap, true);
}

CohomologyExtreme depth_of_quotient(const MonomialIdeal& ideal, std::size_t cap) {
  return extreme_of(ideal, cap, false);
}

long long reg_symbolic_fiber_formula(const std::map<int, long long>& reg_i,
                                     const std::map<int, long long>& reg_j, int s) {
  if (s < 1) throw std::invalid_argument("power must be positive");
  long long best = 2LL * s - 1;
  for (int t = 1; t <= s; ++t) {
    auto it_i = reg_i.find(t);
    auto it_j = reg_j.find(t);
    if (it_i == reg_i.end() || it_j == reg_j.end())
      throw std::invalid_argument("regularity map misses an exponent");
    best = std::max({best, it_i->second + s - t, it_j->second + s - t});
  }
  return best;
}

bool mayer_vietoris_euler_check(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                int s, const ExponentVector& gamma) {
  const int n = a.vars();
  if (b.vars() != n || gamma.vars() != n)
    throw std::invalid_argument("ring dimensions disagree");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");
  if (s < 1) throw std::invalid_argument("power must be positive");
  auto layer_join = [&](int i, int j) {
    return join(degree_complex_on(power(a, i), gamma, block_mask(0, m)),
                degree_complex_on(power(b, j), gamma, block_mask(m, n)));
  };
  // rest[i] = union over j in [i, s] of the (j, s - j + 1) joins.
  std::vector<SimplicialComplex> rest(s + 2, SimplicialComplex::void_complex(n));
  for (int i = s; i >= 1; --i) rest[i] = union_of(layer_join(i, s - i + 1), rest[i + 1]);

  for (int i = 1; i <= s - 1; ++i) {
    long long lhs = rest[i].reduced_euler();
    long long rhs = layer_join(i, s - i + 1).reduced_euler() +
                    rest[i + 1].reduced_euler() - layer_join(i, s - i).reduced_euler();
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace degcx
