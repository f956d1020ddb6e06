#include "degcx/degree_complex.hpp"

#include <algorithm>

#include "degcx/primes.hpp"

namespace degcx {

namespace {

// Witness sets: per generator, the variables (off the negative support)
// where the generator's exponent exceeds gamma's. F is a face exactly when
// every generator keeps a witness outside F. An empty witness set means the
// generator divides x^gamma after inverting the negative support, so no
// face survives at all.
std::vector<VertexSet> witness_masks(const MonomialIdeal& ideal,
                                     const ExponentVector& gamma) {
  const int n = ideal.vars();
  const VertexSet neg = gamma.negative_support();
  std::vector<VertexSet> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    VertexSet w = 0;
    for (int i = 0; i < n; ++i) {
      if (neg & (VertexSet(1) << i)) continue;
      if (g[i] > gamma[i]) w |= VertexSet(1) << i;
    }
    out.push_back(w);
  }
  return out;
}

bool face_under(const std::vector<VertexSet>& witnesses, VertexSet f) {
  for (VertexSet w : witnesses)
    if ((w & ~f) == 0) return false;
  return true;
}

void validate_block_pair(const MonomialIdeal& a, const MonomialIdeal& b, int m) {
  const int n = a.vars();
  if (b.vars() != n) throw std::invalid_argument("ideals live in different rings");
  if (m < 1 || m >= n) throw std::invalid_argument("bad block split");
  if (a.support() & ~block_mask(0, m))
    throw std::invalid_argument("first ideal's support escapes its block");
  if (b.support() & ~block_mask(m, n))
    throw std::invalid_argument("second ideal's support escapes its block");
}

long long block_degree(const ExponentVector& gamma, int lo, int hi) {
  long long t = 0;
  for (int i = lo; i < hi; ++i) t += gamma[i];
  return t;
}

}  // namespace

bool is_degree_face(const MonomialIdeal& ideal, const ExponentVector& gamma, VertexSet f) {
  return !localized_membership(ideal, gamma, f);
}

SimplicialComplex degree_complex_on(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                    VertexSet allowed) {
  const int n = ideal.vars();
  if (gamma.vars() != n)
    throw std::invalid_argument("degree length does not match the variable count");
  if (allowed & ~full_mask(n)) throw std::invalid_argument("vertex set out of range");
  if (ideal.support() & ~allowed)
    throw std::invalid_argument("ideal support escapes the carrier set");

  const std::vector<VertexSet> witnesses = witness_masks(ideal, gamma);
  for (VertexSet w : witnesses)
    if (w == 0) return SimplicialComplex::void_complex(n);

  const VertexSet universe = allowed & ~gamma.negative_support();
  std::vector<VertexSet> faces;
  VertexSet f = 0;
  do {
    if (face_under(witnesses, f)) faces.push_back(f);
    f = (f - universe) & universe;
  } while (f != 0);

  // The face set is downward closed, so the facets are the faces with no
  // one-vertex extension inside the universe.
  std::vector<VertexSet> facets;
  for (VertexSet g : faces) {
    bool maximal = true;
    for (VertexSet rest = universe & ~g; rest != 0 && maximal; rest &= rest - 1)
      if (face_under(witnesses, g | (rest & -rest))) maximal = false;
    if (maximal) facets.push_back(g);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const ExponentVector& gamma) {
  return degree_complex_on(ideal, gamma, full_mask(ideal.vars()));
}

SimplicialComplex support_split(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                VertexSet t) {
  const int n = ideal.vars();
  if (ideal.support() & ~t)
    throw std::invalid_argument("carrier set misses part of the ideal support");
  SimplicialComplex inner = degree_complex_on(ideal, gamma, t);
  VertexSet outside = full_mask(n) & ~t & ~gamma.negative_support();
  return join(inner, SimplicialComplex::simplex(n, outside));
}

SimplicialComplex formula_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                              const ExponentVector& gamma) {
  return intersection_of(degree_complex(a, gamma), degree_complex(b, gamma));
}

SimplicialComplex formula_sum_disjoint(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, const ExponentVector& gamma) {
  validate_block_pair(a, b, m);
  const int n = a.vars();
  return join(degree_complex_on(a, gamma, block_mask(0, m)),
              degree_complex_on(b, gamma, block_mask(m, n)));
}

SimplicialComplex formula_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                       const ExponentVector& gamma) {
  return union_of(degree_complex(a, gamma), degree_complex(b, gamma));
}

SimplicialComplex formula_product(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                  const ExponentVector& gamma) {
  validate_block_pair(a, b, m);
  const int n = a.vars();
  const VertexSet neg = gamma.negative_support();
  const VertexSet x = block_mask(0, m) & ~neg;
  const VertexSet y = block_mask(m, n) & ~neg;
  SimplicialComplex left = join(degree_complex_on(a, gamma, block_mask(0, m)),
                                SimplicialComplex::simplex(n, y));
  SimplicialComplex right = join(SimplicialComplex::simplex(n, x),
                                 degree_complex_on(b, gamma, block_mask(m, n)));
  return union_of(left, right);
}

SimplicialComplex formula_power_of_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, int s, const ExponentVector& gamma) {
  validate_block_pair(a, b, m);
  if (s < 1) throw std::invalid_argument("power must be positive");
  const int n = a.vars();
  SimplicialComplex acc = SimplicialComplex::void_complex(n);
  for (int j = 1; j <= s; ++j) {
    SimplicialComplex piece =
        join(degree_complex_on(power(a, j), gamma, block_mask(0, m)),
             degree_complex_on(power(b, s - j + 1), gamma, block_mask(m, n)));
    acc = union_of(acc, piece);
  }
  return acc;
}

SimplicialComplex formula_symbolic_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, int s, const ExponentVector& gamma) {
  validate_block_pair(a, b, m);
  if (s < 1) throw std::invalid_argument("power must be positive");
  const int n = a.vars();
  SimplicialComplex acc = SimplicialComplex::void_complex(n);
  for (int j = 1; j <= s; ++j) {
    SimplicialComplex piece =
        join(degree_complex_on(symbolic_power_ideal(a, j), gamma, block_mask(0, m)),
             degree_complex_on(symbolic_power_ideal(b, s - j + 1), gamma,
                               block_mask(m, n)));
    acc = union_of(acc, piece);
  }
  return acc;
}

FiberProductFaces formula_fiber_product(const MonomialIdeal& a, const MonomialIdeal& b,
                                        int m, int s, PowerMode mode,
                                        const ExponentVector& gamma) {
  validate_block_pair(a, b, m);
  if (s < 1) throw std::invalid_argument("power must be positive");
  if (!a.is_squarefree() || !b.is_squarefree())
    throw std::invalid_argument("fiber product decomposition needs squarefree ideals");
  const int n = a.vars();
  const VertexSet neg = gamma.negative_support();
  const long long da = block_degree(gamma, 0, m);   // |alpha|
  const long long db = block_degree(gamma, m, n);   // |beta|

  auto side_power = [&](const MonomialIdeal& ideal, long long t) {
    return mode == PowerMode::Ordinary ? power(ideal, static_cast<int>(t))
                                       : symbolic_power_ideal(ideal, static_cast<int>(t));
  };

  std::vector<VertexSet> facets;
  // A side contributes nonempty faces only when the opposite block's degree
  // is nonnegative entrywise and its total stays below s.
  if ((neg & block_mask(m, n)) == 0 && db < s) {
    SimplicialComplex ca = degree_complex_on(side_power(a, s - db), gamma, block_mask(0, m));
    if (ca.is_proper())
      facets.insert(facets.end(), ca.facets().begin(), ca.facets().end());
  }
  if ((neg & block_mask(0, m)) == 0 && da < s) {
    SimplicialComplex cb = degree_complex_on(side_power(b, s - da), gamma, block_mask(m, n));
    if (cb.is_proper())
      facets.insert(facets.end(), cb.facets().begin(), cb.facets().end());
  }
  SimplicialComplex nonempty = SimplicialComplex::from_facets(n, std::move(facets));

  // The empty face is settled by one membership query on the assembled power.
  MonomialIdeal fib = sum(sum(a, b), block_product_ideal(n, m));
  MonomialIdeal fib_power =
      mode == PowerMode::Ordinary ? power(fib, s) : symbolic_power_ideal(fib, s);
  bool empty_face = !localized_membership(fib_power, gamma, 0);
  return {std::move(nonempty), empty_face};
}

SimplicialComplex formula_mixed_product(const MonomialIdeal& i1, const MonomialIdeal& i2,
                                        const MonomialIdeal& j1, const MonomialIdeal& j2,
                                        int m, const ExponentVector& gamma) {
  validate_block_pair(i1, j1, m);
  validate_block_pair(i2, j2, m);
  if (!i2.contains(i1) || !j2.contains(j1))
    throw std::invalid_argument("mixed product needs nested ideal pairs");
  const int n = i1.vars();
  const VertexSet neg = gamma.negative_support();
  const VertexSet x = block_mask(0, m) & ~neg;
  const VertexSet y = block_mask(m, n) & ~neg;

  SimplicialComplex u1 = join(SimplicialComplex::simplex(n, x),
                              degree_complex_on(j2, gamma, block_mask(m, n)));
  SimplicialComplex u2 = join(degree_complex_on(i1, gamma, block_mask(0, m)),
                              degree_complex_on(j1, gamma, block_mask(m, n)));
  SimplicialComplex u3 = join(degree_complex_on(i2, gamma, block_mask(0, m)),
                              SimplicialComplex::simplex(n, y));
  return union_of(u1, union_of(u2, u3));
}

}  // namespace degcx
