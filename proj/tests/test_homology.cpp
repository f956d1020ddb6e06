#include <random>

#include "doctest.h"
#include "degcx/homology.hpp"
#include "degcx/linalg.hpp"

using namespace degcx;

namespace {

// Facet labels are 1-based here, matching the I/O convention.
SimplicialComplex cx(int n, std::initializer_list<std::vector<int>> facets) {
  std::vector<VertexSet> masks;
  for (const auto& f : facets) {
    std::vector<int> zero_based;
    for (int v : f) zero_based.push_back(v - 1);
    masks.push_back(list_to_set(zero_based, n));
  }
  return SimplicialComplex::from_facets(n, std::move(masks));
}

HomologyDims dims(std::initializer_list<std::pair<const int, long long>> entries) {
  return HomologyDims(entries);
}

struct TestRng {
  std::mt19937_64 g{99};
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

SimplicialComplex random_complex(TestRng& r, int n, VertexSet allowed) {
  int roll = r.uniform(0, 7);
  if (roll == 0) return SimplicialComplex::void_complex(n);
  if (roll == 1) return SimplicialComplex::irrelevant_complex(n);
  std::vector<int> vars = set_to_list(allowed);
  std::vector<VertexSet> facets;
  for (int k = r.uniform(1, 4); k > 0; --k) {
    VertexSet f = 0;
    for (int d = r.uniform(1, 3); d > 0; --d)
      f |= VertexSet(1) << vars[r.uniform(0, static_cast<int>(vars.size()) - 1)];
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace

TEST_CASE("spheres, simplices, and the two empty complexes") {
  CHECK(reduced_homology_dims(cx(2, {{1}, {2}})) == dims({{0, 1}}));
  CHECK(reduced_homology_dims(cx(3, {{1, 2}, {2, 3}, {1, 3}})) == dims({{1, 1}}));
  // Boundary of the full simplex on 4 vertices: a 2-sphere.
  CHECK(reduced_homology_dims(cx(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})) ==
        dims({{2, 1}}));
  // And on 5 vertices: a 3-sphere (larger boundary matrices).
  CHECK(reduced_homology_dims(
            cx(5, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}})) ==
        dims({{3, 1}}));
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4, full_mask(4))).empty());
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4, 0b1)).empty());
  CHECK(reduced_homology_dims(SimplicialComplex::irrelevant_complex(4)) == dims({{-1, 1}}));
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(4)).empty());
  // Two circles: rank 2 in degree one.
  CHECK(reduced_homology_dims(
            cx(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})) ==
        dims({{0, 1}, {1, 2}}));
}

TEST_CASE("cones are invisible") {
  TestRng r;
  for (int t = 0; t < 40; ++t) {
    SimplicialComplex base = random_complex(r, 5, full_mask(5));
    if (!base.is_proper()) continue;
    std::vector<VertexSet> coned;
    for (VertexSet f : base.facets()) coned.push_back(f | (VertexSet(1) << 5));
    CHECK(reduced_homology_dims(SimplicialComplex::from_facets(6, coned)).empty());
  }
}

TEST_CASE("Euler characteristic equals the alternating homology sum") {
  TestRng r;
  for (int t = 0; t < 80; ++t) {
    SimplicialComplex c = random_complex(r, 7, full_mask(7));
    CHECK(c.reduced_euler() == euler_from_homology(reduced_homology_dims(c)));
  }
}

TEST_CASE("join homology by convolution") {
  HomologyDims s0 = dims({{0, 1}});
  CHECK(kunneth_join_dims(s0, s0) == dims({{1, 1}}));
  CHECK(kunneth_join_dims(s0, HomologyDims{}).empty());       // contractible factor
  CHECK(kunneth_join_dims(dims({{-1, 1}}), s0) == s0);        // irrelevant factor

  TestRng r;
  for (int t = 0; t < 120; ++t) {
    int side = r.uniform(2, 5);
    SimplicialComplex a = random_complex(r, 2 * side, block_mask(0, side));
    SimplicialComplex b = random_complex(r, 2 * side, block_mask(side, 2 * side));
    CHECK(kunneth_join_dims(reduced_homology_dims(a), reduced_homology_dims(b)) ==
          reduced_homology_dims(join(a, b)));
  }
}

TEST_CASE("exact rank") {
  IntMatrix zero(3, 4);
  CHECK(exact_rank(zero) == 0);
  IntMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(exact_rank(id) == 3);

  // The 64-bit route and the big-integer route must agree, also on inputs
  // whose fraction-free intermediates overflow 64 bits.
  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int rows = r.uniform(1, 8), cols = r.uniform(1, 8);
    IntMatrix m(rows, cols);
    for (auto& v : m.a) v = r.uniform(-2, 2);
    CHECK(exact_rank(m) == exact_rank_bignum(m));
  }
  for (int t = 0; t < 10; ++t) {
    IntMatrix big(7, 7);
    for (auto& v : big.a) v = (static_cast<std::int64_t>(r.g()) % 2000000000LL);
    CHECK(exact_rank(big) == exact_rank_bignum(big));
  }
}
