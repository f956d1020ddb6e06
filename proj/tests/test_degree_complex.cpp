#include <random>

#include "doctest.h"
#include "degcx/cohomology.hpp"
#include "degcx/degree_complex.hpp"
#include "degcx/io.hpp"
#include "degcx/primes.hpp"
#include "m2_reference.hpp"

using namespace degcx;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }

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

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

struct TestRng {
  std::mt19937_64 g{31337};
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

MonomialIdeal random_ideal(TestRng& r, int n, VertexSet allowed, int max_deg,
                           bool squarefree) {
  std::vector<int> vars = set_to_list(allowed);
  int count = r.uniform(1, 3);
  std::vector<ExponentVector> gens;
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(n, 0);
    for (int d = r.uniform(1, max_deg); d > 0; --d) {
      int i = vars[r.uniform(0, static_cast<int>(vars.size()) - 1)];
      if (squarefree)
        e[i] = 1;
      else
        e[i] += 1;
    }
    gens.push_back(ExponentVector(std::move(e)));
  }
  return MonomialIdeal(n, std::move(gens));
}

ExponentVector random_gamma(TestRng& r, int n, int lo = -2, int hi = 3) {
  std::vector<int> e(n);
  for (int& v : e) v = r.uniform(lo, hi);
  return ExponentVector(std::move(e));
}

// The running example pair used throughout the suite.
const char* kIdealI = "n=8; x1*x2, x2*x3, x3*x4";
const char* kIdealJ = "n=8; x5*x6*x7, x7*x8";
const std::vector<int> kGamma = {0, 2, 0, 0, 1, 0, 0, 0};

}  // namespace

TEST_CASE("worked example: block complexes of the power filtration") {
  MonomialIdeal i = ideal(kIdealI), j = ideal(kIdealJ);
  ExponentVector g(kGamma);
  VertexSet x = block_mask(0, 4), y = block_mask(4, 8);

  CHECK(degree_complex_on(i, g, x) == cx(8, {{2, 4}}));
  CHECK(degree_complex_on(power(i, 2), g, x) == cx(8, {{2, 4}}));
  CHECK(degree_complex_on(power(i, 3), g, x) == cx(8, {{2, 4}, {1, 3}, {1, 4}}));
  CHECK(degree_complex_on(j, g, y) == cx(8, {{5, 7}, {5, 6, 8}}));
  CHECK(degree_complex_on(power(j, 2), g, y) == cx(8, {{6, 7}, {5, 7}, {5, 6, 8}}));
  CHECK(degree_complex_on(power(j, 3), g, y) == cx(8, {{6, 7}, {5, 7}, {5, 6, 8}}));
}

TEST_CASE("worked example: the cubed sum, direct and by formula") {
  MonomialIdeal i = ideal(kIdealI), j = ideal(kIdealJ);
  ExponentVector g(kGamma);
  SimplicialComplex expected = cx(8, {{2, 4, 5, 7},
                                      {2, 4, 6, 7},
                                      {2, 4, 5, 6, 8},
                                      {1, 3, 5, 7},
                                      {1, 3, 5, 6, 8},
                                      {1, 4, 5, 7},
                                      {1, 4, 5, 6, 8}});
  CHECK(degree_complex(power(sum(i, j), 3), g) == expected);
  CHECK(formula_power_of_sum(i, j, 4, 3, g) == expected);
}

TEST_CASE("degree complexes of the trivial ideals") {
  for (int t = 0; t < 4; ++t) {
    ExponentVector g = ev({t - 2, 1, 0});
    CHECK(degree_complex(MonomialIdeal::unit(3), g).is_void());
    SimplicialComplex full = degree_complex(MonomialIdeal::zero(3), g);
    CHECK(full == SimplicialComplex::simplex(3, full_mask(3) & ~g.negative_support()));
  }
}

TEST_CASE("degree-0 complex sees only the radical") {
  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(2, 7);
    MonomialIdeal i = random_ideal(r, n, full_mask(n), 3, false);
    ExponentVector zero = ExponentVector::zero(n);
    CHECK(degree_complex(i, zero) == degree_complex(radical(i), zero));
  }
}

TEST_CASE("containment reverses face sets") {
  TestRng r;
  for (int t = 0; t < 50; ++t) {
    int n = r.uniform(2, 6);
    MonomialIdeal small = random_ideal(r, n, full_mask(n), 2, false);
    MonomialIdeal big = sum(small, random_ideal(r, n, full_mask(n), 2, false));
    ExponentVector g = random_gamma(r, n);
    SimplicialComplex inner = degree_complex(big, g);
    SimplicialComplex outer = degree_complex(small, g);
    for (VertexSet f : inner.facets()) CHECK(outer.is_face(f));
    if (inner.is_irrelevant()) CHECK_FALSE(outer.is_void());
  }
}

TEST_CASE("only the sign pattern of negative entries matters") {
  TestRng r;
  for (int t = 0; t < 50; ++t) {
    int n = r.uniform(2, 6);
    MonomialIdeal i = random_ideal(r, n, full_mask(n), 3, false);
    ExponentVector g = random_gamma(r, n, -3, 2);
    std::vector<int> clamped = g.entries();
    for (int& v : clamped)
      if (v < 0) v = -1;
    CHECK(degree_complex(i, g) == degree_complex(i, ev(std::move(clamped))));
  }
}

TEST_CASE("a saturated entry produces a cone") {
  TestRng r;
  for (int t = 0; t < 50; ++t) {
    int n = r.uniform(2, 5);
    MonomialIdeal i = random_ideal(r, n, full_mask(n), 3, false);
    std::vector<int> rho = i.max_exponents();
    int apex = r.uniform(0, n - 1);
    ExponentVector g = random_gamma(r, n, 0, 2);
    g[apex] = rho[apex] + r.uniform(0, 1);
    SimplicialComplex c = degree_complex(i, g);
    CHECK(reduced_homology_dims(c).empty());
    for (VertexSet f : c.all_faces())
      CHECK(c.is_face(f | (VertexSet(1) << apex)));
  }
}

TEST_CASE("support split") {
  MonomialIdeal i = ideal("n=2; x1");
  CHECK(support_split(i, ev({0, 0}), 0b01) == cx(2, {{2}}));
  CHECK_THROWS_AS(support_split(i, ev({0, 0}), 0b10), std::invalid_argument);

  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(2, 7);
    int m = r.uniform(1, n);
    MonomialIdeal i2 = random_ideal(r, n, block_mask(0, m), 3, false);
    ExponentVector g = random_gamma(r, n);
    VertexSet carrier = block_mask(0, m) |
                        (static_cast<VertexSet>(r.g()) & block_mask(m, n));
    CHECK(support_split(i2, g, carrier) == degree_complex(i2, g));
    CHECK(support_split(i2, g, full_mask(n)) == degree_complex(i2, g));
  }
}

TEST_CASE("sum and intersection formulas, degenerate corners") {
  MonomialIdeal i = ideal("n=3; x1*x2");
  ExponentVector g = ev({1, 0, 0});
  CHECK(formula_sum(i, MonomialIdeal::unit(3), g).is_void());
  CHECK(formula_intersection(i, i, g) == degree_complex(i, g));
}

TEST_CASE("product formula") {
  MonomialIdeal a = ideal("n=4; x1*x2"), b = ideal("n=4; x3*x4");
  CHECK(formula_product(a, b, 2, ExponentVector::zero(4)) ==
        cx(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  // A unit factor leaves only the other side's cylinder.
  ExponentVector g = ev({0, 1, 2, 0});
  CHECK(formula_product(MonomialIdeal::unit(4), b, 2, g) ==
        join(SimplicialComplex::simplex(4, block_mask(0, 2)),
             degree_complex_on(b, g, block_mask(2, 4))));
  CHECK_THROWS_AS(formula_product(ideal("n=4; x1*x3"), b, 2, ExponentVector::zero(4)),
                  std::invalid_argument);
}

TEST_CASE("power-of-sum and symbolic-sum formulas at s = 1") {
  TestRng r;
  for (int t = 0; t < 30; ++t) {
    int n = r.uniform(2, 6);
    int m = r.uniform(1, n - 1);
    MonomialIdeal a = random_ideal(r, n, block_mask(0, m), 2, true);
    MonomialIdeal b = random_ideal(r, n, block_mask(m, n), 2, true);
    ExponentVector g = random_gamma(r, n);
    SimplicialComplex base = formula_sum_disjoint(a, b, m, g);
    CHECK(formula_power_of_sum(a, b, m, 1, g) == base);
    CHECK(formula_symbolic_sum(a, b, m, 1, g) == base);
  }
  CHECK_THROWS_AS(formula_symbolic_sum(ideal("n=2; x1^2"), ideal("n=2; x2"), 1, 2,
                                       ExponentVector::zero(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_power_of_sum(ideal("n=2; x1"), ideal("n=2; x2"), 1, 0,
                                       ExponentVector::zero(2)),
                  std::invalid_argument);
}

TEST_CASE("fiber product faces: the irrelevant-versus-void corner") {
  MonomialIdeal a = ideal("n=4; x1*x2"), b = ideal("n=4; x3*x4");
  ExponentVector g = ev({1, 1, 1, 1});
  FiberProductFaces faces = formula_fiber_product(a, b, 2, 3, PowerMode::Ordinary, g);
  CHECK(faces.nonempty.is_void());
  CHECK(faces.empty_face_present);

  MonomialIdeal fib = sum(sum(a, b), block_product_ideal(4, 2));
  CHECK(degree_complex(power(fib, 3), g).is_irrelevant());
}

TEST_CASE("fiber product faces: a saturated opposite block mutes a side") {
  MonomialIdeal a = ideal("n=4; x1*x2"), b = ideal("n=4; x3*x4");
  // |beta| = 4 >= s, so no face may live in the first block.
  ExponentVector g = ev({0, 0, 2, 2});
  FiberProductFaces faces = formula_fiber_product(a, b, 2, 2, PowerMode::Ordinary, g);
  for (VertexSet f : faces.nonempty.facets()) CHECK((f & block_mask(0, 2)) == 0);
  MonomialIdeal fib = sum(sum(a, b), block_product_ideal(4, 2));
  SimplicialComplex direct = degree_complex(power(fib, 2), g);
  CHECK(faces.empty_face_present == !direct.is_void());
}

TEST_CASE("mixed product formula") {
  MonomialIdeal a = ideal("n=4; x1*x2"), b = ideal("n=4; x3*x4");
  ExponentVector g = ev({0, 1, 0, 0});
  // Equal pairs collapse the filtration onto the plain product.
  CHECK(formula_mixed_product(a, a, b, b, 2, g) == formula_product(a, b, 2, g));
  CHECK_THROWS_AS(formula_mixed_product(a, product(a, a), b, b, 2, g),
                  std::invalid_argument);
}

TEST_CASE("bitmask face scan agrees with the list-based reference") {
  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(2, 6);
    MonomialIdeal i = random_ideal(r, n, full_mask(n), 3, false);
    ExponentVector g = random_gamma(r, n);
    std::vector<m2ref::ExpList> gens;
    for (const auto& gen : i.generators()) gens.push_back(gen.entries());
    std::vector<m2ref::Face> expected = m2ref::degree_complex_facets(gens, g.entries());

    SimplicialComplex got = degree_complex(i, g);
    std::vector<m2ref::Face> got_faces;
    for (VertexSet f : got.facets()) got_faces.push_back(set_to_list(f));
    if (got.is_irrelevant()) got_faces.push_back({});
    std::sort(got_faces.begin(), got_faces.end());
    if (got.is_void())
      CHECK(expected.empty());
    else
      CHECK(got_faces == expected);
  }
}
