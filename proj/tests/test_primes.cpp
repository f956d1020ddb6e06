#include <random>

#include "doctest.h"
#include "degcx/io.hpp"
#include "degcx/primes.hpp"
#include "oracles.hpp"

using namespace degcx;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }

// Prime labels are 1-based here, matching the I/O convention.
PrimeList primes_of(std::initializer_list<std::vector<int>> sets, int n) {
  PrimeList out;
  for (const auto& s : sets) {
    std::vector<int> zero_based;
    for (int v : s) zero_based.push_back(v - 1);
    out.push_back(list_to_set(zero_based, n));
  }
  return out;
}

struct TestRng {
  std::mt19937_64 g{777};
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

MonomialIdeal random_squarefree(TestRng& r, int n, VertexSet allowed) {
  std::vector<int> vars = set_to_list(allowed);
  int count = r.uniform(1, 3);
  std::vector<ExponentVector> gens;
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(n, 0);
    int d = r.uniform(1, 3);
    for (int j = 0; j < d; ++j) e[vars[r.uniform(0, static_cast<int>(vars.size()) - 1)]] = 1;
    gens.push_back(ExponentVector(std::move(e)));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

TEST_CASE("minimal primes of squarefree ideals") {
  CHECK(minimal_primes(ideal("n=4; x1*x2, x2*x3, x3*x4")) ==
        primes_of({{1, 3}, {2, 3}, {2, 4}}, 4));
  CHECK(minimal_primes(ideal("n=1; x1")) == primes_of({{1}}, 1));
  CHECK(minimal_primes(ideal("n=2; x1*x2")) == primes_of({{1}, {2}}, 2));

  CHECK_THROWS_AS(minimal_primes(ideal("n=2; x1^2")), std::invalid_argument);
  CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(2)), std::invalid_argument);

  TestRng r;
  for (int t = 0; t < 80; ++t) {
    int n = r.uniform(2, 7);
    MonomialIdeal i = random_squarefree(r, n, full_mask(n));
    CHECK(minimal_primes(i) == oracles::minimal_transversals_by_enumeration(i));
  }
}

TEST_CASE("symbolic membership") {
  MonomialIdeal i = ideal("n=4; x1*x2, x2*x3, x3*x4");
  CHECK(symbolic_membership(i, 2, ExponentVector({0, 2, 2, 0})));
  CHECK_FALSE(symbolic_membership(i, 2, ExponentVector({0, 1, 1, 0})));
  CHECK_THROWS_AS(symbolic_membership(i, 0, ExponentVector({0, 0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(symbolic_membership(i, 1, ExponentVector({-1, 0, 0, 0})),
                  std::invalid_argument);

  // At s = 1 symbolic membership is ordinary membership.
  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(2, 5);
    MonomialIdeal j = random_squarefree(r, n, full_mask(n));
    std::vector<int> e(n);
    for (int& v : e) v = r.uniform(0, 2);
    ExponentVector g(e);
    CHECK(symbolic_membership(j, 1, g) == j.contains(g));
  }
}

TEST_CASE("symbolic power ideals") {
  CHECK(symbolic_power_ideal(ideal("n=2; x1*x2"), 2) == ideal("n=2; x1^2*x2^2"));
  MonomialIdeal i = ideal("n=4; x1*x2, x2*x3, x3*x4");
  CHECK(symbolic_power_ideal(i, 1) == i);

  CHECK(prime_power_ideal(3, list_to_set({0, 1}, 3), 2) ==
        ideal("n=3; x1^2, x1*x2, x2^2"));

  TestRng r;
  for (int t = 0; t < 40; ++t) {
    int n = r.uniform(2, 5);
    MonomialIdeal j = random_squarefree(r, n, full_mask(n));
    int s = r.uniform(1, 3);
    MonomialIdeal symb = symbolic_power_ideal(j, s);
    CHECK(symb == oracles::symbolic_power_by_enumeration(j, s));
    // Ordinary powers sit inside symbolic ones, and exponents are nested.
    CHECK(symb.contains(power(j, s)));
    if (s > 1) CHECK(symbolic_power_ideal(j, s - 1).contains(symb));
  }
}

TEST_CASE("fiber product primes") {
  CHECK(fiber_product_primes(ideal("n=4; x1*x2"), ideal("n=4; x3*x4"), 2) ==
        primes_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4));
  CHECK(fiber_product_primes(ideal("n=2; x1"), ideal("n=2; x2"), 1) ==
        primes_of({{1, 2}}, 2));

  // A side equal to its block's maximal ideal would push the full vertex
  // set into the raw union; the result must stay an antichain.
  CHECK(fiber_product_primes(ideal("n=4; x1*x2"), ideal("n=4; x3, x4"), 2) ==
        primes_of({{1, 3, 4}, {2, 3, 4}}, 4));

  CHECK_THROWS_AS(fiber_product_primes(ideal("n=4; x1*x3"), ideal("n=4; x4"), 2),
                  std::invalid_argument);

  TestRng r;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(2, 7);
    int m = r.uniform(1, n - 1);
    MonomialIdeal a = random_squarefree(r, n, block_mask(0, m));
    MonomialIdeal b = random_squarefree(r, n, block_mask(m, n));
    MonomialIdeal fib = sum(sum(a, b), block_product_ideal(n, m));
    CHECK(fiber_product_primes(a, b, m) == minimal_primes(fib));
  }
}
