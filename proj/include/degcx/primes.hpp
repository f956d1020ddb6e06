#pragma once

#include "degcx/ideal.hpp"

namespace degcx {

// Minimal monomial primes of a squarefree ideal, each as the set of its
// variables. The list is an inclusion antichain in canonical order.
using PrimeList = std::vector<VertexSet>;

// Minimal vertex sets meeting the support of every generator. Requires a
// squarefree ideal that is neither zero nor the unit ideal.
PrimeList minimal_primes(const MonomialIdeal& ideal);

// x^gamma lies in the s-th symbolic power iff its degree on every minimal
// prime is at least s. gamma must be nonnegative.
bool symbolic_membership(const MonomialIdeal& ideal, int s, const ExponentVector& gamma);

// The intersection of the s-th powers of the minimal primes, minimalized.
MonomialIdeal symbolic_power_ideal(const MonomialIdeal& ideal, int s);

// All monomials of degree s in the variables of p, as an ideal.
MonomialIdeal prime_power_ideal(int n, VertexSet p, int s);

// Minimal primes of I + J + (products across the block split m), assembled
// from the minimal primes of the two sides: each prime of I extends by the
// whole second block and each prime of J by the whole first block.
PrimeList fiber_product_primes(const MonomialIdeal& i_side, const MonomialIdeal& j_side,
                               int m);

}  // namespace degcx
