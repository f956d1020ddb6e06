#pragma once

#include <map>

#include "degcx/complex.hpp"

namespace degcx {

// Reduced homology dimensions over a field of characteristic zero, as a
// sparse map p -> dim (only nonzero entries are stored). Degrees run from
// -1 (the empty face) up to the dimension of the complex.
using HomologyDims = std::map<int, long long>;

inline long long dim_at(const HomologyDims& h, int p) {
  auto it = h.find(p);
  return it == h.end() ? 0 : it->second;
}

// Exact dimensions from the ranks of the reduced simplicial boundary maps,
// with the augmentation to the empty face as the bottom differential.
HomologyDims reduced_homology_dims(const SimplicialComplex& c);

// Dimensions of the reduced homology of a join from the dimensions of the
// factors: out[p] = sum over u + v = p - 1 of hA[u] * hB[v]. The index
// offset is the classical one for joins; it is validated against
// reduced_homology_dims of an actual join by the test suite and the
// verification harness.
HomologyDims kunneth_join_dims(const HomologyDims& ha, const HomologyDims& hb);

// Alternating sum over the stored dimensions; equals the reduced Euler
// characteristic of the complex.
long long euler_from_homology(const HomologyDims& h);

}  // namespace degcx
