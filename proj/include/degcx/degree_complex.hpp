#pragma once

#include "degcx/complex.hpp"
#include "degcx/ideal.hpp"

namespace degcx {

enum class PowerMode { Ordinary, Symbolic };

// The complex of all F avoiding the negative support of gamma for which
// x^gamma stays outside the ideal localized at F (and the negative support).
// Built by enumerating every candidate subset against the generator-witness
// predicate; this is the trusted reference all formula paths are checked
// against.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const ExponentVector& gamma);

// Same, with faces confined to the vertex set `allowed`, which must contain
// the support of the ideal. With `allowed` a variable block this yields the
// block-local complex a join decomposition wants.
SimplicialComplex degree_complex_on(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                    VertexSet allowed);

// Face predicate behind degree_complex (the negation of localized membership).
bool is_degree_face(const MonomialIdeal& ideal, const ExponentVector& gamma, VertexSet f);

// Compute the complex on a carrier set t containing the ideal's support and
// join the untouched vertices back in as a simplex. Equals degree_complex.
SimplicialComplex support_split(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                VertexSet t);

// --- Decomposition formulas. Each builds its right-hand side from smaller
// --- degree complexes only; degree_complex of the assembled ideal is the
// --- independent reference.

// Sum of two ideals in the same ring: intersection of the two complexes.
SimplicialComplex formula_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                              const ExponentVector& gamma);

// Sum across a block split: join of the block-local complexes.
SimplicialComplex formula_sum_disjoint(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, const ExponentVector& gamma);

// Intersection of two ideals: union of the two complexes.
SimplicialComplex formula_intersection(const MonomialIdeal& a, const MonomialIdeal& b,
                                       const ExponentVector& gamma);

// Product across a block split: union of two one-sided joins.
SimplicialComplex formula_product(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                  const ExponentVector& gamma);

// s-th power of a sum across a block split: union over j of the joins of the
// j-th and (s-j+1)-th power complexes.
SimplicialComplex formula_power_of_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, int s, const ExponentVector& gamma);

// Symbolic version of the above; squarefree inputs only.
SimplicialComplex formula_symbolic_sum(const MonomialIdeal& a, const MonomialIdeal& b,
                                       int m, int s, const ExponentVector& gamma);

// Powers of the fiber product I + J + (cross-block products). The formula
// determines the nonempty faces only; whether the empty face is present is
// decided by a direct membership query and reported separately, because the
// two sides genuinely differ there on some inputs.
struct FiberProductFaces {
  // Facets of the nonempty-face family; void when there are none.
  SimplicialComplex nonempty;
  bool empty_face_present;
};
FiberProductFaces formula_fiber_product(const MonomialIdeal& a, const MonomialIdeal& b,
                                        int m, int s, PowerMode mode,
                                        const ExponentVector& gamma);

// Mixed product I1*J2 + I2*J1 of nested pairs I1 within I2, J1 within J2 on
// opposite blocks: a three-way union of joins.
SimplicialComplex formula_mixed_product(const MonomialIdeal& i1, const MonomialIdeal& i2,
                                        const MonomialIdeal& j1, const MonomialIdeal& j2,
                                        int m, const ExponentVector& gamma);

}  // namespace degcx
