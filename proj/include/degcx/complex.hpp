#pragma once

#include "degcx/monomial.hpp"

namespace degcx {

// The complex with no faces at all (void) and the complex whose only face
// is the empty set (irrelevant) are genuinely different objects: the first
// has no reduced homology anywhere, the second has a one-dimensional
// reduced homology in degree -1. The kind is stored explicitly and never
// inferred from an empty facet list.
enum class ComplexKind { Void, Irrelevant, Proper };

class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex irrelevant_complex(int n);
  // The full simplex on the vertex set t (t == 0 gives the irrelevant complex).
  static SimplicialComplex simplex(int n, VertexSet t);
  // Normalizes an arbitrary list of faces: drops dominated entries, resolves
  // the kind ({} -> void, {empty set} -> irrelevant), sorts canonically.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

  int vars() const { return n_; }
  ComplexKind kind() const { return kind_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return kind_ == ComplexKind::Void; }
  bool is_irrelevant() const { return kind_ == ComplexKind::Irrelevant; }
  bool is_proper() const { return kind_ == ComplexKind::Proper; }
  // True when the complex has a face other than the empty set.
  bool has_nonempty_face() const { return kind_ == ComplexKind::Proper; }

  bool is_face(VertexSet f) const;
  // Every face, the empty one included (void complex: nothing at all).
  std::vector<VertexSet> all_faces() const;
  // max |F| - 1 over faces; -1 for the irrelevant complex, -2 for void.
  int dim() const;
  VertexSet vertex_support() const;

  // Reduced Euler characteristic: sum over all faces of (-1)^(|F|-1).
  long long reduced_euler() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(int n, ComplexKind kind, std::vector<VertexSet> facets)
      : n_(n), kind_(kind), facets_(std::move(facets)) {}

  int n_ = 0;
  ComplexKind kind_ = ComplexKind::Void;
  std::vector<VertexSet> facets_;
};

// Simplicial join. The two sides must occupy disjoint vertex sets; the void
// complex absorbs, the irrelevant complex is the identity.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Union / intersection of the underlying face sets.
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace degcx
