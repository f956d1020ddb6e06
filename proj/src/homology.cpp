#include "degcx/homology.hpp"

#include <algorithm>

#include "degcx/linalg.hpp"

namespace degcx {

namespace {

// Boundary map from d-faces to (d-1)-faces. Faces within a bucket are in
// ascending bitmask order; the sign of dropping the j-th smallest vertex
// is (-1)^j.
IntMatrix boundary_matrix(const std::vector<VertexSet>& lower,
                          const std::vector<VertexSet>& upper) {
  IntMatrix del(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (int col = 0; col < del.cols; ++col) {
    VertexSet f = upper[col];
    int j = 0;
    for (VertexSet rest = f; rest != 0; rest &= rest - 1, ++j) {
      VertexSet sub = f & ~(rest & -rest);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      int row = static_cast<int>(it - lower.begin());
      del.at(row, col) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return del;
}

}  // namespace

HomologyDims reduced_homology_dims(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  if (c.is_irrelevant()) return {{-1, 1}};

  // A cone is contractible, so any common vertex of all facets kills the
  // reduced homology outright.
  VertexSet apex = full_mask(c.vars());
  for (VertexSet f : c.facets()) apex &= f;
  if (apex != 0) return {};

  const int top = c.dim();
  std::vector<std::vector<VertexSet>> bucket(top + 2);  // bucket[d + 1] = d-faces
  for (VertexSet f : c.all_faces()) bucket[set_size(f)].push_back(f);
  for (auto& b : bucket) std::sort(b.begin(), b.end());

  // rank of the boundary map into degree d - 1, for d = 0 .. top (+ zero above)
  std::vector<int> rank(top + 2, 0);
  for (int d = 0; d <= top; ++d)
    rank[d] = exact_rank(boundary_matrix(bucket[d], bucket[d + 1]));

  HomologyDims h;
  for (int d = -1; d <= top; ++d) {
    long long faces_d = static_cast<long long>(bucket[d + 1].size());
    long long dim = (d == -1) ? faces_d - rank[0]
                              : faces_d - rank[d] - rank[d + 1];
    if (dim != 0) h[d] = dim;
  }
  return h;
}

HomologyDims kunneth_join_dims(const HomologyDims& ha, const HomologyDims& hb) {
  HomologyDims out;
  for (const auto& [u, du] : ha)
    for (const auto& [v, dv] : hb) out[u + v + 1] += du * dv;
  return out;
}

long long euler_from_homology(const HomologyDims& h) {
  long long chi = 0;
  for (const auto& [p, d] : h) chi += (p % 2 == 0 ? 1 : -1) * d;
  return chi;
}

}  // namespace degcx
