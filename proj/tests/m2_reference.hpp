#pragma once

// List-based reference implementation of the degree-complex face scan, in
// the style of an interactive computer algebra session: integer lists and
// nested loops, one comparison per exponent. Deliberately independent of
// the bitmask production path; the fixture generator and the parity tests
// are built on it.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace m2ref {

using ExpList = std::vector<int>;   // one exponent vector, 0-based positions
using Face = std::vector<int>;      // sorted 0-based vertex list

inline std::vector<int> range(int maximum) {
  std::vector<int> ans;
  for (int i = 0; i < maximum; ++i) ans.push_back(i);
  return ans;
}

inline std::vector<int> negative_indices(const ExpList& expvector) {
  std::vector<int> ans;
  for (int i = 0; i < static_cast<int>(expvector.size()); ++i)
    if (expvector[i] < 0) ans.push_back(i);
  return ans;
}

inline std::vector<int> relevant_set(const Face& someset, const ExpList& expvector) {
  std::vector<int> drop = negative_indices(expvector);
  drop.insert(drop.end(), someset.begin(), someset.end());
  std::vector<int> ans;
  for (int i : range(static_cast<int>(expvector.size())))
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) ans.push_back(i);
  return ans;
}

inline bool is_face(const Face& someset, const std::vector<ExpList>& gens,
                    const ExpList& expvector) {
  for (const ExpList& g : gens) {
    bool chex = false;
    for (int i : relevant_set(someset, expvector))
      if (g[i] > expvector[i]) chex = true;
    if (!chex) return false;
  }
  return true;
}

inline std::vector<Face> subsets_of(const std::vector<int>& universe) {
  std::vector<Face> out = {{}};
  for (int v : universe) {
    std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      Face extended = out[i];
      extended.push_back(v);
      out.push_back(std::move(extended));
    }
  }
  return out;
}

// All faces of the degree complex, then the maximal ones, sorted the way the
// production emitter sorts facets (lexicographic on vertex sequences).
inline std::vector<Face> degree_complex_facets(const std::vector<ExpList>& gens,
                                               const ExpList& expvector) {
  std::vector<int> universe = relevant_set({}, expvector);
  std::vector<Face> faces;
  for (const Face& f : subsets_of(universe))
    if (is_face(f, gens, expvector)) faces.push_back(f);

  auto contains = [](const Face& big, const Face& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<Face> facets;
  for (const Face& f : faces) {
    bool maximal = true;
    for (const Face& g : faces)
      if (f != g && contains(g, f)) maximal = false;
    if (maximal) facets.push_back(f);
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

// Constructor expression over QQ[x_1..x_n]; only proper complexes (at least
// one nonempty face) are representable as a plain facet list.
inline std::string simplicial_complex_expr(const std::vector<Face>& facets) {
  std::ostringstream out;
  out << "simplicialComplex {";
  bool first = true;
  for (const Face& f : facets) {
    if (!first) out << ", ";
    first = false;
    bool inner = true;
    for (int v : f) {
      if (!inner) out << "*";
      inner = false;
      out << "x_" << (v + 1);
    }
  }
  out << "}";
  return out.str();
}

}  // namespace m2ref
