#include "degcx/complex.hpp"

#include <algorithm>

namespace degcx {

SimplicialComplex SimplicialComplex::void_complex(int n) {
  return SimplicialComplex(n, ComplexKind::Void, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int n) {
  return SimplicialComplex(n, ComplexKind::Irrelevant, {});
}

SimplicialComplex SimplicialComplex::simplex(int n, VertexSet t) {
  if (t & ~full_mask(n)) throw std::invalid_argument("vertex set out of range");
  if (t == 0) return irrelevant_complex(n);
  return SimplicialComplex(n, ComplexKind::Proper, {t});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  for (VertexSet f : facets)
    if (f & ~full_mask(n)) throw std::invalid_argument("vertex set out of range");
  if (facets.empty()) return void_complex(n);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
      if (i != j && (facets[i] & facets[j]) == facets[i]) dominated = true;
    if (!dominated) maximal.push_back(facets[i]);
  }
  if (maximal.size() == 1 && maximal[0] == 0) return irrelevant_complex(n);
  std::sort(maximal.begin(), maximal.end(), vertex_set_less);
  return SimplicialComplex(n, ComplexKind::Proper, std::move(maximal));
}

bool SimplicialComplex::is_face(VertexSet f) const {
  switch (kind_) {
    case ComplexKind::Void:
      return false;
    case ComplexKind::Irrelevant:
      return f == 0;
    case ComplexKind::Proper:
      if (f == 0) return true;
      for (VertexSet g : facets_)
        if ((f & g) == f) return true;
      return false;
  }
  return false;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  if (kind_ == ComplexKind::Void) return {};
  if (kind_ == ComplexKind::Irrelevant) return {0};
  std::vector<VertexSet> faces;
  for (VertexSet g : facets_) {
    VertexSet sub = 0;
    do {
      faces.push_back(sub);
      sub = (sub - g) & g;
    } while (sub != 0);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

int SimplicialComplex::dim() const {
  if (kind_ == ComplexKind::Void) return -2;
  if (kind_ == ComplexKind::Irrelevant) return -1;
  int d = -1;
  for (VertexSet g : facets_) d = std::max(d, set_size(g) - 1);
  return d;
}

VertexSet SimplicialComplex::vertex_support() const {
  VertexSet s = 0;
  for (VertexSet g : facets_) s |= g;
  return s;
}

long long SimplicialComplex::reduced_euler() const {
  if (kind_ == ComplexKind::Void) return 0;
  long long chi = 0;
  for (VertexSet f : all_faces()) chi += (set_size(f) % 2 == 0) ? -1 : 1;
  return chi;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("complexes live on different vertex sets");
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.vars());
  if (a.vertex_support() & b.vertex_support())
    throw std::invalid_argument("join of complexes with overlapping vertex supports");
  if (a.is_irrelevant()) return b;
  if (b.is_irrelevant()) return a;
  std::vector<VertexSet> facets;
  for (VertexSet f : a.facets())
    for (VertexSet g : b.facets()) facets.push_back(f | g);
  return SimplicialComplex::from_facets(a.vars(), std::move(facets));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("complexes live on different vertex sets");
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  std::vector<VertexSet> facets;
  auto push = [&facets](const SimplicialComplex& c) {
    if (c.is_irrelevant())
      facets.push_back(0);
    else
      facets.insert(facets.end(), c.facets().begin(), c.facets().end());
  };
  push(a);
  push(b);
  return SimplicialComplex::from_facets(a.vars(), std::move(facets));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("complexes live on different vertex sets");
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.vars());
  if (a.is_irrelevant() || b.is_irrelevant())
    return SimplicialComplex::irrelevant_complex(a.vars());
  std::vector<VertexSet> facets;
  for (VertexSet f : a.facets())
    for (VertexSet g : b.facets()) facets.push_back(f & g);
  return SimplicialComplex::from_facets(a.vars(), std::move(facets));
}

}  // namespace degcx
