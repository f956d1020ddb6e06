#include "degcx/ideal.hpp"

#include <algorithm>

namespace degcx {

MonomialIdeal::MonomialIdeal(int n, std::vector<ExponentVector> gens) : n_(n) {
  if (n < 0 || n > kMaxVars)
    throw std::invalid_argument("variable count out of range");
  for (const auto& g : gens) {
    if (g.vars() != n)
      throw std::invalid_argument("generator length does not match the variable count");
    if (!g.nonnegative())
      throw std::invalid_argument("generator with a negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Keep the divisibility antichain.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

VertexSet MonomialIdeal::support() const {
  VertexSet s = 0;
  for (const auto& g : gens_) s |= g.support();
  return s;
}

std::vector<int> MonomialIdeal::max_exponents() const {
  std::vector<int> rho(n_, 0);
  for (const auto& g : gens_)
    for (int i = 0; i < n_; ++i) rho[i] = std::max(rho[i], g[i]);
  return rho;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  if (m.vars() != n_)
    throw std::invalid_argument("monomial length does not match the variable count");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("ideals live in different rings");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ideals live in different rings");
  std::vector<ExponentVector> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ideals live in different rings");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(times(g, h));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int s) {
  if (s < 0) throw std::invalid_argument("negative ideal power");
  MonomialIdeal acc = MonomialIdeal::unit(a.vars());
  for (int i = 0; i < s; ++i) acc = product(acc, a);
  return acc;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("ideals live in different rings");
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> e(a.vars(), 0);
    for (int i = 0; i < a.vars(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(ExponentVector(std::move(e)));
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

bool localized_membership(const MonomialIdeal& ideal, const ExponentVector& gamma,
                          VertexSet f) {
  const int n = ideal.vars();
  if (gamma.vars() != n)
    throw std::invalid_argument("degree length does not match the variable count");
  if (f & ~full_mask(n))
    throw std::invalid_argument("vertex set out of range");
  const VertexSet neg = gamma.negative_support();
  if (f & neg)
    throw std::invalid_argument("vertex set meets the negative support of the degree");
  const VertexSet inverted = f | neg;
  for (const auto& g : ideal.generators()) {
    bool fits = true;
    for (int i = 0; i < n && fits; ++i) {
      if (inverted & (VertexSet(1) << i)) continue;
      if (g[i] > gamma[i]) fits = false;  // gamma[i] >= 0 off the negative support
    }
    if (fits) return true;
  }
  return false;
}

MonomialIdeal restrict_to_block(const MonomialIdeal& ideal, int lo, int hi) {
  if (lo < 0 || hi > ideal.vars() || lo > hi)
    throw std::invalid_argument("bad variable range");
  if (ideal.support() & ~block_mask(lo, hi))
    throw std::invalid_argument("ideal support escapes the variable range");
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(slice(g, lo, hi));
  return MonomialIdeal(hi - lo, std::move(gens));
}

ExponentVector slice(const ExponentVector& v, int lo, int hi) {
  if (lo < 0 || hi > v.vars() || lo > hi)
    throw std::invalid_argument("bad variable range");
  return ExponentVector(std::vector<int>(v.entries().begin() + lo,
                                         v.entries().begin() + hi));
}

MonomialIdeal block_product_ideal(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("bad block split");
  std::vector<ExponentVector> gens;
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      e[j] = 1;
      gens.push_back(ExponentVector(std::move(e)));
    }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace degcx
