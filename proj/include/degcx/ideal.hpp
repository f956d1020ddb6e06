#pragma once

#include "degcx/monomial.hpp"

namespace degcx {

// A monomial ideal, stored as its unique minimal generating set: a
// divisibility antichain in lexicographic order, so equality is structural.
// The zero ideal has no generators; the unit ideal has the single
// all-zero generator.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<ExponentVector> gens);
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) {
    return MonomialIdeal(n, {ExponentVector::zero(n)});
  }

  int vars() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && gens_[0].support() == 0;
  }
  bool is_squarefree() const;

  VertexSet support() const;
  // Per-variable max exponent over the generators (all zero for the
  // zero/unit ideal). Bounds the cohomology scan window.
  std::vector<int> max_exponents() const;

  // Monomial membership: some generator divides m.
  bool contains(const ExponentVector& m) const;
  // Ideal containment: other is a subset of this.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int n_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int s);  // s = 0 gives the unit ideal
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

// x^gamma's membership in I localized at the variables F together with the
// negative support of gamma. F must avoid that negative support. Decided
// without constructing the localization: after truncating gamma's negative
// entries to zero, membership holds iff some generator m has m_i <= gamma_i
// for every variable i outside the inverted set.
bool localized_membership(const MonomialIdeal& ideal, const ExponentVector& gamma,
                          VertexSet f);

// Generators of I sliced to the variable range [lo, hi); the support of I
// must lie inside the range.
MonomialIdeal restrict_to_block(const MonomialIdeal& ideal, int lo, int hi);
ExponentVector slice(const ExponentVector& v, int lo, int hi);

// The product of the maximal ideals of the two variable blocks [0, m) and
// [m, n): all products x_i * x_j with i in the first block, j in the second.
MonomialIdeal block_product_ideal(int n, int m);

}  // namespace degcx
