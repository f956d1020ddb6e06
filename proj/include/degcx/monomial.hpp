#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace degcx {

// Variable sets are bitmasks over the (0-based) variable indices.
// Everything downstream enumerates subsets of [n], so n is capped.
inline constexpr int kMaxVars = 24;

using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet full_mask(int n) {
  return n == 0 ? 0u : (VertexSet(1) << n) - 1u;
}

inline VertexSet block_mask(int lo, int hi) {
  return full_mask(hi) & ~full_mask(lo);
}

std::vector<int> set_to_list(VertexSet s);
VertexSet list_to_set(const std::vector<int>& vs, int n);

// Canonical order on vertex sets: lexicographic on the ascending vertex
// sequence, with a proper prefix sorting first.
bool vertex_set_less(VertexSet a, VertexSet b);

// A point of Z^n. Serves both as the monomial x^g (nonnegative entries)
// and as a Z^n-grading degree (entries of either sign).
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) > kMaxVars)
      throw std::invalid_argument("exponent vector exceeds the variable cap");
  }
  static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(n, 0)); }

  int vars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  bool nonnegative() const;
  bool is_squarefree() const;  // all entries in {0, 1}
  long long total_degree() const;

  // Indices with a positive entry.
  VertexSet support() const;
  // Indices with a negative entry.
  VertexSet negative_support() const;
  // Entrywise max(entry, 0).
  ExponentVector truncated_nonnegative() const;

  bool divides(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ < b.e_;  // lexicographic
  }

 private:
  std::vector<int> e_;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector times(const ExponentVector& a, const ExponentVector& b);

}  // namespace degcx
