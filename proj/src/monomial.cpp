#include "degcx/monomial.hpp"

namespace degcx {

std::vector<int> set_to_list(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

VertexSet list_to_set(const std::vector<int>& vs, int n) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    s |= VertexSet(1) << v;
  }
  return s;
}

bool vertex_set_less(VertexSet a, VertexSet b) {
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool ExponentVector::nonnegative() const {
  for (int v : e_)
    if (v < 0) return false;
  return true;
}

bool ExponentVector::is_squarefree() const {
  for (int v : e_)
    if (v != 0 && v != 1) return false;
  return true;
}

long long ExponentVector::total_degree() const {
  long long t = 0;
  for (int v : e_) t += v;
  return t;
}

VertexSet ExponentVector::support() const {
  VertexSet s = 0;
  for (int i = 0; i < vars(); ++i)
    if (e_[i] > 0) s |= VertexSet(1) << i;
  return s;
}

VertexSet ExponentVector::negative_support() const {
  VertexSet s = 0;
  for (int i = 0; i < vars(); ++i)
    if (e_[i] < 0) s |= VertexSet(1) << i;
  return s;
}

ExponentVector ExponentVector::truncated_nonnegative() const {
  std::vector<int> t(e_);
  for (int& v : t)
    if (v < 0) v = 0;
  return ExponentVector(std::move(t));
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (vars() != other.vars())
    throw std::invalid_argument("exponent vector length mismatch");
  for (int i = 0; i < vars(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("exponent vector length mismatch");
  std::vector<int> out(a.vars());
  for (int i = 0; i < a.vars(); ++i) out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

ExponentVector times(const ExponentVector& a, const ExponentVector& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("exponent vector length mismatch");
  std::vector<int> out(a.vars());
  for (int i = 0; i < a.vars(); ++i) out[i] = a[i] + b[i];
  return ExponentVector(std::move(out));
}

}  // namespace degcx
