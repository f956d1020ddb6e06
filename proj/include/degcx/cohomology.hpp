#pragma once

#include <cstddef>

#include "degcx/degree_complex.hpp"
#include "degcx/homology.hpp"

namespace degcx {

// Dimension of the p-th graded local cohomology of the quotient ring at the
// degree gamma: zero unless the negative support of gamma is a face of the
// degree-0 complex, and otherwise the reduced homology of the degree complex
// in degree p - |negative support| - 1.
long long local_cohomology_dim(const MonomialIdeal& ideal, const ExponentVector& gamma,
                               int p);

// All p at once (one degree-complex and one homology computation).
HomologyDims local_cohomology_all(const MonomialIdeal& ideal, const ExponentVector& gamma);

// Cohomology of a quotient by a sum across a block split, from the two
// block-local cohomologies: the convolution sum over u + v = p of the side
// dimensions. Checked against local_cohomology_dim of the assembled sum.
long long cohomology_sum_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                             const ExponentVector& gamma, int p);

// Product across a block split: the same convolution shifted to u + v = p - 1.
long long cohomology_product_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                 const ExponentVector& gamma, int p);

// Powers of the fiber product: the two side terms (each gated by the
// opposite block's degree), plus one extra dimension exactly when p = 1 and
// both side complexes have a nonempty face. p = 0 reduces to whether the
// degree complex is the irrelevant complex.
long long cohomology_fiber_dim(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                               int s, PowerMode mode, const ExponentVector& gamma, int p);

// Every p at once; the side complexes are built a single time.
HomologyDims cohomology_fiber_all(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                  int s, PowerMode mode, const ExponentVector& gamma);

// Whether the p = 1 extra-unit condition holds at gamma: both gated side
// complexes carry a nonempty face.
bool cohomology_fiber_extra_unit(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                 int s, PowerMode mode, const ExponentVector& gamma);

// Full table of nonzero graded local cohomology dimensions over the finite
// scan window gamma_i in {-1, ..., rho_i - 1} (rho_i the max exponent of the
// variable among the generators). Degrees outside the window contribute
// nothing: entries at or above rho_i make the complex a cone and more
// negative entries repeat the value at -1.
struct CohomologyTable {
  int n = 0;
  std::vector<int> rho;
  // (p, gamma) -> dimension; nonzero entries only.
  std::map<std::pair<int, std::vector<int>>, long long> entries;
};

struct ScanLimitError : std::runtime_error {
  explicit ScanLimitError(std::size_t points)
      : std::runtime_error("cohomology scan window has " + std::to_string(points) +
                           " lattice points, over the configured cap"),
        lattice_points(points) {}
  std::size_t lattice_points;
};

inline constexpr std::size_t kDefaultMaxLattice = 1u << 20;

CohomologyTable scan_cohomology(const MonomialIdeal& ideal,
                                std::size_t max_lattice_points = kDefaultMaxLattice);

// Castelnuovo-Mumford regularity max(p + |gamma|) and depth min(p) read off
// the scan table, with the witnessing entry. The zero ideal is handled by
// convention (regularity 0, depth n).
struct CohomologyExtreme {
  long long value = 0;
  int p = 0;
  std::vector<int> gamma;
  bool zero_ideal_convention = false;
};

CohomologyExtreme reg_of_quotient(const MonomialIdeal& ideal,
                                  std::size_t max_lattice_points = kDefaultMaxLattice);
CohomologyExtreme depth_of_quotient(const MonomialIdeal& ideal,
                                    std::size_t max_lattice_points = kDefaultMaxLattice);

// Regularity of the quotient by the s-th symbolic power of a fiber product,
// from the per-exponent regularities of the two sides:
// max over 1 <= t <= s of {reg_i[t] + s - t, reg_j[t] + s - t, 2s - 1}.
long long reg_symbolic_fiber_formula(const std::map<int, long long>& reg_i,
                                     const std::map<int, long long>& reg_j, int s);

// Euler-characteristic consistency of the layered union decomposition of a
// power of a sum: for each layer, chi of the union must split as
// chi(piece) + chi(rest) - chi(piece intersect rest), with the intersection
// given by the one-step-smaller join.
bool mayer_vietoris_euler_check(const MonomialIdeal& a, const MonomialIdeal& b, int m,
                                int s, const ExponentVector& gamma);

}  // namespace degcx
