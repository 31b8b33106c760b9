#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glat/graded_algebra.hpp"

namespace glat {

/// Graded subalgebra b = (+) b_i of a named algebra: one subspace per degree,
/// in the local coordinates of that degree's component. Components absent
/// from the map are zero.
struct GradedSubalgebra {
  std::string algebra_name;
  std::map<int, Subspace> components;

  int dim() const {
    int t = 0;
    for (const auto& [d, s] : components) t += s.dim();
    return t;
  }
  std::map<int, int> profile() const {
    std::map<int, int> p;
    for (const auto& [d, s] : components)
      if (s.dim() > 0) p[d] = s.dim();
    return p;
  }
};

struct SubalgebraReport {
  bool closed = false;
  bool proper = false;
  int dim = 0;
  std::map<int, int> profile;
  std::string detail;  // first closure failure, when any
};

/// Closure check on all pairs of component basis vectors. Components must
/// sit inside the stated graded pieces (ambient mismatch is an InputError);
/// failures of closure are report entries.
SubalgebraReport verify_subalgebra(const GradedLieAlgebra& g, const GradedSubalgebra& b);

/// The graded subalgebra of so(n+1, n) spanned by all of g_-2 and g_-1, the
/// block-upper-triangular part of g_0 = gl(n) (first k columns preserved),
/// R^k inside g_1 and Lambda^2 R^k inside g_2. Requires 1 <= k <= n-1.
GradedSubalgebra witness_bk(const GradedLieAlgebra& so_split_n, int k);

struct NamedSubalgebra {
  std::string name;
  GradedSubalgebra sub;
};

/// Built-in witnesses: the parabolic g^0, g_- + g_0, and the family-specific
/// maximal ones (so: b^{n-1}; g2: a line stabilizer in degree <= 1; sp6: the
/// 16-dimensional block witness; sp21: none beyond the parabolic).
std::vector<NamedSubalgebra> witness_catalog(const GradedLieAlgebra& g);

/// Smallest graded subalgebra containing the given homogeneous elements
/// (full coordinates); throws InputError on non-homogeneous generators.
GradedSubalgebra bracket_closure(const GradedLieAlgebra& g, const std::vector<std::vector<Rat>>& generators);

struct GapViolation {
  std::vector<std::pair<int, std::vector<Rat>>> generators;  // (degree, local coords)
  int dim = 0;
  std::map<int, int> profile;
};

struct GapScanResult {
  int trials = 0;
  std::map<int, long> histogram;  // dims of proper closures
  std::vector<GapViolation> violations;
};

/// Seeded randomized scan: `trials` generator sets (sizes 1..4, homogeneous,
/// integer coordinates in [-3, 3]), each closed under the bracket; proper
/// closure dims are recorded, and any proper closure with dim strictly
/// inside (forbidden_lo, forbidden_hi) is a violation. Per-trial RNG is
/// derived from (seed, trial index), so the scan parallelizes without
/// changing results.
GapScanResult gap_scan(const GradedLieAlgebra& g, int forbidden_lo, int forbidden_hi, int trials,
                       std::uint64_t seed);

/// { a in g_0 : [a, w] is contained in w } for w inside the degree
/// `module_degree` component; returned in g_0 local coordinates.
Subspace subspace_stabilizer(const GradedLieAlgebra& g, int module_degree, const Subspace& w);
int subspace_stabilizer_dim(const GradedLieAlgebra& g, int module_degree, const Subspace& w);

}  // namespace glat
