#pragma once

#include <map>
#include <optional>
#include <string>

#include "glat/graded_algebra.hpp"

namespace glat {

struct ProlongationResult {
  std::map<int, int> component_dims;  // degree -> dim; negatives mirror the input
  bool terminated = false;            // a zero component was reached
  std::optional<int> truncated_at;    // set when max_degree was hit first

  int total() const {
    int t = 0;
    for (const auto& [d, n] : component_dims) t += n;
    return t;
  }
};

/// Tanaka prolongation of (n, a0) for a0 a subalgebra of der_0(n), given in
/// the matrix coordinates of graded_derivations. Maps of degree l >= 1 are
/// represented by their restriction to n_{-1} (n is generated there); the
/// derivation identity on all basis pairs is imposed as a linear system.
/// Only dimensions are materialized.
///
/// Throws InputError when a0 is not contained in der_0(n) or not closed
/// under the commutator.
ProlongationResult tanaka_prolong(const NilpotentGradedAlgebra& n, const Subspace& a0, int max_degree);

/// Convenience: prolongation of the full der_0(n), capped at 2k+1 by default.
ProlongationResult tanaka_prolong_full(const NilpotentGradedAlgebra& n, int max_degree = -1);

struct ProlongationComparison {
  bool pass = false;
  std::string detail;
};

/// Passes iff the prolongation terminated and matches g degree by degree.
ProlongationComparison compare_with_algebra(const ProlongationResult& r, const GradedLieAlgebra& g);

}  // namespace glat
