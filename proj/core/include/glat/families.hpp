#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/graded_algebra.hpp"

namespace glat {

/// so(n+1, n) with the |2|-grading by blocks of sizes (n, 1, n).
/// dim = 2n^2 + n, component dims (n(n-1)/2, n, n^2, n, n(n-1)/2).
/// Basis order (degree ascending): g_-2 skew units E_ij - E_ji (i<j lex),
/// g_-1 covectors w = e_i, g_0 matrix units E_ij row-major lex,
/// g_1 vectors v = e_i, g_2 skew units (i<j lex).
GradedLieAlgebra build_so_split(int n);

/// Split real form of G2 with the |3|-grading by the coefficient of the
/// short simple root; Chevalley basis built from the Cartan matrix
/// [[2,-1],[-3,2]] (extraspecial pairs get positive structure constants,
/// everything else is forced). Component dims (2,1,2,4,2,1,2).
GradedLieAlgebra build_g2_split();

/// sp(6, R) with the |2|-grading by 2x2 blocks; component dims (3,4,7,4,3).
/// Blocks couple through the classical adjoint; bases per degree are matrix
/// units (lex) resp. the sl2 basis (H, E12, E21).
GradedLieAlgebra build_sp6_split();

/// sp(2, 1), quaternionic form; same grading shape (3,4,7,4,3). Structure
/// constants come from quaternion arithmetic on the basis (1, i, j, k);
/// imaginary blocks use the basis (i, j, k).
GradedLieAlgebra build_sp21();

enum class Family { so_split, g2_split, sp6_split, sp21 };

struct FamilyInfo {
  Family family;
  int n = 0;  // parameter of the so family, unused otherwise
};

/// Recognizes the canonical names emitted by the builders
/// ("so_split_<n>", "g2_split", "sp6_split", "sp21").
std::optional<FamilyInfo> builtin_family(const std::string& name);

GradedLieAlgebra build_family(const FamilyInfo& info);

/// The diagonal Cartan subalgebra that each realization carries by
/// construction, as full coordinate vectors. For sp21 two of the three
/// elements generate a compact torus (purely imaginary eigenvalues).
std::vector<std::vector<Rat>> builtin_cartan(const GradedLieAlgebra& g);

}  // namespace glat
