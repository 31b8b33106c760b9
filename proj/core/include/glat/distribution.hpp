#pragma once

#include <array>
#include <string>
#include <vector>

#include "glat/graded_algebra.hpp"
#include "glat/polyvec.hpp"

namespace glat {

struct GrowthVector {
  std::vector<int> dims;           // pointwise span dims, level by level
  bool bracket_generating = false; // reached the full ambient dimension
  bool capped = false;             // depth cap hit while still growing
};

/// Span dimensions at `point` of the given fields and their iterated
/// brackets with the original fields, level by level, until the span stops
/// growing or reaches full dimension; `capped` reports a premature stop.
GrowthVector growth_vector_at(const std::vector<PolyVectorField>& fields,
                              const std::vector<Rat>& point, int depth_cap = 16);

/// Pointwise symbol algebra: the graded nilpotent algebra on the adapted
/// frame quotients. Requires the fields to be bracket generating at the
/// point; otherwise an InputError carrying the stalled growth vector is
/// thrown.
struct SymbolAlgebra {
  NilpotentGradedAlgebra algebra;
  RatMatrix adapted_frame;  // rows: values of the adapted bracket words
  std::vector<int> levels;  // filtration level per adapted basis vector
  GrowthVector growth;
};

SymbolAlgebra symbol_at(const std::vector<PolyVectorField>& fields, const std::vector<Rat>& point,
                        int depth_cap = 16);

/// Left-invariant frame of the degree -1 part of n on the group chart in
/// exponential coordinates of the first kind: L_X(p) = sum_j c_j (ad p)^j X
/// with z/(1 - e^-z) coefficients, truncated at the nilpotency step.
std::vector<PolyVectorField> model_fields(const NilpotentGradedAlgebra& n);

enum class GenericityFamily { so_n, g2, rank4 };

struct GenericityReport {
  bool pass = false;
  std::vector<CheckResult> checks;
};

/// Family-specific structural checks on a symbol algebra: so_n: the bracket
/// maps Lambda^2 of the rank component isomorphically onto the second layer;
/// g2: dims (2,1,2) with both layer maps isomorphisms; rank4: dims (4,3)
/// with a 7-dimensional algebra of degree-0 derivations.
GenericityReport genericity_test(const SymbolAlgebra& s, GenericityFamily family);

enum class Rank4Type { elliptic, hyperbolic, non_generic };

struct Rank4Classification {
  Rank4Type type = Rank4Type::non_generic;
  std::string detail;
  RatMatrix invariant_form;          // 4x4 symmetric representative when found
  std::array<int, 3> signature{0, 0, 0};  // (positive, negative, zero)
};

/// Classifies a (4,3) symbol by the conformal class of quadratic forms on
/// the rank component invariant under its degree-0 derivations: definite ->
/// elliptic, split (2,2) -> hyperbolic, anything else -> non_generic.
Rank4Classification classify_rank4(const SymbolAlgebra& s);

/// Exact signature (n_+, n_-, n_0) of a rational symmetric matrix via
/// congruence diagonalization.
std::array<int, 3> symmetric_signature(const RatMatrix& m);

const char* rank4_type_name(Rank4Type t);

}  // namespace glat
