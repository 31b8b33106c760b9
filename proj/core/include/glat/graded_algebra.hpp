#pragma once

#include <map>
#include <string>
#include <vector>

#include "glat/matrix.hpp"
#include "glat/subspace.hpp"

namespace glat {

struct BracketTerm {
  int target = 0;
  Rat coeff;
};

/// Finite-dimensional Lie algebra over Q given by structure constants, with
/// an integer degree attached to every basis element. Immutable once built.
///
/// The sparse bracket table stores [e_i, e_j] only for i < j; lookups handle
/// antisymmetry. Terms are kept sorted by target index so serialization is
/// byte-stable.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;

  /// `table[{i,j}]` (i < j) lists the nonzero terms of [e_i, e_j].
  /// With `validated = true` the constructor runs the structural validator
  /// (antisymmetry/Jacobi/grading/generation) and throws InputError on
  /// failure; `unchecked` skips that, for deliberately broken inputs.
  static GradedLieAlgebra create(std::string name, int k, std::vector<int> degrees,
                                 std::map<std::pair<int, int>, std::vector<BracketTerm>> table);
  static GradedLieAlgebra unchecked(std::string name, int k, std::vector<int> degrees,
                                    std::map<std::pair<int, int>, std::vector<BracketTerm>> table);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(degrees_.size()); }
  int k() const { return k_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree_of(int i) const { return degrees_[i]; }
  bool validated() const { return validated_; }

  /// Basis indices of the degree-d component, ascending.
  const std::vector<int>& indices_of_degree(int d) const;
  int component_dim(int d) const { return static_cast<int>(indices_of_degree(d).size()); }
  /// degree -> dimension, only nonzero components.
  std::map<int, int> component_dims() const;
  /// Position of basis index i inside its degree component.
  int position_in_degree(int i) const { return pos_in_degree_[i]; }

  int dim_negative() const;
  const std::vector<int>& negative_indices() const { return negative_; }

  const std::vector<BracketTerm>& bracket_basis_raw(int i, int j) const;  // requires i < j
  /// [e_i, e_j] for arbitrary i, j (antisymmetry applied).
  std::vector<BracketTerm> bracket_basis(int i, int j) const;
  /// [u, v] on full coordinate vectors.
  std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const;

  /// ad(e_i) as a sparse list of (row, col, coeff): [e_i, e_col] has
  /// coefficient coeff on e_row.
  struct SparseEntry {
    int row, col;
    Rat coeff;
  };
  std::vector<SparseEntry> ad_sparse(int i) const;
  RatMatrix ad_matrix(const std::vector<Rat>& u) const;

  /// Embeds degree-local coordinates into a full coordinate vector.
  std::vector<Rat> embed(int degree, const std::vector<Rat>& local) const;
  /// Extracts the degree-d block of a full vector (must be supported there).
  std::vector<Rat> restrict_to(int degree, const std::vector<Rat>& full) const;

private:
  friend GradedLieAlgebra make_algebra(std::string, int, std::vector<int>,
                                       std::map<std::pair<int, int>, std::vector<BracketTerm>>,
                                       bool);
  std::string name_;
  int k_ = 1;
  std::vector<int> degrees_;
  std::vector<std::vector<BracketTerm>> table_;  // (i * dim + j), i < j only
  std::map<int, std::vector<int>> by_degree_;
  std::vector<int> pos_in_degree_;
  std::vector<int> negative_;
  bool validated_ = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool structural_pass = false;  // antisymmetry, Jacobi, grading, generation
  int killing_rank = 0;
  bool killing_nondegenerate = false;
};

/// Checks antisymmetry, the Jacobi identity on all basis triples, grading
/// compatibility, bracket generation of g_- by g_{-1}, and the Killing rank.
/// Failures become report entries, never exceptions.
ValidationReport validate(const GradedLieAlgebra& g);

/// B(e_i, e_j) = trace(ad e_i . ad e_j).
RatMatrix killing_form(const GradedLieAlgebra& g);

/// Graded nilpotent algebra: all degrees in [-k, -1], generated in degree -1.
class NilpotentGradedAlgebra {
public:
  /// Throws InputError unless g has only negative degrees, passes the
  /// structural validator and is generated by its degree -1 part.
  static NilpotentGradedAlgebra wrap(GradedLieAlgebra g);
  const GradedLieAlgebra& algebra() const { return alg_; }
  int dim() const { return alg_.dim(); }

private:
  GradedLieAlgebra alg_;
};

/// Restriction of g to its negative part (basis order inherited).
NilpotentGradedAlgebra negative_part(const GradedLieAlgebra& g);

/// Degree-homogeneous derivations D: n_i -> n_{i+degree} with
/// D[x,y] = [Dx,y] + [x,Dy], as a subspace of End(n) = Q^(dim^2),
/// row-major matrix coordinates.
Subspace graded_derivations(const NilpotentGradedAlgebra& n, int degree);

/// The derivation matrix encoded by one row of graded_derivations output.
RatMatrix derivation_matrix(int dim, const std::vector<Rat>& coords);

}  // namespace glat
