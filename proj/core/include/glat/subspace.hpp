#pragma once

#include <vector>

#include "glat/matrix.hpp"

namespace glat {

/// Linear subspace of Q^n in canonical form: the basis matrix is the reduced
/// row echelon form of any spanning set, so equal spans compare equal.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace from_rows(int ambient, const RatMatrix& rows);
  static Subspace from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
  int ambient_ = 0;
  RatMatrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // every row of b lies in span(a)
};

/// Sum, intersection and containment in one call; throws InputError on
/// ambient dimension mismatch.
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace glat
