#include "glat/subspace.hpp"

#include "glat/errors.hpp"

namespace glat {

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix::identity(ambient);
  return s;
}

Subspace Subspace::from_rows(int ambient, const RatMatrix& rows) {
  GLAT_CHECK(rows.rows() == 0 || rows.cols() == ambient, "subspace row length != ambient");
  Subspace s;
  s.ambient_ = ambient;
  if (rows.rows() == 0) {
    s.basis_ = RatMatrix(0, ambient);
    return s;
  }
  s.basis_ = rows.rref().mat;
  return s;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs) {
  if (vecs.empty()) return zero(ambient);
  return from_rows(ambient, RatMatrix::from_rows(vecs));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  GLAT_CHECK(static_cast<int>(v.size()) == ambient_, "vector length != ambient");
  std::vector<Rat> res = v;
  // basis_ is in RREF; one reduction sweep decides membership.
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_) continue;
    const Rat f = res[p];
    if (f == 0) continue;
    for (int j = p; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) res[j] -= f * basis_.at(i, j);
  }
  for (const auto& x : res)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  GLAT_CHECK(ambient_ == other.ambient_, "ambient mismatch");
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  GLAT_CHECK(a.ambient() == b.ambient(), "ambient mismatch");
  return Subspace::from_rows(a.ambient(), a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  GLAT_CHECK(a.ambient() == b.ambient(), "ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // (alpha, beta) with alpha*A + beta*B = 0 <=> alpha*A = -(beta*B) lies in
  // the intersection; sweep alpha over the kernel of [A; B]^T.
  const RatMatrix stacked = a.basis().vstack(b.basis());
  const RatMatrix k = stacked.transpose().kernel();  // rows: (alpha, beta)
  std::vector<std::vector<Rat>> vecs;
  for (int r = 0; r < k.rows(); ++r) {
    std::vector<Rat> v(a.ambient(), Rat(0));
    for (int i = 0; i < a.dim(); ++i) {
      if (k.at(r, i) == 0) continue;
      for (int j = 0; j < a.ambient(); ++j)
        if (a.basis().at(i, j) != 0) v[j] += k.at(r, i) * a.basis().at(i, j);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::from_vectors(a.ambient(), vecs);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw InputError("subspace_ops: ambient dimension mismatch (" + std::to_string(a.ambient()) +
                     " vs " + std::to_string(b.ambient()) + ")");
  SubspaceOps out;
  out.sum = sum(a, b);
  out.intersection = intersect(a, b);
  out.contains = a.contains(b);
  return out;
}

}  // namespace glat
