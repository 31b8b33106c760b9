#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glat/rational.hpp"

namespace glat {

struct RatEchelon;

/// Dense matrix over Q. Values are immutable in spirit: every operation
/// returns a fresh matrix, nothing here mutates shared state.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);  // zero-filled

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rat> row(int i) const;
  void set_row(int i, const std::vector<Rat>& v);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& o) const;
  bool is_zero() const;

  /// Stacks o below this matrix (column counts must match).
  RatMatrix vstack(const RatMatrix& o) const;

  /// Exact rank via fraction-free (Bareiss) elimination over Z after
  /// clearing row denominators.
  int rank() const;

  RatEchelon rref() const;

  /// Basis of the right null space {x : M x = 0}, rows of the result,
  /// in canonical (RREF) form. kernel dim + rank == cols.
  RatMatrix kernel() const;

  std::string str() const;  // human-readable, for diagnostics

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

struct RatEchelon {
  RatMatrix mat;            // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per nonzero row
};

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);

/// Answers membership / coordinate questions against a fixed set of rows.
class RowSolver {
public:
  explicit RowSolver(RatMatrix rows);

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Coefficients c with c * rows == v (indexing the original rows),
  /// or nullopt if v is outside the row span.
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;
  bool contains(const std::vector<Rat>& v) const;

private:
  int n_rows_ = 0;
  RatMatrix rref_;       // rref of the input rows
  RatMatrix transform_;  // rref_ == transform_ * rows
  std::vector<int> pivots_;
};

/// Rank modulo a prime p (cross-check path). nullopt when p divides some
/// denominator, i.e. the reduction does not exist.
std::optional<int> modular_rank(const RatMatrix& m, std::uint64_t p);

/// Growing row span with cheap membership tests; rows are kept
/// forward-reduced with unit pivots.
class IncrementalSpan {
public:
  explicit IncrementalSpan(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Residual of v after elimination against the current rows.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  bool contains(const std::vector<Rat>& v) const;
  /// Inserts v if independent; returns true when the span grew.
  bool insert(const std::vector<Rat>& v);

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

private:
  int ambient_;
  std::vector<std::vector<Rat>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace glat
