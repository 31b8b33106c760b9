#include "glat/matrix.hpp"

#include <sstream>

#include "glat/errors.hpp"

namespace glat {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  GLAT_CHECK(rows >= 0 && cols >= 0, "negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    GLAT_CHECK(static_cast<int>(rows[i].size()) == m.cols(), "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void RatMatrix::set_row(int i, const std::vector<Rat>& v) {
  GLAT_CHECK(static_cast<int>(v.size()) == cols_, "row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  GLAT_CHECK(cols_ == o.rows_, "matrix product shape mismatch");
  RatMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rat& a = at(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(l, j) == 0) continue;
        p.at(i, j) += a * o.at(l, j);
      }
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  GLAT_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  GLAT_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix diff shape mismatch");
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
  return s;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::vstack(const RatMatrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  GLAT_CHECK(cols_ == o.cols_, "vstack column mismatch");
  RatMatrix s(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) s.at(rows_ + i, j) = o.at(i, j);
  return s;
}

namespace {

// Exact division a / b for the Bareiss update; divisibility is guaranteed by
// the fraction-free invariant and asserted here.
mpz_class divexact_checked(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  GLAT_CHECK(r == 0, "Bareiss division not exact");
  return q;
}

}  // namespace

int RatMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
  for (int i = 0; i < rows_; ++i) {
    mpz_class l(1);
    for (int j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols_; ++j) {
      mpz_class s = l / at(i, j).get_den();
      a[i][j] = at(i, j).get_num() * s;
    }
  }
  int r = 0;
  mpz_class prev(1);
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows_; ++i) {
      for (int j = c + 1; j < cols_; ++j)
        a[i][j] = divexact_checked(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RatEchelon RatMatrix::rref() const {
  RatMatrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rat inv = 1 / Rat(m.at(r, c));
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix out(r, cols_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
  return RatEchelon{std::move(out), std::move(pivots)};
}

RatMatrix RatMatrix::kernel() const {
  const RatEchelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix k(static_cast<int>(free_cols.size()), cols_);
  for (int v = 0; v < k.rows(); ++v) {
    const int f = free_cols[v];
    k.at(v, f) = 1;
    for (int i = 0; i < e.mat.rows(); ++i) k.at(v, e.pivots[i]) = -e.mat.at(i, f);
  }
  return k.rref().mat;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
  GLAT_CHECK(static_cast<int>(v.size()) == m.cols(), "mat_vec shape mismatch");
  std::vector<Rat> out(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

RowSolver::RowSolver(RatMatrix rows) : n_rows_(rows.rows()) {
  const int n = rows.rows();
  const int c = rows.cols();
  // Eliminate on [rows | I]; pivots restricted to the left block.
  RatMatrix m(n, c + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < c; ++j) m.at(i, j) = rows.at(i, j);
    m.at(i, c + i) = 1;
  }
  int r = 0;
  for (int col = 0; col < c && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rat inv = 1 / Rat(m.at(r, col));
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots_.push_back(col);
    ++r;
  }
  rref_ = RatMatrix(r, c);
  transform_ = RatMatrix(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) rref_.at(i, j) = m.at(i, j);
    for (int j = 0; j < n; ++j) transform_.at(i, j) = m.at(i, c + j);
  }
}

std::optional<std::vector<Rat>> RowSolver::coordinates(const std::vector<Rat>& v) const {
  GLAT_CHECK(static_cast<int>(v.size()) == rref_.cols(), "RowSolver dimension mismatch");
  std::vector<Rat> res = v;
  std::vector<Rat> w(rref_.rows(), Rat(0));
  for (int i = 0; i < rref_.rows(); ++i) {
    const Rat f = res[pivots_[i]];
    if (f == 0) continue;
    w[i] = f;
    for (int j = 0; j < rref_.cols(); ++j)
      if (rref_.at(i, j) != 0) res[j] -= f * rref_.at(i, j);
  }
  for (const auto& x : res)
    if (x != 0) return std::nullopt;
  std::vector<Rat> coords(n_rows_, Rat(0));
  for (int i = 0; i < rref_.rows(); ++i) {
    if (w[i] == 0) continue;
    for (int j = 0; j < n_rows_; ++j)
      if (transform_.at(i, j) != 0) coords[j] += w[i] * transform_.at(i, j);
  }
  return coords;
}

bool RowSolver::contains(const std::vector<Rat>& v) const {
  GLAT_CHECK(static_cast<int>(v.size()) == rref_.cols(), "RowSolver dimension mismatch");
  std::vector<Rat> res = v;
  for (int i = 0; i < rref_.rows(); ++i) {
    const Rat f = res[pivots_[i]];
    if (f == 0) continue;
    for (int j = 0; j < rref_.cols(); ++j)
      if (rref_.at(i, j) != 0) res[j] -= f * rref_.at(i, j);
  }
  for (const auto& x : res)
    if (x != 0) return false;
  return true;
}

namespace {

// Scale to a primitive integer vector (same span); keeps the fraction-free
// reduction below from blowing up entry sizes.
void primitivize(std::vector<Rat>& v) {
  mpz_class den(1), num(0);
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_class n = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  if (num == 0) return;
  const Rat scale(den, num);
  for (auto& x : v)
    if (x != 0) {
      x *= scale;
      x.canonicalize();
    }
}

}  // namespace

std::vector<Rat> IncrementalSpan::reduce(std::vector<Rat> v) const {
  GLAT_CHECK(static_cast<int>(v.size()) == ambient_, "IncrementalSpan vector size");
  primitivize(v);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) continue;
    // fraction-free update: v <- (row[p]/g) v - (v[p]/g) row
    const auto& row = rows_[r];
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v[p].get_num().get_mpz_t(), row[p].get_num().get_mpz_t());
    const Rat a(row[p].get_num() / g);
    const Rat b(v[p].get_num() / g);
    for (int j = 0; j < ambient_; ++j) {
      if (j >= p)
        v[j] = a * v[j] - b * row[j];
      else if (v[j] != 0)
        v[j] *= a;
    }
  }
  primitivize(v);
  return v;
}

bool IncrementalSpan::contains(const std::vector<Rat>& v) const {
  const auto res = reduce(v);
  for (const auto& x : res)
    if (x != 0) return false;
  return true;
}

bool IncrementalSpan::insert(const std::vector<Rat>& v) {
  std::vector<Rat> res = reduce(v);
  int p = 0;
  while (p < ambient_ && res[p] == 0) ++p;
  if (p == ambient_) return false;
  if (res[p] < 0)
    for (auto& x : res) x = -x;
  // keep rows ordered by pivot
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(res));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

std::optional<int> modular_rank(const RatMatrix& m, std::uint64_t p) {
  const int rows = m.rows(), cols = m.cols();
  auto mod_pow = [&](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
  };
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const mpz_class num = m.at(i, j).get_num() % static_cast<unsigned long>(p);
      const mpz_class den = m.at(i, j).get_den() % static_cast<unsigned long>(p);
      std::uint64_t nu = mpz_get_ui(num.get_mpz_t());
      if (num < 0) nu = p - nu;
      const std::uint64_t de = mpz_get_ui(den.get_mpz_t());
      if (de == 0) return std::nullopt;
      a[i][j] = static_cast<std::uint64_t>((unsigned __int128)nu * mod_pow(de, p - 2) % p);
    }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = mod_pow(a[r][c], p - 2);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)a[i][c] * inv % p);
      for (int j = c; j < cols; ++j) {
        unsigned __int128 sub = (unsigned __int128)f * a[r][j] % p;
        a[i][j] = (a[i][j] + p - static_cast<std::uint64_t>(sub)) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace glat
