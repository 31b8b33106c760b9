#include "glat/families.hpp"

#include <array>
#include <functional>

#include "glat/errors.hpp"

namespace glat {

namespace {

// Shared scaffolding: a family is a list of ambient matrices (one per basis
// element, degree-ascending) plus a coordinate read-off that inverts
// "linear combination of the basis" on the algebra's support.
struct MatrixFamily {
  std::string name;
  int k = 2;
  std::vector<RatMatrix> basis;
  std::vector<int> degrees;
  std::function<std::vector<Rat>(const RatMatrix&)> read_coords;
};

GradedLieAlgebra algebra_from_matrix_family(const MatrixFamily& fam) {
  const int dim = static_cast<int>(fam.basis.size());
  // Sanity: read-off must invert the basis embedding.
  for (int i = 0; i < dim; ++i) {
    const std::vector<Rat> c = fam.read_coords(fam.basis[i]);
    GLAT_CHECK(static_cast<int>(c.size()) == dim, "read_coords size");
    for (int j = 0; j < dim; ++j) GLAT_CHECK(c[j] == (i == j ? 1 : 0), "read_coords not left inverse");
  }
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const RatMatrix br = fam.basis[i] * fam.basis[j] - fam.basis[j] * fam.basis[i];
      const std::vector<Rat> c = fam.read_coords(br);
      RatMatrix recon(br.rows(), br.cols());
      std::vector<BracketTerm> terms;
      for (int t = 0; t < dim; ++t)
        if (c[t] != 0) {
          terms.push_back({t, c[t]});
          recon = recon + fam.basis[t].scaled(c[t]);
        }
      GLAT_CHECK(recon == br, "bracket left the declared span (family " + fam.name + ")");
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }
  return GradedLieAlgebra::create(fam.name, fam.k, fam.degrees, std::move(table));
}

// ---------------------------------------------------------------------------
// so(n+1, n), ambient (2n+1) x (2n+1):
//   [ A    v    B  ]      A in gl(n), v column, w row, B, C skew
//   [ w    0   -v^t]
//   [ C  -w^t  -A^t]
// Gram matrix S = [[0,0,I],[0,1,0],[I,0,0]]; blocks graded -2..2 left to
// right.
// ---------------------------------------------------------------------------

MatrixFamily so_family(int n) {
  const int m = 2 * n + 1;
  MatrixFamily fam;
  fam.name = "so_split_" + std::to_string(n);
  fam.k = 2;
  auto mat = [&]() { return RatMatrix(m, m); };

  // degree -2: C = E_ij - E_ji, i < j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix x = mat();
      x.at(n + 1 + i, j) = 1;
      x.at(n + 1 + j, i) = -1;
      fam.basis.push_back(x);
      fam.degrees.push_back(-2);
    }
  // degree -1: w = e_i
  for (int i = 0; i < n; ++i) {
    RatMatrix x = mat();
    x.at(n, i) = 1;
    x.at(n + 1 + i, n) = -1;
    fam.basis.push_back(x);
    fam.degrees.push_back(-1);
  }
  // degree 0: A = E_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatMatrix x = mat();
      x.at(i, j) = 1;
      x.at(n + 1 + j, n + 1 + i) = -1;
      fam.basis.push_back(x);
      fam.degrees.push_back(0);
    }
  // degree 1: v = e_i
  for (int i = 0; i < n; ++i) {
    RatMatrix x = mat();
    x.at(i, n) = 1;
    x.at(n, n + 1 + i) = -1;
    fam.basis.push_back(x);
    fam.degrees.push_back(1);
  }
  // degree 2: B = E_ij - E_ji, i < j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix x = mat();
      x.at(i, n + 1 + j) = 1;
      x.at(j, n + 1 + i) = -1;
      fam.basis.push_back(x);
      fam.degrees.push_back(2);
    }

  fam.read_coords = [n](const RatMatrix& x) {
    std::vector<Rat> c;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c.push_back(x.at(n + 1 + i, j));
    for (int i = 0; i < n; ++i) c.push_back(x.at(n, i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.push_back(x.at(i, j));
    for (int i = 0; i < n; ++i) c.push_back(x.at(i, n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c.push_back(x.at(i, n + 1 + j));
    return c;
  };
  return fam;
}

// ---------------------------------------------------------------------------
// sp(6, R), ambient 6x6 in 2x2 blocks X_ij:
//   X33 = -adj(X11), X32 = -adj(X21), X23 = -adj(X12),
//   X13, X22, X31 in sl(2). Block (i,j) has degree j - i.
// ---------------------------------------------------------------------------

RatMatrix adj2(const RatMatrix& a) {
  RatMatrix b(2, 2);
  b.at(0, 0) = a.at(1, 1);
  b.at(0, 1) = -a.at(0, 1);
  b.at(1, 0) = -a.at(1, 0);
  b.at(1, 1) = a.at(0, 0);
  return b;
}

void put_block(RatMatrix& m, int bi, int bj, const RatMatrix& blk) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.at(2 * bi + r, 2 * bj + c) = blk.at(r, c);
}

RatMatrix unit2(int r, int c) {
  RatMatrix m(2, 2);
  m.at(r, c) = 1;
  return m;
}

std::vector<RatMatrix> sl2_basis() {
  RatMatrix h(2, 2);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  return {h, unit2(0, 1), unit2(1, 0)};
}

MatrixFamily sp6_family() {
  MatrixFamily fam;
  fam.name = "sp6_split";
  fam.k = 2;
  const std::vector<RatMatrix> sl2 = sl2_basis();
  const std::vector<RatMatrix> gl2 = {unit2(0, 0), unit2(0, 1), unit2(1, 0), unit2(1, 1)};

  for (const auto& u : sl2) {  // degree -2: X31
    RatMatrix x(6, 6);
    put_block(x, 2, 0, u);
    fam.basis.push_back(x);
    fam.degrees.push_back(-2);
  }
  for (const auto& u : gl2) {  // degree -1: X21, X32 = -adj(X21)
    RatMatrix x(6, 6);
    put_block(x, 1, 0, u);
    put_block(x, 2, 1, adj2(u).scaled(-1));
    fam.basis.push_back(x);
    fam.degrees.push_back(-1);
  }
  for (const auto& u : gl2) {  // degree 0: X11, X33 = -adj(X11)
    RatMatrix x(6, 6);
    put_block(x, 0, 0, u);
    put_block(x, 2, 2, adj2(u).scaled(-1));
    fam.basis.push_back(x);
    fam.degrees.push_back(0);
  }
  for (const auto& u : sl2) {  // degree 0: X22
    RatMatrix x(6, 6);
    put_block(x, 1, 1, u);
    fam.basis.push_back(x);
    fam.degrees.push_back(0);
  }
  for (const auto& u : gl2) {  // degree 1: X12, X23 = -adj(X12)
    RatMatrix x(6, 6);
    put_block(x, 0, 1, u);
    put_block(x, 1, 2, adj2(u).scaled(-1));
    fam.basis.push_back(x);
    fam.degrees.push_back(1);
  }
  for (const auto& u : sl2) {  // degree 2: X13
    RatMatrix x(6, 6);
    put_block(x, 0, 2, u);
    fam.basis.push_back(x);
    fam.degrees.push_back(2);
  }

  fam.read_coords = [](const RatMatrix& x) {
    auto sl2_read = [&](int bi, int bj, std::vector<Rat>& c) {
      c.push_back(x.at(2 * bi, 2 * bj));          // H
      c.push_back(x.at(2 * bi, 2 * bj + 1));      // E12
      c.push_back(x.at(2 * bi + 1, 2 * bj));      // E21
    };
    auto gl2_read = [&](int bi, int bj, std::vector<Rat>& c) {
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) c.push_back(x.at(2 * bi + r, 2 * bj + s));
    };
    std::vector<Rat> c;
    sl2_read(2, 0, c);
    gl2_read(1, 0, c);
    gl2_read(0, 0, c);
    sl2_read(1, 1, c);
    gl2_read(0, 1, c);
    sl2_read(0, 2, c);
    return c;
  };
  return fam;
}

// ---------------------------------------------------------------------------
// sp(2, 1): the quaternionic analogue. Instead of 2x2 real blocks, entries
// are quaternions; we realize each quaternion by its left regular
// representation on (1, i, j, k), a 4x4 rational matrix, so the whole
// algebra sits inside gl(12, Q) and commutators are plain matrix algebra.
// Conjugation corresponds to block transpose.
// ---------------------------------------------------------------------------

// Left multiplication matrix of q = a + bi + cj + dk on basis (1, i, j, k).
RatMatrix quat_left(const std::array<long, 4>& q) {
  const long a = q[0], b = q[1], c = q[2], d = q[3];
  return RatMatrix::from_rows({
      {Rat(a), Rat(-b), Rat(-c), Rat(-d)},
      {Rat(b), Rat(a), Rat(-d), Rat(c)},
      {Rat(c), Rat(d), Rat(a), Rat(-b)},
      {Rat(d), Rat(-c), Rat(b), Rat(a)},
  });
}

void put_block4(RatMatrix& m, int bi, int bj, const RatMatrix& blk, bool negate = false) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.at(4 * bi + r, 4 * bj + c) = negate ? Rat(-blk.at(r, c)) : blk.at(r, c);
}

MatrixFamily sp21_family() {
  MatrixFamily fam;
  fam.name = "sp21";
  fam.k = 2;
  const std::array<std::array<long, 4>, 4> units = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  auto conj = [](const std::array<long, 4>& q) {
    return std::array<long, 4>{q[0], -q[1], -q[2], -q[3]};
  };

  auto push = [&](int deg, std::function<void(RatMatrix&)> fill) {
    RatMatrix x(12, 12);
    fill(x);
    fam.basis.push_back(x);
    fam.degrees.push_back(deg);
  };

  for (int u = 1; u < 4; ++u)  // degree -2: X31 in im(H)
    push(-2, [&](RatMatrix& x) { put_block4(x, 2, 0, quat_left(units[u])); });
  for (int u = 0; u < 4; ++u)  // degree -1: X21 = q, X32 = -conj(q)
    push(-1, [&](RatMatrix& x) {
      put_block4(x, 1, 0, quat_left(units[u]));
      put_block4(x, 2, 1, quat_left(conj(units[u])), true);
    });
  for (int u = 0; u < 4; ++u)  // degree 0: X11 = q, X33 = -conj(q)
    push(0, [&](RatMatrix& x) {
      put_block4(x, 0, 0, quat_left(units[u]));
      put_block4(x, 2, 2, quat_left(conj(units[u])), true);
    });
  for (int u = 1; u < 4; ++u)  // degree 0: X22 in im(H)
    push(0, [&](RatMatrix& x) { put_block4(x, 1, 1, quat_left(units[u])); });
  for (int u = 0; u < 4; ++u)  // degree 1: X12 = q, X23 = -conj(q)
    push(1, [&](RatMatrix& x) {
      put_block4(x, 0, 1, quat_left(units[u]));
      put_block4(x, 1, 2, quat_left(conj(units[u])), true);
    });
  for (int u = 1; u < 4; ++u)  // degree 2: X13 in im(H)
    push(2, [&](RatMatrix& x) { put_block4(x, 0, 2, quat_left(units[u])); });

  // A block equal to quat_left(a,b,c,d) has first column (a,b,c,d).
  fam.read_coords = [](const RatMatrix& x) {
    auto quat_read = [&](int bi, int bj, int from, std::vector<Rat>& c) {
      for (int r = from; r < 4; ++r) c.push_back(x.at(4 * bi + r, 4 * bj));
    };
    std::vector<Rat> c;
    quat_read(2, 0, 1, c);
    quat_read(1, 0, 0, c);
    quat_read(0, 0, 0, c);
    quat_read(1, 1, 1, c);
    quat_read(0, 1, 0, c);
    quat_read(0, 2, 1, c);
    return c;
  };
  return fam;
}

}  // namespace

GradedLieAlgebra build_so_split(int n) {
  if (n < 3) throw InputError("build_so_split requires n >= 3");
  return algebra_from_matrix_family(so_family(n));
}

GradedLieAlgebra build_sp6_split() { return algebra_from_matrix_family(sp6_family()); }

GradedLieAlgebra build_sp21() { return algebra_from_matrix_family(sp21_family()); }

std::optional<FamilyInfo> builtin_family(const std::string& name) {
  if (name == "g2_split") return FamilyInfo{Family::g2_split, 0};
  if (name == "sp6_split") return FamilyInfo{Family::sp6_split, 0};
  if (name == "sp21") return FamilyInfo{Family::sp21, 0};
  const std::string prefix = "so_split_";
  if (name.rfind(prefix, 0) == 0) {
    try {
      const int n = std::stoi(name.substr(prefix.size()));
      if (n >= 3 && prefix + std::to_string(n) == name) return FamilyInfo{Family::so_split, n};
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

GradedLieAlgebra build_family(const FamilyInfo& info) {
  switch (info.family) {
    case Family::so_split:
      return build_so_split(info.n);
    case Family::g2_split:
      return build_g2_split();
    case Family::sp6_split:
      return build_sp6_split();
    case Family::sp21:
      return build_sp21();
  }
  throw InputError("unknown family");
}

std::vector<std::vector<Rat>> builtin_cartan(const GradedLieAlgebra& g) {
  const auto info = builtin_family(g.name());
  if (!info) throw InputError("'" + g.name() + "' is not a built-in family");
  const auto& deg0 = g.indices_of_degree(0);
  std::vector<int> picks;
  switch (info->family) {
    case Family::so_split:
      for (int i = 0; i < info->n; ++i) picks.push_back(i * info->n + i);  // A = E_ii
      break;
    case Family::g2_split:
      picks = {1, 2};  // h_1, h_2 (degree-0 order: e_{-a2}, h1, h2, e_{a2})
      break;
    case Family::sp6_split:
      picks = {0, 3, 4};  // X11 = E11, X11 = E22, X22 = H
      break;
    case Family::sp21:
      picks = {0, 1, 4};  // X11 = 1 (grading element), X11 = i, X22 = i
      break;
  }
  std::vector<std::vector<Rat>> out;
  for (int p : picks) {
    std::vector<Rat> v(g.dim(), Rat(0));
    v[deg0[p]] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace glat
