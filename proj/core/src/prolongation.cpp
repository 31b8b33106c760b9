#include "glat/prolongation.hpp"

#include <set>
#include <sstream>

#include "glat/errors.hpp"

namespace glat {

namespace {

// The prolongation is assembled level by level. Levels l < 0 are the
// components of n; level 0 is a0; level l >= 1 is the solved space p_l.
// Elements of level l >= 0 act on n, and values of such actions are again
// level vectors, so the only primitive needed is
//   apply[l][c]: V_l -> V_{l + deg(c)},  v |-> [v, e_c]
// for every basis index c of n (negative levels use the bracket of n).
struct Tower {
  const GradedLieAlgebra* n = nullptr;
  int k = 0;
  // per level l >= 0, per n basis index c: matrix (dim V_{l+deg c}) x (dim V_l)
  std::vector<std::vector<RatMatrix>> apply;
  std::vector<int> level_dims;  // level_dims[l] = dim V_l for l >= 0

  int dim_at(int level) const {
    if (level < -k) return 0;
    if (level < 0) return n->component_dim(level);
    if (level >= static_cast<int>(level_dims.size())) return 0;
    return level_dims[level];
  }

  // [v, e_c] for v in local coordinates of V_level.
  std::vector<Rat> bracket_with_basis(int level, const std::vector<Rat>& v, int c) const {
    const int target = level + n->degree_of(c);
    std::vector<Rat> out(dim_at(target), Rat(0));
    if (dim_at(target) == 0) return out;
    if (level < 0) {
      const auto& src = n->indices_of_degree(level);
      for (std::size_t s = 0; s < src.size(); ++s) {
        if (v[s] == 0) continue;
        for (const auto& t : n->bracket_basis(src[s], c)) out[n->position_in_degree(t.target)] += v[s] * t.coeff;
      }
      return out;
    }
    return mat_vec(apply[level][c], v);
  }
};

}  // namespace

ProlongationResult tanaka_prolong(const NilpotentGradedAlgebra& nn, const Subspace& a0, int max_degree) {
  const GradedLieAlgebra& n = nn.algebra();
  const int dim = n.dim();
  if (max_degree < 1) throw InputError("max_degree must be >= 1");
  if (a0.ambient() != dim * dim) throw InputError("a0 must live in End(n) = Q^(dim^2)");

  // a0 is contained in der_0 and closed under the commutator.
  {
    const Subspace der0 = graded_derivations(nn, 0);
    if (!der0.contains(a0)) throw InputError("a0 is not a space of degree-0 derivations");
    std::vector<RatMatrix> mats;
    for (int r = 0; r < a0.dim(); ++r) mats.push_back(derivation_matrix(dim, a0.basis().row(r)));
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j) {
        const RatMatrix c = mats[i] * mats[j] - mats[j] * mats[i];
        std::vector<Rat> flat(static_cast<std::size_t>(dim) * dim);
        for (int r = 0; r < dim; ++r)
          for (int s = 0; s < dim; ++s) flat[static_cast<std::size_t>(r) * dim + s] = c.at(r, s);
        if (!a0.contains(flat)) throw InputError("a0 is not closed under the bracket");
      }
  }

  Tower tw;
  tw.n = &n;
  tw.k = n.k();

  ProlongationResult res;
  for (const auto& [d, cdim] : n.component_dims()) res.component_dims[d] = cdim;
  res.component_dims[0] = a0.dim();

  // level 0 apply tables from the a0 matrices
  tw.level_dims.push_back(a0.dim());
  {
    std::vector<RatMatrix> row;
    for (int c = 0; c < dim; ++c) {
      const int target = n.degree_of(c);
      RatMatrix m(tw.dim_at(target), a0.dim());
      for (int b = 0; b < a0.dim(); ++b) {
        const RatMatrix d0 = derivation_matrix(dim, a0.basis().row(b));
        // D e_c, as local coordinates in degree deg(c)
        const auto& tgt = n.indices_of_degree(target);
        for (std::size_t s = 0; s < tgt.size(); ++s) m.at(static_cast<int>(s), b) = d0.at(tgt[s], c);
      }
      row.push_back(std::move(m));
    }
    tw.apply.push_back(std::move(row));
  }

  const auto& neg1 = n.indices_of_degree(-1);
  const int d1 = static_cast<int>(neg1.size());

  for (int level = 1; level <= max_degree; ++level) {
    const int prev_dim = tw.dim_at(level - 1);
    const int nu = d1 * prev_dim;  // unknowns: Hom(n_{-1}, V_{level-1})

    // val[c]: matrix (dim V_{deg c + level}) x nu expressing phi(e_c)
    // linearly in the unknowns; on n_{-1} it is a coordinate selector, lower
    // degrees are defined through bracket expressions over n_{-1} x n_{d+1}.
    std::vector<RatMatrix> val(dim);
    for (int s = 0; s < d1; ++s) {
      RatMatrix m(prev_dim, nu);
      for (int b = 0; b < prev_dim; ++b) m.at(b, s * prev_dim + b) = 1;
      val[neg1[s]] = std::move(m);
    }
    for (int d = -2; d >= -n.k(); --d) {
      const auto& here = n.indices_of_degree(d);
      if (here.empty()) continue;
      const auto& up = n.indices_of_degree(d + 1);
      // rows: brackets [x_a, y_b] in local coordinates of degree d
      std::vector<std::vector<Rat>> rows;
      std::vector<std::pair<int, int>> row_src;
      for (int a : neg1)
        for (int b : up) {
          std::vector<Rat> loc(here.size(), Rat(0));
          for (const auto& t : n.bracket_basis(a, b)) loc[n.position_in_degree(t.target)] += t.coeff;
          rows.push_back(std::move(loc));
          row_src.emplace_back(a, b);
        }
      RowSolver solver(RatMatrix::from_rows(rows));
      for (std::size_t which = 0; which < here.size(); ++which) {
        std::vector<Rat> target(here.size(), Rat(0));
        target[which] = 1;
        const auto coords = solver.coordinates(target);
        GLAT_CHECK(coords.has_value(), "generation failed while extending a prolongation map");
        const int out_dim = tw.dim_at(d + level);
        RatMatrix acc(out_dim, nu);
        for (std::size_t r = 0; r < row_src.size(); ++r) {
          if ((*coords)[r] == 0) continue;
          const auto [a, b] = row_src[r];
          // phi([e_a, e_b]) = [phi(e_a), e_b] + [e_a, phi(e_b)]
          // first term: apply level (deg a + level) to columns of val[a]
          for (int col = 0; col < nu; ++col) {
            // [phi(e_a), e_b]
            {
              std::vector<Rat> va(val[a].rows());
              for (int q = 0; q < val[a].rows(); ++q) va[q] = val[a].at(q, col);
              const auto w = tw.bracket_with_basis(n.degree_of(a) + level, va, b);
              for (int q = 0; q < out_dim; ++q)
                if (w[q] != 0) acc.at(q, col) += (*coords)[r] * w[q];
            }
            // [e_a, phi(e_b)] = -[phi(e_b), e_a]
            {
              std::vector<Rat> vb(val[b].rows());
              for (int q = 0; q < val[b].rows(); ++q) vb[q] = val[b].at(q, col);
              const auto w = tw.bracket_with_basis(n.degree_of(b) + level, vb, a);
              for (int q = 0; q < out_dim; ++q)
                if (w[q] != 0) acc.at(q, col) -= (*coords)[r] * w[q];
            }
          }
        }
        val[here[which]] = std::move(acc);
      }
    }

    // Derivation identity on every basis pair.
    std::vector<std::vector<Rat>> eqs;
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b) {
        const int dtarget = n.degree_of(a) + n.degree_of(b) + level;
        const int out_dim = tw.dim_at(dtarget);
        if (out_dim == 0 && dtarget < -n.k()) continue;
        if (out_dim == 0) continue;
        RatMatrix lhs(out_dim, nu);
        for (const auto& t : n.bracket_basis_raw(a, b)) {
          const RatMatrix& vt = val[t.target];
          for (int q = 0; q < out_dim; ++q)
            for (int col = 0; col < nu; ++col)
              if (vt.at(q, col) != 0) lhs.at(q, col) += t.coeff * vt.at(q, col);
        }
        for (int col = 0; col < nu; ++col) {
          std::vector<Rat> va(val[a].rows());
          for (int q = 0; q < val[a].rows(); ++q) va[q] = val[a].at(q, col);
          const auto w1 = tw.bracket_with_basis(n.degree_of(a) + level, va, b);
          std::vector<Rat> vb(val[b].rows());
          for (int q = 0; q < val[b].rows(); ++q) vb[q] = val[b].at(q, col);
          const auto w2 = tw.bracket_with_basis(n.degree_of(b) + level, vb, a);
          for (int q = 0; q < out_dim; ++q) {
            const Rat v = lhs.at(q, col) - w1[q] + w2[q];
            lhs.at(q, col) = v;
          }
        }
        for (int q = 0; q < out_dim; ++q) {
          std::vector<Rat> row(nu);
          bool any = false;
          for (int col = 0; col < nu; ++col) {
            row[col] = lhs.at(q, col);
            any = any || row[col] != 0;
          }
          if (any) eqs.push_back(std::move(row));
        }
      }

    const RatMatrix sys = eqs.empty() ? RatMatrix(0, nu) : RatMatrix::from_rows(eqs);
    const RatMatrix ker = sys.kernel();
    const int pdim = ker.rows();
    if (pdim == 0) {
      res.terminated = true;
      break;
    }
    res.component_dims[level] = pdim;

    // apply tables for the new level
    tw.level_dims.push_back(pdim);
    std::vector<RatMatrix> row_tables;
    for (int c = 0; c < dim; ++c) {
      const int target = n.degree_of(c) + level;
      RatMatrix m(tw.dim_at(target), pdim);
      for (int b = 0; b < pdim; ++b) {
        // phi_b(e_c) = val[c] * ker_b
        const auto kb = ker.row(b);
        for (int q = 0; q < m.rows(); ++q) {
          Rat acc(0);
          for (int col = 0; col < ker.cols(); ++col)
            if (val[c].at(q, col) != 0 && kb[col] != 0) acc += val[c].at(q, col) * kb[col];
          m.at(q, b) = acc;
        }
      }
      row_tables.push_back(std::move(m));
    }
    tw.apply.push_back(std::move(row_tables));

    if (level == max_degree) res.truncated_at = max_degree;
  }
  return res;
}

ProlongationResult tanaka_prolong_full(const NilpotentGradedAlgebra& n, int max_degree) {
  if (max_degree < 1) max_degree = 2 * n.algebra().k() + 1;
  return tanaka_prolong(n, graded_derivations(n, 0), max_degree);
}

ProlongationComparison compare_with_algebra(const ProlongationResult& r, const GradedLieAlgebra& g) {
  ProlongationComparison out;
  if (!r.terminated) {
    out.pass = false;
    out.detail = "prolongation did not terminate";
    return out;
  }
  const std::map<int, int> expect = g.component_dims();
  if (r.component_dims == expect) {
    out.pass = true;
    out.detail = "component dimensions match, total " + std::to_string(r.total());
    return out;
  }
  std::ostringstream os;
  os << "dimension mismatch:";
  std::set<int> degrees;
  for (const auto& [d, x] : expect) degrees.insert(d);
  for (const auto& [d, x] : r.component_dims) degrees.insert(d);
  for (int d : degrees) {
    const auto a = r.component_dims.find(d);
    const auto b = expect.find(d);
    const int av = a == r.component_dims.end() ? 0 : a->second;
    const int bv = b == expect.end() ? 0 : b->second;
    if (av != bv) os << " degree " << d << ": " << av << " vs " << bv << ";";
  }
  out.pass = false;
  out.detail = os.str();
  return out;
}

}  // namespace glat
