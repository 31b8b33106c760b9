#include "glat/distribution.hpp"

#include <algorithm>
#include <sstream>

#include "glat/errors.hpp"

namespace glat {

namespace {

struct Word {
  PolyVectorField field;
  int level = 1;
};

struct FlagData {
  GrowthVector growth;
  std::vector<Word> adapted;        // words whose values extend the span
  std::vector<std::vector<Rat>> adapted_values;
};

FlagData derived_flag(const std::vector<PolyVectorField>& fields, const std::vector<Rat>& point,
                      int depth_cap) {
  if (fields.empty()) throw InputError("no fields given");
  const int m = fields[0].vars;
  for (const auto& f : fields)
    if (f.vars != m) throw InputError("fields disagree on the variable count");
  if (static_cast<int>(point.size()) != m) throw InputError("point dimension mismatch");

  FlagData out;
  IncrementalSpan span(m);
  std::vector<Word> level_words;
  for (const auto& f : fields) level_words.push_back({f, 1});

  int level = 1;
  for (;;) {
    for (const auto& w : level_words) {
      const auto v = evaluate_field(w.field, point);
      if (span.insert(v)) {
        out.adapted.push_back(w);
        out.adapted_values.push_back(v);
      }
    }
    out.growth.dims.push_back(span.dim());
    if (span.dim() == m) {
      out.growth.bracket_generating = true;
      break;
    }
    const int so_far = out.growth.dims.size() >= 2
                           ? out.growth.dims[out.growth.dims.size() - 2]
                           : 0;
    if (span.dim() == so_far) {  // pointwise span stabilized short of m
      out.growth.dims.pop_back();
      break;
    }
    if (level == depth_cap) {
      out.growth.capped = true;
      break;
    }
    std::vector<Word> next;
    for (const auto& w : level_words)
      for (const auto& f : fields) {
        PolyVectorField br = field_bracket(f, w.field);
        if (!br.is_zero()) next.push_back({std::move(br), level + 1});
      }
    level_words = std::move(next);
    ++level;
    if (level_words.empty()) break;
  }
  return out;
}

}  // namespace

GrowthVector growth_vector_at(const std::vector<PolyVectorField>& fields,
                              const std::vector<Rat>& point, int depth_cap) {
  return derived_flag(fields, point, depth_cap).growth;
}

SymbolAlgebra symbol_at(const std::vector<PolyVectorField>& fields, const std::vector<Rat>& point,
                        int depth_cap) {
  FlagData flag = derived_flag(fields, point, depth_cap);
  if (!flag.growth.bracket_generating) {
    std::ostringstream os;
    os << "fields are not bracket generating at the point; growth vector (";
    for (std::size_t i = 0; i < flag.growth.dims.size(); ++i)
      os << (i ? "," : "") << flag.growth.dims[i];
    os << ")" << (flag.growth.capped ? " hit the depth cap" : " stalled");
    throw InputError(os.str());
  }
  const int m = fields[0].vars;

  RatMatrix frame = RatMatrix::from_rows(flag.adapted_values);
  RowSolver solver(frame);

  std::vector<int> levels;
  for (const auto& w : flag.adapted) levels.push_back(w.level);

  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const PolyVectorField br = field_bracket(flag.adapted[i].field, flag.adapted[j].field);
      const auto coords = solver.coordinates(evaluate_field(br, point));
      GLAT_CHECK(coords.has_value(), "adapted frame does not span");
      const int lt = levels[i] + levels[j];
      std::vector<BracketTerm> terms;
      for (int t = 0; t < m; ++t) {
        if ((*coords)[t] == 0) continue;
        if (levels[t] > lt)
          throw InputError("filtration violated at the point: bracket of levels " +
                           std::to_string(levels[i]) + "," + std::to_string(levels[j]) +
                           " meets level " + std::to_string(levels[t]));
        if (levels[t] == lt) terms.push_back({t, (*coords)[t]});
      }
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }

  std::vector<int> degrees;
  for (int l : levels) degrees.push_back(-l);
  const int depth = *std::max_element(levels.begin(), levels.end());
  SymbolAlgebra out{
      NilpotentGradedAlgebra::wrap(
          GradedLieAlgebra::create("symbol", depth, std::move(degrees), std::move(table))),
      std::move(frame), std::move(levels), std::move(flag.growth)};
  return out;
}

std::vector<PolyVectorField> model_fields(const NilpotentGradedAlgebra& nn) {
  const GradedLieAlgebra& n = nn.algebra();
  const int m = n.dim();
  const int k = n.k();
  // z / (1 - e^{-z}) = 1 + z/2 + z^2/12 - z^4/720 + z^6/30240 - ...
  const std::vector<Rat> coeff = {Rat(1),      rat_of(1, 2),  rat_of(1, 12), Rat(0),
                                  rat_of(-1, 720), Rat(0),    rat_of(1, 30240)};
  GLAT_CHECK(k - 1 < static_cast<int>(coeff.size()), "nilpotency step too deep for the BCH table");

  std::vector<PolyVectorField> out;
  for (int x : n.indices_of_degree(-1)) {
    // v_0 = X; v_{j+1} = [p, v_j] with p = sum_i x_i e_i
    std::vector<std::vector<Polynomial>> pow;
    std::vector<Polynomial> v0(m, Polynomial(m));
    v0[x] = Polynomial::constant(m, Rat(1));
    pow.push_back(v0);
    for (int j = 1; j <= k - 1; ++j) {
      std::vector<Polynomial> vj(m, Polynomial(m));
      for (int i = 0; i < m; ++i) {
        for (int s = 0; s < m; ++s) {
          if (pow[j - 1][s].is_zero() || i == s) continue;
          for (const auto& t : n.bracket_basis(i, s))
            vj[t.target] = vj[t.target] + (Polynomial::variable(m, i) * pow[j - 1][s]).scaled(t.coeff);
        }
      }
      pow.push_back(std::move(vj));
    }
    PolyVectorField f;
    f.vars = m;
    f.components.assign(m, Polynomial(m));
    for (int j = 0; j <= k - 1; ++j) {
      if (coeff[j] == 0) continue;
      for (int c = 0; c < m; ++c) f.components[c] = f.components[c] + pow[j][c].scaled(coeff[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Bracket map Lambda^2(level a) -> (level a+b) ... helper for the genericity
// checks: the matrix of the induced map on the stated components.
RatMatrix layer_pairing(const GradedLieAlgebra& g, int d1, int d2) {
  const auto& s1 = g.indices_of_degree(d1);
  const auto& s2 = g.indices_of_degree(d2);
  const auto& tgt = g.indices_of_degree(d1 + d2);
  if (d1 == d2) {
    RatMatrix m(static_cast<int>(tgt.size()),
                static_cast<int>(s1.size() * (s1.size() - 1) / 2));
    int col = 0;
    for (std::size_t a = 0; a < s1.size(); ++a)
      for (std::size_t b = a + 1; b < s1.size(); ++b, ++col)
        for (const auto& t : g.bracket_basis(s1[a], s1[b]))
          m.at(g.position_in_degree(t.target), col) += t.coeff;
    return m;
  }
  RatMatrix m(static_cast<int>(tgt.size()), static_cast<int>(s1.size() * s2.size()));
  int col = 0;
  for (std::size_t a = 0; a < s1.size(); ++a)
    for (std::size_t b = 0; b < s2.size(); ++b, ++col)
      for (const auto& t : g.bracket_basis(s1[a], s2[b]))
        m.at(g.position_in_degree(t.target), col) += t.coeff;
  return m;
}

void add_check(GenericityReport& rep, const std::string& name, bool pass, const std::string& detail) {
  rep.checks.push_back({name, pass, detail});
}

}  // namespace

GenericityReport genericity_test(const SymbolAlgebra& s, GenericityFamily family) {
  const GradedLieAlgebra& g = s.algebra.algebra();
  GenericityReport rep;
  const auto dims = g.component_dims();
  auto dim_of = [&](int d) {
    const auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  };
  switch (family) {
    case GenericityFamily::so_n: {
      const int r = dim_of(-1);
      const bool depth_ok = g.k() == 2 && dim_of(-2) == r * (r - 1) / 2;
      add_check(rep, "layer_dims", depth_ok,
                "expects (n, n(n-1)/2), got (" + std::to_string(r) + ", " + std::to_string(dim_of(-2)) + ")");
      const RatMatrix wedge = layer_pairing(g, -1, -1);
      add_check(rep, "wedge_iso", depth_ok && wedge.rank() == dim_of(-2),
                "Lambda^2 g_-1 -> g_-2 rank " + std::to_string(wedge.rank()));
      break;
    }
    case GenericityFamily::g2: {
      const bool dims_ok = g.k() == 3 && dim_of(-1) == 2 && dim_of(-2) == 1 && dim_of(-3) == 2;
      add_check(rep, "layer_dims", dims_ok, "expects (2,1,2)");
      const RatMatrix wedge = layer_pairing(g, -1, -1);
      add_check(rep, "wedge_iso", dims_ok && wedge.rank() == 1,
                "Lambda^2 g_-1 -> g_-2 rank " + std::to_string(wedge.rank()));
      const RatMatrix next = layer_pairing(g, -2, -1);
      add_check(rep, "levi_iso", dims_ok && next.rank() == 2,
                "g_-2 x g_-1 -> g_-3 rank " + std::to_string(next.rank()));
      break;
    }
    case GenericityFamily::rank4: {
      const bool dims_ok = g.k() == 2 && dim_of(-1) == 4 && dim_of(-2) == 3;
      add_check(rep, "layer_dims", dims_ok, "expects (4,3)");
      const int der0 = dims_ok ? graded_derivations(s.algebra, 0).dim() : -1;
      add_check(rep, "der0_dim_7", der0 == 7, "dim der_0 = " + std::to_string(der0));
      break;
    }
  }
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

std::array<int, 3> symmetric_signature(const RatMatrix& m) {
  GLAT_CHECK(m.rows() == m.cols(), "signature needs a square matrix");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) GLAT_CHECK(m.at(i, j) == m.at(j, i), "matrix not symmetric");
  RatMatrix a = m;
  std::array<int, 3> sig{0, 0, 0};
  int cur = 0;
  while (cur < n) {
    int pivot = -1;
    for (int i = cur; i < n; ++i)
      if (a.at(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // all remaining diagonal entries vanish; create one from an
      // off-diagonal entry (rows i and j with a_ij != 0: add j to i)
      int oi = -1, oj = -1;
      for (int i = cur; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a.at(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        sig[2] += n - cur;
        break;
      }
      for (int c = 0; c < n; ++c) a.at(oi, c) += a.at(oj, c);
      for (int r = 0; r < n; ++r) a.at(r, oi) += a.at(r, oj);
      continue;
    }
    if (pivot != cur) {
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(cur, c));
      for (int r = 0; r < n; ++r) std::swap(a.at(r, pivot), a.at(r, cur));
    }
    const Rat d = a.at(cur, cur);
    if (d > 0)
      ++sig[0];
    else
      ++sig[1];
    for (int i = cur + 1; i < n; ++i) {
      if (a.at(i, cur) == 0) continue;
      const Rat f = a.at(i, cur) / d;
      for (int c = 0; c < n; ++c) a.at(i, c) -= f * a.at(cur, c);
      for (int r = 0; r < n; ++r) a.at(r, i) -= f * a.at(r, cur);
    }
    ++cur;
  }
  return sig;
}

Rank4Classification classify_rank4(const SymbolAlgebra& s) {
  const GradedLieAlgebra& g = s.algebra.algebra();
  if (g.k() != 2 || g.component_dim(-1) != 4 || g.component_dim(-2) != 3)
    throw InputError("classify_rank4 expects layer dims (4, 3)");

  Rank4Classification out;
  const Subspace der0 = graded_derivations(s.algebra, 0);
  if (der0.dim() != 7) {
    out.detail = "dim der_0 = " + std::to_string(der0.dim()) + ", expected 7";
    return out;
  }

  // Restrictions of the derivations to the rank component, in local
  // coordinates of degree -1.
  const auto& neg1 = g.indices_of_degree(-1);
  auto restrict_to_rank = [&](const std::vector<Rat>& coords) {
    const RatMatrix full = derivation_matrix(g.dim(), coords);
    RatMatrix r(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.at(i, j) = full.at(neg1[i], neg1[j]);
    return r;
  };
  std::vector<RatMatrix> action;
  for (int r = 0; r < der0.dim(); ++r) action.push_back(restrict_to_rank(der0.basis().row(r)));

  // Derived subalgebra acts with lambda = 0; solve strict invariance there.
  std::vector<RatMatrix> derived;
  {
    IncrementalSpan span(16);
    for (std::size_t i = 0; i < action.size(); ++i)
      for (std::size_t j = i + 1; j < action.size(); ++j) {
        const RatMatrix c = action[i] * action[j] - action[j] * action[i];
        std::vector<Rat> flat(16);
        for (int r = 0; r < 4; ++r)
          for (int cc = 0; cc < 4; ++cc) flat[r * 4 + cc] = c.at(r, cc);
        if (span.insert(flat)) derived.push_back(c);
      }
  }

  // Symmetric 4x4 unknowns q (10 coordinates, (i<=j) upper triangle):
  // D^T q + q D = 0 for D in the derived algebra.
  auto q_of = [&](const std::vector<Rat>& v) {
    RatMatrix q(4, 4);
    int idx = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j, ++idx) {
        q.at(i, j) = v[idx];
        q.at(j, i) = v[idx];
      }
    return q;
  };
  // System rows by evaluation on the 10 symmetric unit matrices.
  std::vector<std::vector<Rat>> rows;
  for (const RatMatrix& d : derived) {
    std::vector<RatMatrix> images;
    for (int u = 0; u < 10; ++u) {
      std::vector<Rat> unit(10, Rat(0));
      unit[u] = 1;
      const RatMatrix q = q_of(unit);
      images.push_back(d.transpose() * q + q * d);
    }
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) {
        std::vector<Rat> eq(10);
        bool any = false;
        for (int u = 0; u < 10; ++u) {
          eq[u] = images[u].at(r, c);
          any = any || eq[u] != 0;
        }
        if (any) rows.push_back(std::move(eq));
      }
  }
  const RatMatrix sys = rows.empty() ? RatMatrix(0, 10) : RatMatrix::from_rows(rows);
  const RatMatrix ker = sys.kernel();
  if (ker.rows() != 1) {
    out.detail = "invariant quadratic line has dimension " + std::to_string(ker.rows());
    return out;
  }
  const RatMatrix q0 = q_of(ker.row(0));

  // Full der_0 must act conformally on q0.
  for (const RatMatrix& d : action) {
    const RatMatrix img = d.transpose() * q0 + q0 * d;
    // img == lambda q0 for some rational lambda
    Rat lambda(0);
    bool set = false;
    for (int i = 0; i < 4 && !set; ++i)
      for (int j = 0; j < 4 && !set; ++j)
        if (q0.at(i, j) != 0) {
          lambda = img.at(i, j) / q0.at(i, j);
          set = true;
        }
    if (!(img == q0.scaled(lambda))) {
      out.detail = "derivations do not preserve the conformal class";
      return out;
    }
  }

  out.invariant_form = q0;
  out.signature = symmetric_signature(q0);
  const auto [pos, negs, zero] = out.signature;
  if (zero > 0) {
    out.detail = "invariant form is degenerate";
    return out;
  }
  if (pos == 4 || negs == 4) {
    out.type = Rank4Type::elliptic;
    out.detail = "definite invariant conformal class";
  } else if (pos == 2 && negs == 2) {
    out.type = Rank4Type::hyperbolic;
    out.detail = "split signature (2,2) invariant conformal class";
  } else {
    out.detail = "signature (" + std::to_string(pos) + "," + std::to_string(negs) + ")";
  }
  return out;
}

const char* rank4_type_name(Rank4Type t) {
  switch (t) {
    case Rank4Type::elliptic:
      return "elliptic";
    case Rank4Type::hyperbolic:
      return "hyperbolic";
    case Rank4Type::non_generic:
      return "non_generic";
  }
  return "non_generic";
}

}  // namespace glat
