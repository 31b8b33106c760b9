#include "glat/subalgebra.hpp"

#include <algorithm>

#include "glat/errors.hpp"
#include "glat/families.hpp"
#include "glat/rng.hpp"

namespace glat {

namespace {

// [u, v] for degree-local vectors; returns local coordinates at d1 + d2.
std::vector<Rat> bracket_local(const GradedLieAlgebra& g, int d1, const std::vector<Rat>& u, int d2,
                               const std::vector<Rat>& v) {
  const int dt = d1 + d2;
  const auto& tgt = g.indices_of_degree(dt);
  std::vector<Rat> out(tgt.size(), Rat(0));
  if (tgt.empty()) return out;
  const auto& src1 = g.indices_of_degree(d1);
  const auto& src2 = g.indices_of_degree(d2);
  for (std::size_t a = 0; a < src1.size(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < src2.size(); ++b) {
      if (v[b] == 0) continue;
      const Rat f = u[a] * v[b];
      for (const auto& t : g.bracket_basis(src1[a], src2[b]))
        out[g.position_in_degree(t.target)] += f * t.coeff;
    }
  }
  return out;
}

void require_component_shapes(const GradedLieAlgebra& g, const GradedSubalgebra& b) {
  for (const auto& [d, s] : b.components) {
    if (d < -g.k() || d > g.k())
      throw InputError("subalgebra component at degree " + std::to_string(d) + " outside the grading");
    if (s.ambient() != g.component_dim(d))
      throw InputError("component at degree " + std::to_string(d) + " has ambient " +
                       std::to_string(s.ambient()) + ", expected " + std::to_string(g.component_dim(d)));
  }
}

}  // namespace

SubalgebraReport verify_subalgebra(const GradedLieAlgebra& g, const GradedSubalgebra& b) {
  if (!b.algebra_name.empty() && b.algebra_name != g.name())
    throw InputError("subalgebra belongs to '" + b.algebra_name + "', not '" + g.name() + "'");
  require_component_shapes(g, b);
  SubalgebraReport rep;
  rep.dim = b.dim();
  rep.profile = b.profile();
  rep.proper = rep.dim < g.dim();
  rep.closed = true;
  for (const auto& [d1, s1] : b.components)
    for (const auto& [d2, s2] : b.components) {
      if (d1 > d2) continue;
      const int dt = d1 + d2;
      for (int r1 = 0; r1 < s1.dim() && rep.closed; ++r1)
        for (int r2 = 0; r2 < s2.dim() && rep.closed; ++r2) {
          const auto br = bracket_local(g, d1, s1.basis().row(r1), d2, s2.basis().row(r2));
          bool zero = true;
          for (const auto& x : br) zero = zero && x == 0;
          if (zero) continue;
          const auto it = b.components.find(dt);
          if (it == b.components.end() || !it->second.contains(br)) {
            rep.closed = false;
            rep.detail = "bracket of degrees (" + std::to_string(d1) + ", " + std::to_string(d2) +
                         ") leaves the subalgebra";
          }
        }
    }
  return rep;
}

namespace {

Subspace unit_span(int ambient, const std::vector<int>& positions) {
  std::vector<std::vector<Rat>> rows;
  for (int p : positions) {
    std::vector<Rat> v(ambient, Rat(0));
    v[p] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(ambient, rows);
}

}  // namespace

GradedSubalgebra witness_bk(const GradedLieAlgebra& so, int k) {
  const auto info = builtin_family(so.name());
  if (!info || info->family != Family::so_split)
    throw InputError("witness_bk lives inside the so family");
  const int n = info->n;
  if (k < 1 || k > n - 1) throw InputError("witness_bk requires 1 <= k <= n-1");

  GradedSubalgebra b;
  b.algebra_name = so.name();
  b.components[-2] = Subspace::full(so.component_dim(-2));
  b.components[-1] = Subspace::full(so.component_dim(-1));
  // g_0 = gl(n) matrix units E_ij (row-major); keep those not hitting the
  // lower-left (rows >= k, cols < k) block.
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(i >= k && j < k)) keep.push_back(i * n + j);
  b.components[0] = unit_span(n * n, keep);
  // g_1 = R^n: first k coordinates.
  std::vector<int> first;
  for (int i = 0; i < k; ++i) first.push_back(i);
  b.components[1] = unit_span(n, first);
  // g_2 = Lambda^2 R^n with basis E_ij - E_ji (i < j lex): pairs inside
  // the first k coordinates.
  std::vector<int> pairs;
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if (j < k) pairs.push_back(pos);
  if (!pairs.empty()) b.components[2] = unit_span(n * (n - 1) / 2, pairs);
  return b;
}

std::vector<NamedSubalgebra> witness_catalog(const GradedLieAlgebra& g) {
  const auto info = builtin_family(g.name());
  if (!info) throw InputError("witness_catalog knows only the built-in families");
  std::vector<NamedSubalgebra> out;

  GradedSubalgebra parabolic;
  parabolic.algebra_name = g.name();
  for (int d = 0; d <= g.k(); ++d)
    if (g.component_dim(d) > 0) parabolic.components[d] = Subspace::full(g.component_dim(d));
  out.push_back({"parabolic", parabolic});

  GradedSubalgebra lower;
  lower.algebra_name = g.name();
  for (int d = -g.k(); d <= 0; ++d)
    if (g.component_dim(d) > 0) lower.components[d] = Subspace::full(g.component_dim(d));
  out.push_back({"neg_plus_g0", lower});

  switch (info->family) {
    case Family::so_split:
      out.push_back({"b^" + std::to_string(info->n - 1), witness_bk(g, info->n - 1)});
      break;
    case Family::g2_split: {
      // g_- + b_0 + b_1 for a line b_1 in g_1 and its stabilizer b_0.
      GradedSubalgebra w;
      w.algebra_name = g.name();
      for (int d = -g.k(); d <= -1; ++d) w.components[d] = Subspace::full(g.component_dim(d));
      Subspace line = unit_span(g.component_dim(1), {0});
      w.components[1] = line;
      w.components[0] = subspace_stabilizer(g, 1, line);
      out.push_back({"line_stabilizer", w});
      break;
    }
    case Family::sp6_split: {
      // All matrices with X11 upper triangular, X12 in the top row, X13 in
      // the top-right corner; lower blocks free. Degree-0 basis order is
      // (E11, E12, E21, E22 | H, E12, E21), degree 1 is (E11, E12, E21,
      // E22), degree 2 is (H, E12, E21).
      GradedSubalgebra w;
      w.algebra_name = g.name();
      w.components[-2] = Subspace::full(3);
      w.components[-1] = Subspace::full(4);
      w.components[0] = unit_span(7, {0, 1, 3, 4, 5, 6});
      w.components[1] = unit_span(4, {0, 1});
      w.components[2] = unit_span(3, {1});
      out.push_back({"hyperbolic_16", w});
      break;
    }
    case Family::sp21:
      break;
  }
  return out;
}

GradedSubalgebra bracket_closure(const GradedLieAlgebra& g, const std::vector<std::vector<Rat>>& generators) {
  std::map<int, IncrementalSpan> spans;
  for (const auto& [d, cdim] : g.component_dims()) spans.emplace(d, IncrementalSpan(cdim));

  std::vector<std::pair<int, std::vector<Rat>>> queue;
  for (const auto& v : generators) {
    if (static_cast<int>(v.size()) != g.dim()) throw InputError("generator has wrong dimension");
    int deg = 0;
    bool seen = false;
    for (int i = 0; i < g.dim(); ++i)
      if (v[i] != 0) {
        if (seen && g.degree_of(i) != deg) throw InputError("generator is not homogeneous");
        deg = g.degree_of(i);
        seen = true;
      }
    if (!seen) continue;  // zero generator spans nothing
    queue.emplace_back(deg, g.restrict_to(deg, v));
  }

  std::vector<std::pair<int, std::vector<Rat>>> basis;
  int total = 0;
  while (!queue.empty() && total < g.dim()) {
    auto [d, v] = std::move(queue.back());
    queue.pop_back();
    auto it = spans.find(d);
    if (it == spans.end()) continue;
    if (!it->second.insert(v)) continue;
    ++total;
    for (const auto& [d2, w] : basis) {
      const int dt = d + d2;
      if (dt < -g.k() || dt > g.k() || g.component_dim(dt) == 0) continue;
      auto br = bracket_local(g, d, v, d2, w);
      bool zero = true;
      for (const auto& x : br) zero = zero && x == 0;
      if (!zero) queue.emplace_back(dt, std::move(br));
    }
    basis.emplace_back(d, std::move(v));
  }

  GradedSubalgebra out;
  out.algebra_name = g.name();
  if (total >= g.dim()) {
    for (const auto& [d, cdim] : g.component_dims()) out.components[d] = Subspace::full(cdim);
    return out;
  }
  for (auto& [d, span] : spans) {
    if (span.dim() == 0) continue;
    out.components[d] = Subspace::from_vectors(span.ambient(), span.rows());
  }
  return out;
}

GapScanResult gap_scan(const GradedLieAlgebra& g, int forbidden_lo, int forbidden_hi, int trials,
                       std::uint64_t seed) {
  if (trials < 1) throw InputError("gap_scan needs at least one trial");
  GapScanResult res;
  res.trials = trials;
  std::vector<int> degrees;
  for (const auto& [d, cdim] : g.component_dims()) degrees.push_back(d);

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(trial)));
    const int count = 1 + static_cast<int>(rng.below(4));
    std::vector<std::pair<int, std::vector<Rat>>> gens_local;
    std::vector<std::vector<Rat>> gens_full;
    for (int c = 0; c < count; ++c) {
      const int d = degrees[rng.below(degrees.size())];
      std::vector<Rat> local(g.component_dim(d));
      for (auto& x : local) x = rat_of(rng.int_in(-3, 3));
      gens_local.emplace_back(d, local);
      gens_full.push_back(g.embed(d, local));
    }
    const GradedSubalgebra closed = bracket_closure(g, gens_full);
    const int dim = closed.dim();
    if (dim >= g.dim()) continue;
    ++res.histogram[dim];
    if (dim > forbidden_lo && dim < forbidden_hi) {
      GapViolation v;
      v.generators = gens_local;
      v.dim = dim;
      v.profile = closed.profile();
      res.violations.push_back(std::move(v));
    }
  }
  return res;
}

Subspace subspace_stabilizer(const GradedLieAlgebra& g, int module_degree, const Subspace& w) {
  const int amb = g.component_dim(module_degree);
  if (w.ambient() != amb)
    throw InputError("subspace does not live in the degree " + std::to_string(module_degree) +
                     " component");
  const auto& deg0 = g.indices_of_degree(0);
  const int g0 = static_cast<int>(deg0.size());

  // Linear reduction map with kernel w: eliminate the pivots of w's RREF.
  const RatMatrix& wb = w.basis();
  std::vector<int> wpivots;
  for (int r = 0; r < wb.rows(); ++r) {
    int p = 0;
    while (p < amb && wb.at(r, p) == 0) ++p;
    wpivots.push_back(p);
  }
  auto reduce_mod_w = [&](std::vector<Rat> v) {
    for (int r = 0; r < wb.rows(); ++r) {
      const Rat f = v[wpivots[r]];
      if (f == 0) continue;
      for (int j = 0; j < amb; ++j)
        if (wb.at(r, j) != 0) v[j] -= f * wb.at(r, j);
    }
    return v;
  };

  std::vector<std::vector<Rat>> rows;  // constraints over a in g_0 local coords
  for (int r = 0; r < wb.rows(); ++r) {
    // residual of [e_{deg0[s]}, w_r] modulo w, per ambient coordinate
    std::vector<std::vector<Rat>> residuals;
    for (int s = 0; s < g0; ++s) {
      std::vector<Rat> a_local(g0, Rat(0));
      a_local[s] = 1;
      residuals.push_back(reduce_mod_w(bracket_local(g, 0, a_local, module_degree, wb.row(r))));
    }
    for (int j = 0; j < amb; ++j) {
      std::vector<Rat> eq(g0);
      bool any = false;
      for (int s = 0; s < g0; ++s) {
        eq[s] = residuals[s][j];
        any = any || eq[s] != 0;
      }
      if (any) rows.push_back(std::move(eq));
    }
  }
  const RatMatrix sys = rows.empty() ? RatMatrix(0, g0) : RatMatrix::from_rows(rows);
  return Subspace::from_rows(g0, sys.kernel());
}

int subspace_stabilizer_dim(const GradedLieAlgebra& g, int module_degree, const Subspace& w) {
  return subspace_stabilizer(g, module_degree, w).dim();
}

}  // namespace glat
