#include <doctest.h>

#include "glat/errors.hpp"
#include "glat/families.hpp"
#include "glat/prolongation.hpp"
#include "glat/rng.hpp"

using namespace glat;

namespace {

// Graded change of basis: block-diagonal invertible P per degree; returns
// the transformed algebra (same abstract structure, new constants).
GradedLieAlgebra change_basis(const GradedLieAlgebra& g, Rng& rng) {
  const int n = g.dim();
  RatMatrix p(n, n), pinv(n, n);
  for (const auto& [d, cdim] : g.component_dims()) {
    RatMatrix blk(cdim, cdim);
    for (;;) {
      for (int i = 0; i < cdim; ++i)
        for (int j = 0; j < cdim; ++j) blk.at(i, j) = rat_of(rng.int_in(-2, 2));
      if (blk.rank() == cdim) break;
    }
    // rows of the inverse: c with c * blk = e_i
    RowSolver solver(blk);
    RatMatrix inv(cdim, cdim);
    for (int i = 0; i < cdim; ++i) {
      std::vector<Rat> e(cdim, Rat(0));
      e[i] = 1;
      const auto c = solver.coordinates(e);
      REQUIRE(c.has_value());
      for (int j = 0; j < cdim; ++j) inv.at(i, j) = (*c)[j];
    }
    const auto& idx = g.indices_of_degree(d);
    for (int i = 0; i < cdim; ++i)
      for (int j = 0; j < cdim; ++j) {
        p.at(idx[i], idx[j]) = blk.at(i, j);
        pinv.at(idx[i], idx[j]) = inv.at(i, j);
      }
  }
  // sanity: pinv * p = 1
  REQUIRE(pinv * p == RatMatrix::identity(n));
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Rat> fa(n, Rat(0)), fb(n, Rat(0));
      for (int r = 0; r < n; ++r) {
        fa[r] = p.at(r, a);
        fb[r] = p.at(r, b);
      }
      const auto br = g.bracket(fa, fb);
      const auto back = mat_vec(pinv, br);
      std::vector<BracketTerm> terms;
      for (int t = 0; t < n; ++t)
        if (back[t] != 0) terms.push_back({t, back[t]});
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  return GradedLieAlgebra::create(g.name() + "_twisted", g.k(), g.degrees(), std::move(table));
}

// Derivation coordinates of the grading map E x = deg(x) x.
Subspace grading_line(const GradedLieAlgebra& n) {
  const int dim = n.dim();
  std::vector<Rat> coords(static_cast<std::size_t>(dim) * dim, Rat(0));
  for (int i = 0; i < dim; ++i) coords[static_cast<std::size_t>(i) * dim + i] = n.degree_of(i);
  return Subspace::from_vectors(dim * dim, {coords});
}

}  // namespace

TEST_CASE("prolongation of the four families recovers the parent algebra") {
  for (const char* name : {"g2_split", "so_split_3", "so_split_4", "sp6_split", "sp21"}) {
    const GradedLieAlgebra g = build_family(*builtin_family(name));
    const NilpotentGradedAlgebra n = negative_part(g);
    const ProlongationResult r = tanaka_prolong_full(n);
    CHECK(r.terminated);
    CHECK_FALSE(r.truncated_at.has_value());
    CHECK(r.total() == g.dim());
    const ProlongationComparison cmp = compare_with_algebra(r, g);
    CHECK(cmp.pass);
    // negative side copied from the input, degree 0 from a0
    for (const auto& [d, dim] : n.algebra().component_dims())
      CHECK(r.component_dims.at(d) == dim);
    CHECK(r.component_dims.at(0) == g.component_dim(0));
  }
}

TEST_CASE("g2 prolongation with scalars only fails the comparison at degree 0") {
  const GradedLieAlgebra g = build_g2_split();
  const NilpotentGradedAlgebra n = negative_part(g);
  const ProlongationResult r = tanaka_prolong(n, grading_line(n.algebra()), 5);
  CHECK(r.component_dims.at(0) == 1);
  const ProlongationComparison cmp = compare_with_algebra(r, g);
  CHECK_FALSE(cmp.pass);
  CHECK(cmp.detail.find("degree 0") != std::string::npos);
}

TEST_CASE("prolongation dims are basis independent") {
  Rng rng(404);
  for (const char* name : {"g2_split", "so_split_3"}) {
    const GradedLieAlgebra g = build_family(*builtin_family(name));
    const ProlongationResult base = tanaka_prolong_full(negative_part(g));
    const GradedLieAlgebra twisted = change_basis(g, rng);
    const ProlongationResult again = tanaka_prolong_full(negative_part(twisted));
    CHECK(base.component_dims == again.component_dims);
    CHECK(base.terminated == again.terminated);
  }
}

TEST_CASE("shrinking a0 never increases a component") {
  const GradedLieAlgebra g = build_g2_split();
  const NilpotentGradedAlgebra n = negative_part(g);
  const ProlongationResult full = tanaka_prolong_full(n, 6);
  const ProlongationResult small = tanaka_prolong(n, grading_line(n.algebra()), 6);
  for (const auto& [d, dim] : small.component_dims) {
    if (d < 0) continue;
    const auto it = full.component_dims.find(d);
    const int fulldim = it == full.component_dims.end() ? 0 : it->second;
    CHECK(dim <= fulldim);
  }
}

TEST_CASE("a0 outside der_0 or not closed is rejected") {
  const GradedLieAlgebra g = build_so_split(3);
  const NilpotentGradedAlgebra n = negative_part(g);
  const int dim = n.dim();

  // an arbitrary degree-preserving map that is no derivation
  std::vector<Rat> bogus(static_cast<std::size_t>(dim) * dim, Rat(0));
  const auto& neg1 = n.algebra().indices_of_degree(-1);
  bogus[static_cast<std::size_t>(neg1[0]) * dim + neg1[1]] = 1;
  const Subspace not_der = Subspace::from_vectors(dim * dim, {bogus});
  CHECK_THROWS_AS(tanaka_prolong(n, not_der, 3), InputError);

  // two derivations spanning a non-subalgebra: extend E12 and E21 of
  // gl(n_{-1}) to derivations; their bracket E11 - E22 leaves the span.
  auto extend = [&](const RatMatrix& a) {
    RatMatrix d(dim, dim);
    for (std::size_t r = 0; r < neg1.size(); ++r)
      for (std::size_t c = 0; c < neg1.size(); ++c) d.at(neg1[r], neg1[c]) = a.at(static_cast<int>(r), static_cast<int>(c));
    // determine the degree -2 block from a spanning set of brackets
    for (int t : n.algebra().indices_of_degree(-2)) {
      bool done = false;
      for (std::size_t i = 0; i < neg1.size() && !done; ++i)
        for (std::size_t j = i + 1; j < neg1.size() && !done; ++j)
          for (const auto& term : n.algebra().bracket_basis(neg1[i], neg1[j]))
            if (term.target == t) {
              // D t = (1/c) ([D e_i, e_j] + [e_i, D e_j])
              std::vector<Rat> dei(dim, Rat(0)), dej(dim, Rat(0)), ei(dim, Rat(0)), ej(dim, Rat(0));
              ei[neg1[i]] = 1;
              ej[neg1[j]] = 1;
              for (int r = 0; r < dim; ++r) {
                dei[r] = d.at(r, neg1[i]);
                dej[r] = d.at(r, neg1[j]);
              }
              auto val = n.algebra().bracket(dei, ej);
              const auto v2 = n.algebra().bracket(ei, dej);
              for (int r = 0; r < dim; ++r) val[r] = (val[r] + v2[r]) / term.coeff;
              for (int r = 0; r < dim; ++r) d.at(r, t) = val[r];
              done = true;
            }
      REQUIRE(done);
    }
    std::vector<Rat> flat(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) flat[static_cast<std::size_t>(r) * dim + c] = d.at(r, c);
    return flat;
  };
  RatMatrix e12(3, 3), e21(3, 3);
  e12.at(0, 1) = 1;
  e21.at(1, 0) = 1;
  const Subspace open_pair = Subspace::from_vectors(dim * dim, {extend(e12), extend(e21)});
  CHECK_THROWS_AS(tanaka_prolong(n, open_pair, 3), InputError);
}
