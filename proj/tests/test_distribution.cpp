#include <doctest.h>

#include "glat/distribution.hpp"
#include "glat/families.hpp"
#include "glat/errors.hpp"
#include "glat/rng.hpp"

using namespace glat;

namespace {

PolyVectorField coordinate_field(int m, int i) {  // d/dx_i
  PolyVectorField f;
  f.vars = m;
  f.components.assign(m, Polynomial(m));
  f.components[i] = Polynomial::constant(m, Rat(1));
  return f;
}

PolyVectorField random_field(Rng& rng, int m, int maxdeg) {
  PolyVectorField f;
  f.vars = m;
  f.components.assign(m, Polynomial(m));
  for (int c = 0; c < m; ++c)
    for (int t = 0; t < 3; ++t) {
      std::vector<int> e(m, 0);
      int budget = static_cast<int>(rng.below(maxdeg + 1));
      while (budget-- > 0) e[rng.below(m)] += 1;
      f.components[c].add_term(e, rat_of(rng.int_in(-2, 2)));
    }
  return f;
}

std::vector<Rat> origin(int m) { return std::vector<Rat>(m, Rat(0)); }

std::vector<Rat> random_point(Rng& rng, int m) {
  std::vector<Rat> p(m);
  for (auto& x : p) x = rat_of(rng.int_in(-2, 2), rng.int_in(1, 3));
  return p;
}

NilpotentGradedAlgebra heisenberg_neg() {
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  table[{0, 1}] = {{2, rat_of(1)}};
  return NilpotentGradedAlgebra::wrap(
      GradedLieAlgebra::create("heis3", 2, {-1, -1, -2}, std::move(table)));
}

}  // namespace

TEST_CASE("field bracket basics") {
  const int m = 3;
  // [d1, d2] = 0
  CHECK(field_bracket(coordinate_field(m, 0), coordinate_field(m, 1)).is_zero());

  // [d1, x1 d2] = d2
  PolyVectorField x1d2;
  x1d2.vars = m;
  x1d2.components.assign(m, Polynomial(m));
  x1d2.components[1] = Polynomial::variable(m, 0);
  const PolyVectorField br = field_bracket(coordinate_field(m, 0), x1d2);
  CHECK(br.components[1] == Polynomial::constant(m, Rat(1)));
  CHECK(br.components[0].is_zero());
  CHECK(br.components[2].is_zero());

  // Heisenberg pair: [d1 - x2 d3, d2 + x1 d3] = 2 d3
  PolyVectorField f1 = coordinate_field(m, 0);
  f1.components[2] = f1.components[2] - Polynomial::variable(m, 1);
  PolyVectorField f2 = coordinate_field(m, 1);
  f2.components[2] = f2.components[2] + Polynomial::variable(m, 0);
  const PolyVectorField h = field_bracket(f1, f2);
  CHECK(h.components[2] == Polynomial::constant(m, Rat(2)));

  CHECK_THROWS_AS(field_bracket(coordinate_field(2, 0), coordinate_field(3, 0)), InputError);
}

TEST_CASE("field bracket: antisymmetry, bilinearity, Jacobi on random fields") {
  Rng rng(1312);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(3));
    const PolyVectorField a = random_field(rng, m, 2);
    const PolyVectorField b = random_field(rng, m, 2);
    const PolyVectorField c = random_field(rng, m, 2);

    // [a, b] + [b, a] = 0
    PolyVectorField anti = field_bracket(a, b);
    const PolyVectorField ba = field_bracket(b, a);
    for (int i = 0; i < m; ++i) anti.components[i] = anti.components[i] + ba.components[i];
    CHECK(anti.is_zero());

    // [a + 3b, c] = [a, c] + 3 [b, c]
    PolyVectorField sum = a;
    for (int i = 0; i < m; ++i) sum.components[i] = sum.components[i] + b.components[i].scaled(Rat(3));
    PolyVectorField lin = field_bracket(sum, c);
    const PolyVectorField ac = field_bracket(a, c);
    const PolyVectorField bc = field_bracket(b, c);
    for (int i = 0; i < m; ++i)
      lin.components[i] = lin.components[i] - ac.components[i] - bc.components[i].scaled(Rat(3));
    CHECK(lin.is_zero());

    // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
    PolyVectorField acc = field_bracket(field_bracket(a, b), c);
    const PolyVectorField t2 = field_bracket(field_bracket(b, c), a);
    const PolyVectorField t3 = field_bracket(field_bracket(c, a), b);
    for (int i = 0; i < m; ++i)
      acc.components[i] = acc.components[i] + t2.components[i] + t3.components[i];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("growth vector of the Heisenberg pair and a stalled line") {
  PolyVectorField f1 = coordinate_field(3, 0);
  f1.components[2] = f1.components[2] - Polynomial::variable(3, 1);
  PolyVectorField f2 = coordinate_field(3, 1);
  f2.components[2] = f2.components[2] + Polynomial::variable(3, 0);
  const GrowthVector gv = growth_vector_at({f1, f2}, origin(3));
  CHECK(gv.dims == std::vector<int>{2, 3});
  CHECK(gv.bracket_generating);

  const GrowthVector stalled = growth_vector_at({coordinate_field(2, 0)}, origin(2));
  CHECK(stalled.dims == std::vector<int>{1});
  CHECK_FALSE(stalled.bracket_generating);
  CHECK_THROWS_AS(symbol_at({coordinate_field(2, 0)}, origin(2)), InputError);

  // a depth cap below the nilpotency step is reported, not silent
  const GrowthVector capped = growth_vector_at({f1, f2}, origin(3), 1);
  CHECK(capped.capped);
  CHECK_FALSE(capped.bracket_generating);
  CHECK(capped.dims == std::vector<int>{2});
}

TEST_CASE("model fields of the Heisenberg algebra use the midpoint convention") {
  const auto fields = model_fields(heisenberg_neg());
  REQUIRE(fields.size() == 2);
  // L_{e0} = d0 - (x1/2) d2, L_{e1} = d1 + (x0/2) d2
  Polynomial expect0(3), expect1(3);
  expect0 = Polynomial::variable(3, 1).scaled(rat_of(-1, 2));
  expect1 = Polynomial::variable(3, 0).scaled(rat_of(1, 2));
  CHECK(fields[0].components[0] == Polynomial::constant(3, Rat(1)));
  CHECK(fields[0].components[2] == expect0);
  CHECK(fields[1].components[1] == Polynomial::constant(3, Rat(1)));
  CHECK(fields[1].components[2] == expect1);
}

TEST_CASE("model fields reproduce growth vectors at the origin and at random points") {
  struct Case {
    const char* name;
    std::vector<int> growth;
  };
  const std::vector<Case> cases = {{"g2_split", {2, 3, 5}},
                                   {"so_split_3", {3, 6}},
                                   {"so_split_4", {4, 10}},
                                   {"sp6_split", {4, 7}},
                                   {"sp21", {4, 7}}};
  Rng rng(77);
  for (const auto& c : cases) {
    const GradedLieAlgebra g = build_family(*builtin_family(c.name));
    const NilpotentGradedAlgebra n = negative_part(g);
    const auto fields = model_fields(n);
    CHECK(static_cast<int>(fields.size()) == g.component_dim(-1));
    const GrowthVector at0 = growth_vector_at(fields, origin(n.dim()));
    CHECK(at0.dims == c.growth);
    CHECK(at0.bracket_generating);
    // left invariance: the same growth vector at 10 random rational points
    for (int t = 0; t < 10; ++t) {
      const GrowthVector gv = growth_vector_at(fields, random_point(rng, n.dim()));
      CHECK(gv.dims == c.growth);
    }
  }
}

TEST_CASE("symbols of the model fields match the source dims and pass genericity") {
  {
    const NilpotentGradedAlgebra n = negative_part(build_g2_split());
    const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
    CHECK(s.algebra.algebra().component_dims() == std::map<int, int>{{-3, 2}, {-2, 1}, {-1, 2}});
    CHECK(genericity_test(s, GenericityFamily::g2).pass);
  }
  {
    const NilpotentGradedAlgebra n = negative_part(build_so_split(3));
    const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
    CHECK(s.algebra.algebra().component_dims() == std::map<int, int>{{-2, 3}, {-1, 3}});
    CHECK(genericity_test(s, GenericityFamily::so_n).pass);
  }
  {
    const NilpotentGradedAlgebra n = negative_part(build_sp21());
    const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
    CHECK(s.algebra.algebra().component_dims() == std::map<int, int>{{-2, 3}, {-1, 4}});
    const GenericityReport rep = genericity_test(s, GenericityFamily::rank4);
    CHECK(rep.pass);
  }
  {
    // Heisenberg: dims (2, 1) and a nonzero wedge map
    const SymbolAlgebra s = symbol_at(model_fields(heisenberg_neg()), origin(3));
    CHECK(s.algebra.algebra().component_dims() == std::map<int, int>{{-2, 1}, {-1, 2}});
    CHECK_FALSE(s.algebra.algebra().bracket_basis(0, 1).empty());
  }
}

TEST_CASE("rank-4 classification: elliptic vs hyperbolic vs degenerate") {
  {
    const NilpotentGradedAlgebra n = negative_part(build_sp21());
    const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
    const Rank4Classification c = classify_rank4(s);
    CHECK(c.type == Rank4Type::elliptic);
    const auto [pos, neg, zero] = c.signature;
    CHECK(zero == 0);
    CHECK((pos == 4 || neg == 4));
  }
  {
    const NilpotentGradedAlgebra n = negative_part(build_sp6_split());
    const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
    const Rank4Classification c = classify_rank4(s);
    CHECK(c.type == Rank4Type::hyperbolic);
    CHECK(c.signature == std::array<int, 3>{2, 2, 0});
  }
  {
    // degenerate (4,3) symbol: only e_0 brackets nontrivially; the
    // degree-0 derivation algebra is then much bigger than 7
    std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
    table[{0, 1}] = {{4, rat_of(1)}};
    table[{0, 2}] = {{5, rat_of(1)}};
    table[{0, 3}] = {{6, rat_of(1)}};
    const NilpotentGradedAlgebra n = NilpotentGradedAlgebra::wrap(
        GradedLieAlgebra::create("degenerate43", 2, {-1, -1, -1, -1, -2, -2, -2}, std::move(table)));
    SymbolAlgebra s{n, RatMatrix::identity(7), {1, 1, 1, 1, 2, 2, 2}, GrowthVector{{4, 7}, true, false}};
    const GenericityReport rep = genericity_test(s, GenericityFamily::rank4);
    CHECK_FALSE(rep.pass);
    CHECK(graded_derivations(s.algebra, 0).dim() > 7);
    const Rank4Classification c = classify_rank4(s);
    CHECK(c.type == Rank4Type::non_generic);
  }
  {
    // wrong layer dims are an input error
    const SymbolAlgebra s = symbol_at(model_fields(heisenberg_neg()), origin(3));
    CHECK_THROWS_AS(classify_rank4(s), InputError);
  }
}

TEST_CASE("signature is exact and congruence invariant") {
  RatMatrix q(3, 3);
  q.at(0, 1) = 1;
  q.at(1, 0) = 1;  // hyperbolic plane + zero line
  CHECK(symmetric_signature(q) == std::array<int, 3>{1, 1, 1});

  Rng rng(9001);
  RatMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      m.at(i, j) = rat_of(rng.int_in(-3, 3));
      m.at(j, i) = m.at(i, j);
    }
  const auto sig = symmetric_signature(m);
  for (int trial = 0; trial < 5; ++trial) {
    RatMatrix p(4, 4);
    for (;;) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p.at(i, j) = rat_of(rng.int_in(-2, 2));
      if (p.rank() == 4) break;
    }
    CHECK(symmetric_signature(p.transpose() * m * p) == sig);
  }
}
