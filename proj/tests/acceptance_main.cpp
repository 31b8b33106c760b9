// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "glat/cohomology.hpp"
#include "glat/distribution.hpp"
#include "glat/prolongation.hpp"
#include "glat/subalgebra.hpp"

using namespace glat;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> results;

template <typename F>
void criterion(int id, const std::string& title, F&& body) {
  const auto t0 = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body();
    pass = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  results.push_back({id, title, pass, detail, secs});
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title;
  if (!detail.empty()) line << " -- " << detail;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " (" << secs << "s)";
  std::cout << line.str() << std::endl;
}

struct Failure : std::runtime_error {
  explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw Failure(os.str());
  }
}

std::string dims_str(const std::map<int, int>& dims) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [d, n] : dims) {
    os << (first ? "" : ",") << n;
    first = false;
  }
  os << ")";
  return os.str();
}

std::vector<Rat> origin(int m) { return std::vector<Rat>(m, Rat(0)); }

constexpr std::uint64_t kSeed = 7;
constexpr int kGapTrials = 10000;
constexpr int kProbeTrials = 200;

}  // namespace

int main() {
  // Built once, shared across criteria.
  const GradedLieAlgebra g2 = build_g2_split();
  const GradedLieAlgebra so3 = build_so_split(3);
  const GradedLieAlgebra so4 = build_so_split(4);
  const GradedLieAlgebra so5 = build_so_split(5);
  const GradedLieAlgebra sp6 = build_sp6_split();
  const GradedLieAlgebra sp21 = build_sp21();
  const std::vector<const GradedLieAlgebra*> all = {&g2, &so3, &so4, &so5, &sp6, &sp21};

  criterion(1, "family construction: dimensions, grading profiles, validator", [&] {
    expect_eq(so3.dim(), 21, "dim so(4,3)");
    expect_eq(so4.dim(), 36, "dim so(5,4)");
    expect_eq(so5.dim(), 55, "dim so(6,5)");
    expect_eq(g2.dim(), 14, "dim g2");
    expect_eq(sp6.dim(), 21, "dim sp(6,R)");
    expect_eq(sp21.dim(), 21, "dim sp(2,1)");
    expect(g2.component_dims() ==
               std::map<int, int>{{-3, 2}, {-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}, {3, 2}},
           "g2 grading dims (2,1,2,4,2,1,2)");
    for (const auto* sp : {&sp6, &sp21})
      expect(sp->component_dims() == std::map<int, int>{{-2, 3}, {-1, 4}, {0, 7}, {1, 4}, {2, 3}},
             "sp grading dims (3,4,7,4,3)");
    for (int n = 3; n <= 5; ++n) {
      const GradedLieAlgebra& so = n == 3 ? so3 : (n == 4 ? so4 : so5);
      expect(so.component_dims() == std::map<int, int>{{-2, n * (n - 1) / 2},
                                                       {-1, n},
                                                       {0, n * n},
                                                       {1, n},
                                                       {2, n * (n - 1) / 2}},
             "so grading dims at n=" + std::to_string(n));
    }
    for (const auto* g : all) {
      const ValidationReport rep = validate(*g);
      expect(rep.structural_pass, g->name() + " structural validation");
      expect(rep.killing_nondegenerate, g->name() + " Killing form nondegenerate");
    }
    return std::string("all six algebras validated");
  });

  criterion(2, "H^1 concentrated in negative homogeneities for every family", [&] {
    for (const auto* g : all) expect(h1_negative_test(*g), g->name() + " h1 test");
    return std::string("g2, so(4,3), so(5,4), so(6,5), sp(6,R), sp(2,1)");
  });

  criterion(3, "H^2 dimensions and homogeneity decomposition", [&] {
    const auto dg2 = cohomology_dims(g2, 2);
    expect(dg2 == std::map<int, int>{{4, 5}}, "g2: dim 5 in a single homogeneity");
    const auto dso3 = cohomology_dims(so3, 2);
    expect(dso3 == std::map<int, int>{{3, 27}}, "so(4,3) regression value 27 at homogeneity 3");
    const auto dso4 = cohomology_dims(so4, 2);
    expect(dso4 == std::map<int, int>{{1, 60}}, "so(5,4) regression value 60 at homogeneity 1");
    for (const auto* sp : {&sp6, &sp21}) {
      const auto d = cohomology_dims(*sp, 2);
      expect(d == std::map<int, int>{{1, 12}, {2, 5}},
             sp->name() + " regression values 12 + 5 in two homogeneities");
      expect(d.size() >= 2, sp->name() + " has >= 2 components");
    }
    return std::string("g2 {4:5}; so3 {3:27}; so4 {1:60}; sp {1:12, 2:5}");
  });

  criterion(4, "maximal H^2 stabilizer dimensions via the probe", [&] {
    const std::vector<std::pair<const GradedLieAlgebra*, int>> cases = {
        {&g2, 2}, {&so3, 5}, {&so4, 10}, {&sp6, 5}, {&sp21, 5}};
    std::ostringstream os;
    for (const auto& [g, want] : cases) {
      const StabilizerProbe p = max_stabilizer_probe(*g, kSeed, kProbeTrials);
      expect_eq(p.best_dim, want, g->name() + " probe best_dim");
      os << g->name() << "=" << p.best_dim << (p.witness_is_complex ? "(Q(i))" : "") << " ";
    }
    return os.str();
  });

  criterion(5, "Tanaka prolongation recovers each algebra degree-by-degree", [&] {
    for (const auto* g : {&g2, &so3, &so4, &sp6, &sp21}) {
      const ProlongationResult r = tanaka_prolong_full(negative_part(*g));
      expect(r.terminated, g->name() + " terminates");
      expect_eq(r.total(), g->dim(), g->name() + " prolongation total");
      expect(compare_with_algebra(r, *g).pass, g->name() + " degree-by-degree match");
    }
    return std::string("totals 14, 21, 36, 21, 21");
  });

  criterion(6, "witness subalgebras: closure and dimensions", [&] {
    const GradedSubalgebra b2 = witness_bk(so3, 2);
    expect(verify_subalgebra(so3, b2).closed && b2.dim() == 16, "b^2 in so(4,3): dim 16");
    const GradedSubalgebra b3 = witness_bk(so4, 3);
    expect(verify_subalgebra(so4, b3).closed && b3.dim() == 29, "b^3 in so(5,4): dim 29");
    for (const auto& [name, sub] : witness_catalog(g2)) {
      const SubalgebraReport rep = verify_subalgebra(g2, sub);
      expect(rep.closed && rep.dim == 9, "g2 witness " + name + ": dim 9");
    }
    bool parabolic21 = false;
    for (const auto& [name, sub] : witness_catalog(sp21))
      if (name == "parabolic") {
        parabolic21 = verify_subalgebra(sp21, sub).closed && sub.dim() == 14;
      }
    expect(parabolic21, "sp(2,1) parabolic: dim 14");
    bool hyp16 = false;
    for (const auto& [name, sub] : witness_catalog(sp6))
      if (name == "hyperbolic_16") {
        const SubalgebraReport rep = verify_subalgebra(sp6, sub);
        hyp16 = rep.closed && rep.dim == 16 &&
                rep.profile == std::map<int, int>{{-2, 3}, {-1, 4}, {0, 6}, {1, 2}, {2, 1}};
      }
    expect(hyp16, "sp(6,R) block witness: dim 16, profile (3,4,6,2,1)");
    return std::string("16, 29, 9/9/9, 14, 16");
  });

  criterion(7, "gap scans find no proper subalgebra inside the forbidden windows", [&] {
    const std::vector<std::tuple<const GradedLieAlgebra*, int, int>> cases = {
        {&g2, 9, 14}, {&so3, 16, 21}, {&so4, 29, 36}, {&sp6, 16, 21}, {&sp21, 14, 21}};
    std::ostringstream os;
    for (const auto& [g, lo, hi] : cases) {
      const GapScanResult r = gap_scan(*g, lo, hi, kGapTrials, kSeed);
      expect(r.violations.empty(), g->name() + " violations in (" + std::to_string(lo) + "," +
                                       std::to_string(hi) + ")");
      long proper = 0;
      for (const auto& [d, c] : r.histogram) proper += c;
      os << g->name() << ":0/" << proper << " ";
    }
    return "violations/proper-closures " + os.str() + "at " + std::to_string(kGapTrials) +
           " trials each";
  });

  criterion(8, "subspace stabilizer formula n^2-(n-l)l with maximum at l in {1, n-1}", [&] {
    for (int n = 3; n <= 5; ++n) {
      const GradedLieAlgebra& so = n == 3 ? so3 : (n == 4 ? so4 : so5);
      int best = 0;
      std::vector<int> argmax;
      for (int l = 1; l <= n - 1; ++l) {
        std::vector<std::vector<Rat>> rows;
        for (int i = 0; i < l; ++i) {
          std::vector<Rat> v(n, Rat(0));
          v[i] = 1;
          rows.push_back(v);
        }
        const int sd = subspace_stabilizer_dim(so, 1, Subspace::from_vectors(n, rows));
        expect_eq(sd, n * n - (n - l) * l, "stabilizer dim at n=" + std::to_string(n) +
                                               ", l=" + std::to_string(l));
        if (sd > best) {
          best = sd;
          argmax = {l};
        } else if (sd == best) {
          argmax.push_back(l);
        }
      }
      expect_eq(best, n * n - n + 1, "maximum at n=" + std::to_string(n));
      expect(argmax == std::vector<int>{1, n - 1} || (n == 3 && argmax == std::vector<int>{1, 2}),
             "maximum attained at l in {1, n-1}");
    }
    return std::string("n = 3, 4, 5");
  });

  criterion(9, "model distributions: growth vectors and rank-4 types", [&] {
    const std::vector<std::pair<const GradedLieAlgebra*, std::vector<int>>> cases = {
        {&g2, {2, 3, 5}}, {&so3, {3, 6}}, {&so4, {4, 10}}, {&sp6, {4, 7}}, {&sp21, {4, 7}}};
    for (const auto& [g, want] : cases) {
      const NilpotentGradedAlgebra n = negative_part(*g);
      const auto fields = model_fields(n);
      const GrowthVector gv = growth_vector_at(fields, origin(n.dim()));
      expect(gv.dims == want && gv.bracket_generating, g->name() + " growth vector");
    }
    {
      const NilpotentGradedAlgebra n = negative_part(sp21);
      const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
      expect(classify_rank4(s).type == Rank4Type::elliptic, "sp(2,1) model is elliptic");
    }
    {
      const NilpotentGradedAlgebra n = negative_part(sp6);
      const SymbolAlgebra s = symbol_at(model_fields(n), origin(n.dim()));
      expect(classify_rank4(s).type == Rank4Type::hyperbolic, "sp(6,R) model is hyperbolic");
    }
    return std::string("(2,3,5), (3,6), (4,10), (4,7)x2; elliptic/hyperbolic split");
  });

  criterion(10, "complex invariants: d^2 = 0 and per-homogeneity Euler characteristic", [&] {
    for (const auto* g : {&g2, &so3, &so4, &sp6, &sp21})
      for (int q = 0; q <= 3; ++q)
        for (int h = -4 * g->k(); h <= 4 * g->k(); ++h) {
          const CochainComplexSlice s = cochain_differential(*g, q, h);
          if (s.space_dim == 0) continue;
          expect((s.d_out * s.d_in).is_zero(),
                 g->name() + " d^2 at (q,h)=(" + std::to_string(q) + "," + std::to_string(h) + ")");
        }
    for (const auto* g : {&g2, &so3}) {
      std::map<int, long> chi_c, chi_h;
      for (int q = 0; q <= g->dim_negative(); ++q) {
        const int sign = (q % 2 == 0) ? 1 : -1;
        for (int h = -6 * g->k(); h <= 6 * g->k(); ++h) {
          const CochainComplexSlice s = cochain_differential(*g, q, h);
          if (s.space_dim == 0) continue;
          chi_c[h] += sign * s.space_dim;
          chi_h[h] += sign * (s.space_dim - s.d_out.rank() - s.d_in.rank());
        }
      }
      expect(chi_c == chi_h, g->name() + " Euler identity per homogeneity");
    }
    return std::string("d^2 = 0 on all computed slices; Euler identity for g2 and so(4,3)");
  });

  int failed = 0;
  for (const auto& c : results) failed += c.pass ? 0 : 1;
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria pass"
                            : "ACCEPTANCE: " + std::to_string(failed) + " criterion(s) FAILED")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
