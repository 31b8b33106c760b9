#include "glat/cohomology.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <set>

#include "glat/errors.hpp"
#include "glat/rng.hpp"

namespace glat {

namespace {

void require_validated(const GradedLieAlgebra& g) {
  if (!g.validated()) throw InputError("operation requires a validated algebra");
}

using Key = std::pair<std::vector<int>, int>;

struct SliceBasis {
  std::vector<CochainBasisElem> elems;
  std::map<Key, int> index;

  int find(const std::vector<int>& inputs, int target) const {
    const auto it = index.find({inputs, target});
    return it == index.end() ? -1 : it->second;
  }
};

// All strictly increasing q-tuples over the negative indices, each paired
// with every target that makes homogeneity h. Tuples come out in
// lexicographic order, targets in basis order: slice bases are canonical.
SliceBasis slice_basis(const GradedLieAlgebra& g, int q, int h) {
  SliceBasis out;
  const auto& neg = g.negative_indices();
  std::vector<int> tuple;
  auto emit = [&](auto&& self, std::size_t start, int degsum) -> void {
    if (static_cast<int>(tuple.size()) == q) {
      for (int t : g.indices_of_degree(degsum + h)) {
        out.index[{tuple, t}] = static_cast<int>(out.elems.size());
        out.elems.push_back({tuple, t});
      }
      return;
    }
    for (std::size_t s = start; s < neg.size(); ++s) {
      tuple.push_back(neg[s]);
      self(self, s + 1, degsum + g.degree_of(neg[s]));
      tuple.pop_back();
    }
  };
  emit(emit, 0, 0);
  return out;
}

// d: C^q_h -> C^{q+1}_h between enumerated bases. Signs follow from
// evaluating d phi on the increasing output tuple:
//   d phi(X_0..X_q) = sum_i (-1)^i [X_i, phi(..^i..)]
//                   + sum_{i<j} (-1)^{i+j} phi([X_i,X_j], ..^i..^j..).
RatMatrix differential_matrix(const GradedLieAlgebra& g, const SliceBasis& from, const SliceBasis& to) {
  RatMatrix d(static_cast<int>(to.elems.size()), static_cast<int>(from.elems.size()));
  const auto& neg = g.negative_indices();

  for (int col = 0; col < static_cast<int>(from.elems.size()); ++col) {
    const auto& inputs = from.elems[col].inputs;
    const int t = from.elems[col].target;

    // insert an extra input j and bracket it into the target
    for (int j : neg) {
      if (std::binary_search(inputs.begin(), inputs.end(), j)) continue;
      std::vector<int> tuple = inputs;
      const auto pos_it = std::lower_bound(tuple.begin(), tuple.end(), j);
      const int pos = static_cast<int>(pos_it - tuple.begin());
      tuple.insert(pos_it, j);
      const int sign = (pos % 2 == 0) ? 1 : -1;
      for (const auto& term : g.bracket_basis(j, t)) {
        const int row = to.find(tuple, term.target);
        if (row >= 0) d.at(row, col) += sign * term.coeff;
      }
    }

    // replace one input u by a bracket pair (a, b) with [e_a, e_b] ~ c e_u
    for (std::size_t pu = 0; pu < inputs.size(); ++pu) {
      const int u = inputs[pu];
      std::vector<int> rest = inputs;
      rest.erase(rest.begin() + pu);
      for (std::size_t x = 0; x < neg.size(); ++x) {
        const int a = neg[x];
        if (std::binary_search(rest.begin(), rest.end(), a)) continue;
        for (std::size_t y = x + 1; y < neg.size(); ++y) {
          const int b = neg[y];
          if (std::binary_search(rest.begin(), rest.end(), b)) continue;
          Rat c(0);
          for (const auto& term : g.bracket_basis_raw(a, b))
            if (term.target == u) c = term.coeff;
          if (c == 0) continue;
          std::vector<int> tuple = rest;
          const int pa = static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), a) - tuple.begin());
          tuple.insert(tuple.begin() + pa, a);
          const int pb = static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), b) - tuple.begin());
          tuple.insert(tuple.begin() + pb, b);
          const int row = to.find(tuple, t);
          if (row < 0) continue;
          const int sign = ((pa + pb + static_cast<int>(pu)) % 2 == 0) ? 1 : -1;
          d.at(row, col) += sign * c;
        }
      }
    }
  }
  return d;
}

}  // namespace

CochainComplexSlice cochain_differential(const GradedLieAlgebra& g, int q, int h) {
  require_validated(g);
  if (q < 0) throw InputError("cochain degree q must be >= 0");
  CochainComplexSlice out;
  out.q = q;
  out.homogeneity = h;
  const SliceBasis here = slice_basis(g, q, h);
  const SliceBasis above = slice_basis(g, q + 1, h);
  out.basis = here.elems;
  out.space_dim = static_cast<int>(here.elems.size());
  out.d_out = differential_matrix(g, here, above);
  if (q == 0) {
    out.d_in = RatMatrix(out.space_dim, 0);
  } else {
    const SliceBasis below = slice_basis(g, q - 1, h);
    out.d_in = differential_matrix(g, below, here);
  }
  return out;
}

namespace {

// Homogeneities with a nonzero C^q slice.
std::vector<int> slice_homogeneities(const GradedLieAlgebra& g, int q) {
  std::set<int> sums;
  std::function<void(int, int)> rec = [&](int count, int acc) {
    if (count == q) {
      sums.insert(acc);
      return;
    }
    for (int d = -g.k(); d <= -1; ++d)
      if (g.component_dim(d) > 0) rec(count + 1, acc + d);
  };
  rec(0, 0);
  std::set<int> hs;
  for (int s : sums)
    for (const auto& [t, dim] : g.component_dims()) hs.insert(t - s);
  return {hs.begin(), hs.end()};
}

}  // namespace

std::map<int, int> cohomology_dims(const GradedLieAlgebra& g, int q) {
  require_validated(g);
  std::map<int, int> out;
  for (int h : slice_homogeneities(g, q)) {
    const CochainComplexSlice s = cochain_differential(g, q, h);
    if (s.space_dim == 0) continue;
    const int dim = s.space_dim - s.d_out.rank() - s.d_in.rank();
    GLAT_CHECK(dim >= 0, "negative cohomology dimension");
    if (dim > 0) out[h] = dim;
  }
  return out;
}

bool h1_negative_test(const GradedLieAlgebra& g) {
  require_validated(g);
  for (int h : slice_homogeneities(g, 1)) {
    if (h < 0) continue;
    const CochainComplexSlice s = cochain_differential(g, 1, h);
    if (s.space_dim == 0) continue;
    if (s.space_dim - s.d_out.rank() - s.d_in.rank() > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// H^2 module structure
// ---------------------------------------------------------------------------

namespace {

// rho_slice(a) on C^2_h for a degree-0 basis element:
//   (a.phi)(X,Y) = [a, phi(X,Y)] - phi([a,X],Y) - phi(X,[a,Y]).
RatMatrix g0_slice_action(const GradedLieAlgebra& g, const SliceBasis& basis, int a_global) {
  const int n = static_cast<int>(basis.elems.size());
  RatMatrix rho(n, n);
  for (int col = 0; col < n; ++col) {
    const auto& inputs = basis.elems[col].inputs;
    const int t = basis.elems[col].target;
    for (const auto& term : g.bracket_basis(a_global, t)) {
      const int row = basis.find(inputs, term.target);
      if (row >= 0) rho.at(row, col) += term.coeff;
    }
    for (std::size_t pu = 0; pu < inputs.size(); ++pu) {
      const int u = inputs[pu];
      for (int j : g.negative_indices()) {
        Rat c(0);
        for (const auto& term : g.bracket_basis(a_global, j))
          if (term.target == u) c = term.coeff;
        if (c == 0) continue;
        if (j != u && std::binary_search(inputs.begin(), inputs.end(), j)) continue;
        std::vector<int> tuple = inputs;
        tuple.erase(tuple.begin() + pu);
        const int pj = static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), j) - tuple.begin());
        tuple.insert(tuple.begin() + pj, j);
        const int row = basis.find(tuple, t);
        if (row < 0) continue;
        const int sign = ((static_cast<int>(pu) + pj) % 2 == 0) ? 1 : -1;
        rho.at(row, col) -= sign * c;
      }
    }
  }
  return rho;
}

}  // namespace

struct H2Module::Slice {
  CochainComplexSlice complex;
  RatMatrix cocycles;       // rows: ker d_out, canonical
  RatMatrix coboundaries;   // rows: im d_in, canonical
  std::vector<int> section; // rows of `cocycles` completing the coboundaries
  std::unique_ptr<RowSolver> solver;  // over [coboundaries; section rows]
  std::vector<RatMatrix> actions;     // per degree-0 basis element, quotient coords

  int dim() const { return static_cast<int>(section.size()); }
};

H2Module::H2Module(const GradedLieAlgebra& g) : g_(&g) {
  require_validated(g);
  for (int h : slice_homogeneities(g, 2)) {
    CochainComplexSlice cs = cochain_differential(g, 2, h);
    if (cs.space_dim == 0) continue;
    Slice s;
    s.cocycles = cs.d_out.kernel();
    s.coboundaries = cs.d_in.transpose().rref().mat;
    const int hdim = s.cocycles.rows() - s.coboundaries.rows();
    GLAT_CHECK(hdim >= 0, "coboundaries exceed cocycles");
    if (hdim == 0) continue;
    // Fixed complement of the coboundaries inside the cocycles: greedy over
    // the canonical cocycle rows.
    IncrementalSpan span(cs.space_dim);
    for (int r = 0; r < s.coboundaries.rows(); ++r) span.insert(s.coboundaries.row(r));
    for (int r = 0; r < s.cocycles.rows(); ++r) {
      if (static_cast<int>(s.section.size()) == hdim) break;
      if (span.insert(s.cocycles.row(r))) s.section.push_back(r);
    }
    GLAT_CHECK(static_cast<int>(s.section.size()) == hdim, "section size mismatch");
    RatMatrix stacked = s.coboundaries;
    for (int r : s.section) stacked = stacked.vstack(RatMatrix::from_rows({s.cocycles.row(r)}));
    s.solver = std::make_unique<RowSolver>(stacked);

    const SliceBasis basis = slice_basis(g, 2, h);
    for (int a : g.indices_of_degree(0)) {
      const RatMatrix rho = g0_slice_action(g, basis, a);
      RatMatrix act(hdim, hdim);
      for (int kcol = 0; kcol < hdim; ++kcol) {
        const auto v = mat_vec(rho, s.cocycles.row(s.section[kcol]));
        const auto coords = s.solver->coordinates(v);
        GLAT_CHECK(coords.has_value(), "g0 action leaves the cocycle space");
        for (int r = 0; r < hdim; ++r) act.at(r, kcol) = (*coords)[s.coboundaries.rows() + r];
      }
      s.actions.push_back(std::move(act));
    }
    s.complex = std::move(cs);
    slices_.emplace(h, std::move(s));
  }
}

H2Module::H2Module(H2Module&&) noexcept = default;
H2Module& H2Module::operator=(H2Module&&) noexcept = default;
H2Module::~H2Module() = default;

const H2Module::Slice& H2Module::slice(int h) const {
  const auto it = slices_.find(h);
  if (it == slices_.end()) throw InputError("H^2 vanishes at homogeneity " + std::to_string(h));
  return it->second;
}

std::vector<int> H2Module::homogeneities() const {
  std::vector<int> out;
  for (const auto& [h, s] : slices_) out.push_back(h);
  return out;
}

int H2Module::dim(int h) const {
  const auto it = slices_.find(h);
  return it == slices_.end() ? 0 : it->second.dim();
}

int H2Module::total_dim() const {
  int t = 0;
  for (const auto& [h, s] : slices_) t += s.dim();
  return t;
}

int H2Module::slice_space_dim(int h) const { return slice(h).complex.space_dim; }

std::vector<Rat> H2Module::project(const CohomologyClass& c) const {
  if (c.q != 2) throw InputError("H2Module handles q = 2 classes");
  const Slice& s = slice(c.homogeneity);
  if (static_cast<int>(c.cocycle.size()) != s.complex.space_dim)
    throw InputError("cocycle has wrong slice dimension");
  for (const auto& x : mat_vec(s.complex.d_out, c.cocycle))
    if (x != 0) throw InputError("vector is not a cocycle (d_out c != 0)");
  const auto coords = s.solver->coordinates(c.cocycle);
  GLAT_CHECK(coords.has_value(), "cocycle outside the cocycle space");
  std::vector<Rat> out(s.dim());
  for (int r = 0; r < s.dim(); ++r) out[r] = (*coords)[s.coboundaries.rows() + r];
  return out;
}

CohomologyClass H2Module::lift(int h, const std::vector<Rat>& coords) const {
  const Slice& s = slice(h);
  GLAT_CHECK(static_cast<int>(coords.size()) == s.dim(), "quotient coords size");
  std::vector<Rat> v(s.complex.space_dim, Rat(0));
  for (int r = 0; r < s.dim(); ++r) {
    if (coords[r] == 0) continue;
    const auto row = s.cocycles.row(s.section[r]);
    for (int j = 0; j < s.complex.space_dim; ++j)
      if (row[j] != 0) v[j] += coords[r] * row[j];
  }
  return CohomologyClass{2, h, std::move(v)};
}

const RatMatrix& H2Module::action(int h, int a_local) const {
  const Slice& s = slice(h);
  GLAT_CHECK(a_local >= 0 && a_local < static_cast<int>(s.actions.size()), "degree-0 index range");
  return s.actions[a_local];
}

RatMatrix H2Module::action_of(int h, const std::vector<Rat>& a_full) const {
  const Slice& s = slice(h);
  if (static_cast<int>(a_full.size()) != g_->dim()) throw InputError("element size mismatch");
  const auto& deg0 = g_->indices_of_degree(0);
  RatMatrix acc(s.dim(), s.dim());
  for (int i = 0; i < g_->dim(); ++i) {
    if (a_full[i] == 0) continue;
    if (g_->degree_of(i) != 0) throw InputError("element is not concentrated in degree 0");
    const int local =
        static_cast<int>(std::find(deg0.begin(), deg0.end(), i) - deg0.begin());
    acc = acc + s.actions[local].scaled(a_full[i]);
  }
  return acc;
}

CohomologyClass g0_action_on_h2(const H2Module& h2, const std::vector<Rat>& a,
                                const CohomologyClass& c) {
  const auto coords = h2.project(c);
  const RatMatrix rho = h2.action_of(c.homogeneity, a);
  return h2.lift(c.homogeneity, mat_vec(rho, coords));
}

CohomologyClass g0_action_on_h2(const GradedLieAlgebra& g, const std::vector<Rat>& a,
                                const CohomologyClass& c) {
  return g0_action_on_h2(H2Module(g), a, c);
}

int class_stabilizer_dim(const H2Module& h2, const CohomologyClass& c) {
  if (c.is_zero()) throw InputError("stabilizer of the zero class is excluded");
  const auto coords = h2.project(c);
  bool nonzero = false;
  for (const auto& x : coords) nonzero = nonzero || x != 0;
  if (!nonzero) throw InputError("class is a coboundary (zero in H^2)");
  const auto& g = h2.algebra();
  const int g0 = g.component_dim(0);
  const int n = static_cast<int>(coords.size());
  RatMatrix sys(n, g0);
  for (int a = 0; a < g0; ++a) {
    const auto v = mat_vec(h2.action(c.homogeneity, a), coords);
    for (int r = 0; r < n; ++r) sys.at(r, a) = v[r];
  }
  return sys.kernel().rows();
}

int class_stabilizer_dim(const GradedLieAlgebra& g, const CohomologyClass& c) {
  return class_stabilizer_dim(H2Module(g), c);
}

// ---------------------------------------------------------------------------
// Stabilizer probe
// ---------------------------------------------------------------------------

namespace {

// Complex vectors are realified pairs (x, y) ~ x + iy in Q^{2N};
// multiplication by i is J(x, y) = (-y, x). Kernels of rho~ - aI - bJ are
// automatically J-invariant, i.e. realified complex eigenspaces.
RatMatrix realified_shift(const RatMatrix& rho, long a, long b) {
  const int n = rho.rows();
  RatMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = rho.at(i, j);
      m.at(n + i, n + j) = rho.at(i, j);
    }
  for (int i = 0; i < n; ++i) {
    m.at(i, i) -= a;
    m.at(n + i, n + i) -= a;
    m.at(i, n + i) += b;  // (rho - a - bJ)(x, y): upper block rho x - a x + b y
    m.at(n + i, i) -= b;
  }
  return m;
}

long eigen_bound(const RatMatrix& rho) {
  Rat best(0);
  for (int i = 0; i < rho.rows(); ++i) {
    Rat s(0);
    for (int j = 0; j < rho.cols(); ++j) s += abs(rho.at(i, j));
    if (s > best) best = s;
  }
  mpz_class b;
  mpz_cdiv_q(b.get_mpz_t(), best.get_num().get_mpz_t(), best.get_den().get_mpz_t());
  return b.get_si();
}

struct ComplexCandidate {
  std::vector<Rat> re, im;  // quotient coordinates
  bool complex = false;
};

}  // namespace

StabilizerProbe max_stabilizer_probe(const GradedLieAlgebra& g, std::uint64_t seed, int trials) {
  const H2Module h2(g);
  if (h2.total_dim() == 0) throw InputError("H^2 vanishes, nothing to probe");
  const auto hs = h2.homogeneities();
  const int g0 = g.component_dim(0);

  std::vector<std::vector<Rat>> cartan;
  if (builtin_family(g.name())) cartan = builtin_cartan(g);

  StabilizerProbe best;
  best.best_dim = -1;

  auto consider = [&](int h, const ComplexCandidate& cand) {
    const int n = h2.dim(h);
    bool nonzero = false;
    for (const auto& x : cand.re) nonzero = nonzero || x != 0;
    for (const auto& x : cand.im) nonzero = nonzero || x != 0;
    if (!nonzero) return;
    // Unknowns (alpha, beta): rho(alpha + i beta)(x + iy) = 0, split into
    // real and imaginary rows.
    RatMatrix sys(2 * n, 2 * g0);
    for (int a = 0; a < g0; ++a) {
      const RatMatrix& rho = h2.action(h, a);
      const auto rx = mat_vec(rho, cand.re);
      const auto ry = mat_vec(rho, cand.im);
      for (int r = 0; r < n; ++r) {
        sys.at(r, a) = rx[r];
        sys.at(r, g0 + a) = -ry[r];
        sys.at(n + r, a) = ry[r];
        sys.at(n + r, g0 + a) = rx[r];
      }
    }
    const int kdim = sys.kernel().rows();
    GLAT_CHECK(kdim % 2 == 0, "complex stabilizer has odd real dimension");
    const int cdim = kdim / 2;
    ++best.candidates_tried;
    if (cdim > best.best_dim) {
      best.best_dim = cdim;
      best.homogeneity = h;
      best.witness_re = h2.lift(h, cand.re);
      best.witness_im = h2.lift(h, cand.im);
      best.witness_is_complex = cand.complex;
    }
  };

  for (int h : hs) {
    const int n = h2.dim(h);
    // Simultaneous eigenspaces of the Cartan elements over Q(i). The torus
    // spectra here lie in Z u iZ; if a decomposition comes out incomplete
    // the refinement for that element is skipped (the probe stays a lower
    // bound).
    std::vector<Subspace> pieces{Subspace::full(2 * n)};
    for (const auto& t : cartan) {
      const RatMatrix rho = h2.action_of(h, t);
      const long bound = eigen_bound(rho);
      std::vector<Subspace> eigenspaces;
      for (long a = -bound; a <= bound; ++a) {
        const RatMatrix k = realified_shift(rho, a, 0).kernel();
        if (k.rows() > 0) eigenspaces.push_back(Subspace::from_rows(2 * n, k));
      }
      for (long b = 1; b <= bound; ++b)
        for (int sign : {1, -1}) {
          const RatMatrix k = realified_shift(rho, 0, sign * b).kernel();
          if (k.rows() > 0) eigenspaces.push_back(Subspace::from_rows(2 * n, k));
        }
      std::vector<Subspace> refined;
      for (const auto& piece : pieces)
        for (const auto& e : eigenspaces) {
          const Subspace cut = intersect(piece, e);
          if (cut.dim() > 0) refined.push_back(cut);
        }
      int total = 0;
      for (const auto& p : refined) total += p.dim();
      if (total != 2 * n) continue;
      pieces = std::move(refined);
    }
    for (const auto& piece : pieces)
      for (int r = 0; r < piece.basis().rows(); ++r) {
        const auto row = piece.basis().row(r);
        ComplexCandidate cand;
        cand.re.assign(row.begin(), row.begin() + n);
        cand.im.assign(row.begin() + n, row.end());
        for (const auto& x : cand.im) cand.complex = cand.complex || x != 0;
        consider(h, cand);
      }
  }

  // Seeded random rational classes.
  Rng rng(Rng::mix(seed, 0x48325f1aULL));
  for (int trial = 0; trial < trials; ++trial) {
    const int h = hs[trial % hs.size()];
    ComplexCandidate cand;
    cand.re.resize(h2.dim(h));
    cand.im.assign(h2.dim(h), Rat(0));
    bool nonzero = false;
    for (auto& x : cand.re) {
      x = rat_of(rng.int_in(-3, 3));
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) cand.re[static_cast<std::size_t>(rng.below(cand.re.size()))] = 1;
    consider(h, cand);
  }

  GLAT_CHECK(best.best_dim >= 0, "probe found no candidates");
  return best;
}

}  // namespace glat
