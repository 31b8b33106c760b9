#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "glat/families.hpp"
#include "glat/graded_algebra.hpp"

namespace glat {

/// Basis cochain of C^q(g_-, g): e_{i1} ^ ... ^ e_{iq} |-> e_t, with the
/// input tuple strictly increasing over g_- basis indices. Its homogeneity
/// is deg(t) - sum deg(i_s).
struct CochainBasisElem {
  std::vector<int> inputs;
  int target = 0;
};

/// The Chevalley-Eilenberg differential around the (q, h) slice:
/// d_in comes from C^{q-1}_h, d_out goes to C^{q+1}_h, and
/// dim H^q_h = space_dim - rank(d_out) - rank(d_in).
struct CochainComplexSlice {
  int q = 0;
  int homogeneity = 0;
  int space_dim = 0;
  std::vector<CochainBasisElem> basis;
  RatMatrix d_in;   // space_dim rows
  RatMatrix d_out;  // space_dim cols
};

/// Requires a validated algebra and q >= 0; throws InputError otherwise.
CochainComplexSlice cochain_differential(const GradedLieAlgebra& g, int q, int h);

/// homogeneity -> dim H^q, nonzero entries only. Exact.
std::map<int, int> cohomology_dims(const GradedLieAlgebra& g, int q);

/// True iff dim H^1 = 0 at every homogeneity >= 0.
bool h1_negative_test(const GradedLieAlgebra& g);

struct CohomologyClass {
  int q = 2;
  int homogeneity = 0;
  std::vector<Rat> cocycle;  // slice coordinates; d_out * cocycle = 0

  bool is_zero() const {
    for (const auto& x : cocycle)
      if (x != 0) return false;
    return true;
  }
};

/// H^2(g_-, g) with its homogeneity decomposition, quotient coordinates
/// modulo coboundaries (complement fixed by pivot order), and the g_0
/// action. Build once, query freely.
class H2Module {
public:
  explicit H2Module(const GradedLieAlgebra& g);
  H2Module(H2Module&&) noexcept;
  H2Module& operator=(H2Module&&) noexcept;
  ~H2Module();

  const GradedLieAlgebra& algebra() const { return *g_; }
  std::vector<int> homogeneities() const;  // slices with dim H^2 > 0
  int dim(int h) const;
  int total_dim() const;
  int slice_space_dim(int h) const;

  /// Quotient coordinates of a cocycle (must satisfy d_out c = 0).
  std::vector<Rat> project(const CohomologyClass& c) const;
  /// Canonical representative of quotient coordinates.
  CohomologyClass lift(int h, const std::vector<Rat>& coords) const;

  /// Action of the degree-0 basis element with local index a (position in
  /// indices_of_degree(0)) on H^2_h quotient coordinates.
  const RatMatrix& action(int h, int a_local) const;
  /// Action of an arbitrary degree-0 element given in full coordinates.
  RatMatrix action_of(int h, const std::vector<Rat>& a_full) const;

private:
  struct Slice;
  const Slice& slice(int h) const;
  const GradedLieAlgebra* g_;
  std::map<int, Slice> slices_;
};

/// (a . phi)(X, Y) = [a, phi(X,Y)] - phi([a,X],Y) - phi(X,[a,Y]), reduced
/// modulo coboundaries to the canonical representative. a must be a
/// degree-0 element (full coordinates).
CohomologyClass g0_action_on_h2(const GradedLieAlgebra& g, const std::vector<Rat>& a,
                                const CohomologyClass& c);
CohomologyClass g0_action_on_h2(const H2Module& h2, const std::vector<Rat>& a,
                                const CohomologyClass& c);

/// dim { a in g_0 : a . c = 0 in H^2 }. c must be nonzero.
int class_stabilizer_dim(const GradedLieAlgebra& g, const CohomologyClass& c);
int class_stabilizer_dim(const H2Module& h2, const CohomologyClass& c);

struct StabilizerProbe {
  int best_dim = 0;
  int homogeneity = 0;
  /// Witness class attaining best_dim. For split Cartan subalgebras this is
  /// rational (witness_im empty); for compact torus directions the witness
  /// lives over Q(i) and best_dim is the stabilizer dimension over the
  /// complexification (equal to the rational one whenever the witness is
  /// real, since a rational linear system has the same kernel dimension
  /// over every extension field).
  CohomologyClass witness_re;
  CohomologyClass witness_im;
  bool witness_is_complex = false;
  int candidates_tried = 0;
};

/// Lower bound for the maximal stabilizer dimension of a nonzero H^2 class:
/// enumerates simultaneous eigenvectors of the built-in Cartan subalgebra
/// (over Q(i), realified) plus `trials` seeded random rational classes.
/// Throws InputError when H^2 = 0.
StabilizerProbe max_stabilizer_probe(const GradedLieAlgebra& g, std::uint64_t seed, int trials);

}  // namespace glat
