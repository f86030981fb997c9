#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidity/complex.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/polytope.hpp"

namespace rigidity {

/// Monomial u_{J\L} v_L of R*(K); L must be a face of K inside J.
struct KoszulMonomial {
  Mask j = 0;
  Mask l = 0;
  int degree() const { return popcount(j) + popcount(l); }
  friend auto operator<=>(const KoszulMonomial&, const KoszulMonomial&) = default;
};

/// Product of monomials in R*(K) as (sign, monomial); sign 0 means zero.
std::pair<int, KoszulMonomial> multiply(const SimplicialComplex& k, KoszulMonomial a, KoszulMonomial b);

/// The multidegree-J summand of R*(K): cochains at level l are spanned by
/// u_{J\L} v_L with |L| = l, in total degree |J| + l.
struct RBlock {
  Mask j = 0;
  std::vector<std::vector<Mask>> basis;  // basis[l]: faces L inside J with |L| = l
  std::vector<Matrix> d;                 // d[l]: level l -> level l + 1
  std::vector<SpotCohomology> spots;     // spots[l]

  int levels() const { return static_cast<int>(basis.size()); }
  int index_of(int level, Mask l) const;
};

RBlock r_block(const SimplicialComplex& k, Mask j, Coefficients c);

/// Cochain of one block at one level, indexed like RBlock::basis[level].
struct Cochain {
  Mask j = 0;
  int level = 0;
  std::vector<std::int64_t> coeffs;
};

/// Homogeneous pieces keyed by (multidegree, level); values are coordinates in
/// the generators of that spot (free first, then torsion).
struct RingElement {
  std::map<std::pair<Mask, int>, std::vector<std::int64_t>> parts;
  bool is_zero() const;
};

/// H*(Z_K) assembled from R*(K) blocks, computed lazily per multidegree.
/// Not safe for concurrent use: the block cache is filled on demand.
class MomentAngleCohomology {
 public:
  MomentAngleCohomology(SimplicialComplex k, Coefficients c);

  const SimplicialComplex& complex() const { return k_; }
  Coefficients coeffs() const { return c_; }
  int m() const { return k_.m(); }

  const RBlock& block(Mask j) const;
  const SpotCohomology& spot(Mask j, int level) const;
  int rank(Mask j, int level) const;

  /// Betti numbers b_0..b_{2m}; throws SizeGuard for m > 24.
  std::vector<int> betti() const;
  /// All (J, level) spots with nonzero cohomology, sorted.
  std::vector<std::pair<Mask, int>> nonzero_spots() const;
  /// Cross-checks every block against reduced cohomology of K_J; throws InternalMismatch.
  void verify_against_full_subcomplexes() const;

  RingElement generator(Mask j, int level, int g) const;
  RingElement unit() const { return generator(0, 0, 0); }
  RingElement classify(const Cochain& c) const;
  Cochain representative(const RingElement& x, Mask j, int level) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement scale(const RingElement& a, std::int64_t s) const;
  RingElement cup_product(const RingElement& a, const RingElement& b) const;
  Cochain cochain_product(const Cochain& a, const Cochain& b) const;

  /// Total dimension of H*(Z_K) (sum of generator counts).
  long total_dimension() const;

 private:
  SimplicialComplex k_;
  Coefficients c_;
  mutable std::vector<std::unique_ptr<RBlock>> dense_;
  mutable std::unordered_map<Mask, std::unique_ptr<RBlock>> sparse_;
};

/// Non-edges {i, j}, i < j; [u_i v_j] is a basis of H^3.
std::vector<std::pair<int, int>> h3_basis(const SimplicialComplex& k);

/// Class of u_i v_j.
RingElement h3_class(const MomentAngleCohomology& h, int i, int j);

/// True iff every product of two H^3 basis classes vanishes.
bool h3_square_trivial(const SimplePolytope& p);

struct DecomposabilityReport {
  std::map<int, int> total;            // degree -> dim H^degree (positive degrees)
  std::map<int, int> indecomposable;   // degree -> dim of the indecomposable quotient
};

/// Over a field (Z means rational ranks). `degrees` empty: all degrees.
DecomposabilityReport decomposability_report(const SimplePolytope& p, Coefficients c,
                                             const std::vector<int>& degrees = {});

/// dim {y : x y = 0} in the total cohomology; Z means rational dimension.
long annihilator_dim(const MomentAngleCohomology& h, const RingElement& x);

}  // namespace rigidity
