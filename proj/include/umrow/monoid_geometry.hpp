#pragma once

// Affine monoids M = Z_+<g_1, ..., g_k> inside Z^r and the convex geometry of
// their cones: facets, faces, Hilbert bases, normality tests, the section
// polytope phi(M), complexity, and pyramidal decompositions.
//
// Additive notation throughout; the lattice origin plays the role of the
// monoid identity. All computations are exact and sized for rank <= 4.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "umrow/linalg.hpp"

namespace umrow {

inline constexpr int kDeskScaleRank = 4;
inline constexpr std::size_t kDeskScaleVertices = 12;

struct RationalCone {
  int ambient_rank = 0;
  int rank = 0;                      // dimension of the linear span
  bool pointed = true;
  std::vector<Vec> rays;             // primitive extreme ray vectors
  std::vector<Vec> facets;           // primitive inward normals, inside the span
  std::vector<Vec> span_equations;   // integer functionals cutting out the span

  bool in_span(const QVec& x) const;
  bool contains(const Vec& x) const;
  bool contains(const QVec& x) const;
  bool in_relative_interior(const Vec& x) const;
};

// Cone generated by `generators` in Q^ambient_rank.
RationalCone cone_of(int ambient_rank, const std::vector<Vec>& generators);

// A face of a pointed cone, described by the facets containing it.
struct ConeFace {
  std::vector<std::size_t> facets;   // indices into RationalCone::facets
  std::vector<Vec> rays;
  int dimension = 0;
};

// All faces of a pointed cone, including {0} and the cone itself.
std::vector<ConeFace> faces(const RationalCone& cone);

// True iff x lies in the relative interior of `face` of `cone`.
bool in_face_interior(const RationalCone& cone, const ConeFace& face, const Vec& x);

using MembershipPredicate = std::function<bool(const Vec&)>;

class AffineMonoid {
 public:
  AffineMonoid(int ambient_rank, std::vector<Vec> generators);

  // Z_+^r.
  static AffineMonoid free(int r);

  int ambient_rank() const;
  const std::vector<Vec>& generators() const;
  // rank(M) = dim of gp(M) (x) Q.
  int rank() const;
  const RationalCone& cone() const;
  // Hermite basis of gp(M).
  const std::vector<Vec>& group_basis() const;
  bool is_positive() const;
  bool is_free() const;

  // Integer functional, strictly positive on M \ {0} (positive monoids only):
  // the sum of the facet normals.
  const Vec& grading() const;
  long long degree(const Vec& x) const;
  bool in_group(const Vec& x) const;

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b);
  friend bool operator!=(const AffineMonoid& a, const AffineMonoid& b) {
    return !(a == b);
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

bool monoid_membership(const AffineMonoid& M, const Vec& x);
bool interior(const AffineMonoid& M, const Vec& x);
// x = 0 or x in int(M).
MembershipPredicate star_submonoid(const AffineMonoid& M);

// Minimal generating set of C cap L, where L is spanned by `lattice_gens`.
std::vector<Vec> hilbert_basis(const RationalCone& cone,
                               const std::vector<Vec>& lattice_gens);

bool is_normal(const AffineMonoid& M);

enum class SeminormalStatus { True, False, Inconclusive };

struct SeminormalityResult {
  SeminormalStatus status = SeminormalStatus::Inconclusive;
  // True when every candidate the face criterion needs was within the bound.
  bool certified = false;
  // A point of gp(F cap M) in int(F), outside M, when status is False.
  std::optional<Vec> witness;
  long long bound = 0;
};

// Face criterion: (F cap M)_* is normal for every face F. The candidate set
// is exact; `bound` caps the sup-norm of the candidates that get tested and
// defaults to 8 * (max |generator coordinate|).
SeminormalityResult is_seminormal(const AffineMonoid& M,
                                  std::optional<long long> bound = std::nullopt);

// cone(M) is simplicial.
bool is_phi_simplicial(const AffineMonoid& M);

struct SectionPolytope {
  Vec functional;
  Rational level;
  std::vector<QVec> vertices;

  bool contains(const QVec& point) const;
  int dimension() const { return affine_dimension(vertices); }
};

// phi(x) = R_+ x cap {functional = level}; x must be nonzero in the cone.
QVec section_point(const Vec& functional, const Rational& level, const Vec& x);

// phi(M) for a user-chosen hyperplane; functional must be in int(C*).
SectionPolytope section_polytope(const AffineMonoid& M, const Vec& functional,
                                 const Rational& level);
// Default hyperplane: sum of facet normals at the lcm of its ray values.
SectionPolytope section_polytope(const AffineMonoid& M);

bool in_convex_hull(const std::vector<QVec>& vertices, const QVec& x);

// M(Q) for Q inside the section polytope `phi`.
MembershipPredicate submonoid_of_polytope(const AffineMonoid& M,
                                          const SectionPolytope& phi,
                                          const std::vector<QVec>& polytope);

// Normal M only: the M-generator of each vertex ray of phi(M).
std::vector<Vec> extremal_generators(const AffineMonoid& M);

// k(M) by exhaustive apex peeling of phi(M). Purely geometric, so it is
// also evaluated for non-normal positive monoids.
int complexity(const AffineMonoid& M);

struct PyramidalDecomposition {
  Vec apex;
  SectionPolytope whole;
  SectionPolytope delta;    // pyramid over `common` with apex phi(apex)
  SectionPolytope gamma;
  SectionPolytope common;   // H = delta cap gamma
  // Primitive, zero on H, >= 0 on delta, <= 0 on gamma.
  Vec degree_functional;
};

PyramidalDecomposition pyramidal_decomposition(const AffineMonoid& M,
                                               const Vec& apex);

}  // namespace umrow
