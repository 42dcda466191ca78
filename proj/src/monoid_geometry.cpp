#include "umrow/monoid_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace umrow {

namespace {

constexpr std::size_t kMaxBoxPoints = 20'000'000;

bool same_sign_or_zero(const std::vector<long long>& values, int sign) {
  return std::all_of(values.begin(), values.end(),
                     [sign](long long v) { return v * sign >= 0; });
}

std::vector<QVec> to_rational_rows(const std::vector<Vec>& rows) {
  std::vector<QVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

// Integer vectors spanning the orthogonal complement of `rows` in Q^n.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& rows, int n) {
  std::vector<Vec> out;
  for (const auto& q : nullspace(to_rational_rows(rows), n)) out.push_back(primitive(q));
  return out;
}

// Calls f on every subset of {0..n-1} of size k, as an index vector.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls f on every integer point of the box [lo, hi].
void for_each_box_point(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& f) {
  std::size_t count = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (hi[j] < lo[j]) return;
    count *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    require(count <= kMaxBoxPoints, ErrorKind::DeskScaleLimit,
            "enumeration box exceeds the desk-scale limit");
  }
  Vec x(lo);
  while (true) {
    f(x);
    std::size_t j = 0;
    while (j < x.size() && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == x.size()) return;
    ++x[j];
  }
}

long long floor_div(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long long ceil_div(const Rational& q) {
  Integer f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

Vec facet_sum(const RationalCone& cone) {
  Vec s(cone.ambient_rank, 0);
  for (const auto& f : cone.facets) s = add(s, f);
  return s;
}

// Smallest k >= 1 with k * v in the lattice.
long long lattice_multiple(const std::vector<Vec>& hermite, const Vec& v) {
  for (long long k = 1; k <= 1'000'000; ++k) {
    if (in_lattice(hermite, scale(v, k))) return k;
  }
  fail(ErrorKind::Precondition, "ray does not meet the lattice");
}

bool rays_adjacent(const RationalCone& cone, std::size_t a, std::size_t b) {
  std::vector<Vec> common;
  for (const auto& f : cone.facets) {
    if (dot(f, cone.rays[a]) == 0 && dot(f, cone.rays[b]) == 0) common.push_back(f);
  }
  return rank(common) == cone.rank - 2;
}

void require_desk_rank(int r) {
  require(r <= kDeskScaleRank, ErrorKind::DeskScaleLimit,
          "rank exceeds the desk-scale limit of 4");
}

}  // namespace

bool RationalCone::in_span(const QVec& x) const {
  return std::all_of(span_equations.begin(), span_equations.end(),
                     [&](const Vec& e) { return dot(e, x) == 0; });
}

bool RationalCone::contains(const Vec& x) const {
  for (const auto& e : span_equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains(const QVec& x) const {
  if (!in_span(x)) return false;
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Vec& f) { return dot(f, x) >= 0; });
}

bool RationalCone::in_relative_interior(const Vec& x) const {
  for (const auto& e : span_equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets)
    if (dot(f, x) <= 0) return false;
  return true;
}

RationalCone cone_of(int ambient_rank, const std::vector<Vec>& generators) {
  RationalCone cone;
  cone.ambient_rank = ambient_rank;
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    require(static_cast<int>(g.size()) == ambient_rank, ErrorKind::SizeMismatch,
            "generator length differs from the ambient rank");
    if (!is_zero(g)) gens.push_back(g);
  }
  cone.rank = rank(gens);
  cone.span_equations = gens.empty() ? orthogonal_complement({}, ambient_rank)
                                     : orthogonal_complement(gens, ambient_rank);
  if (cone.rank == 0) return cone;

  std::set<Vec> facets;
  for_each_subset(gens.size(), static_cast<std::size_t>(cone.rank - 1),
                  [&](const std::vector<std::size_t>& idx) {
                    std::vector<Vec> rows;
                    for (auto i : idx) rows.push_back(gens[i]);
                    if (rank(rows) != cone.rank - 1) return;
                    for (const auto& e : cone.span_equations) rows.push_back(e);
                    auto ns = nullspace(to_rational_rows(rows), ambient_rank);
                    if (ns.size() != 1) return;
                    Vec n = primitive(ns.front());
                    std::vector<long long> values;
                    for (const auto& g : gens) values.push_back(dot(n, g));
                    if (same_sign_or_zero(values, 1)) {
                      facets.insert(n);
                    } else if (same_sign_or_zero(values, -1)) {
                      facets.insert(scale(n, -1));
                    }
                  });
  cone.facets.assign(facets.begin(), facets.end());
  cone.pointed = rank(cone.facets) == cone.rank;
  if (!cone.pointed) return cone;

  std::set<Vec> rays;
  for (const auto& g : gens) {
    std::vector<Vec> tight;
    for (const auto& f : cone.facets)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight) == cone.rank - 1) rays.insert(primitive(g));
  }
  cone.rays.assign(rays.begin(), rays.end());
  return cone;
}

std::vector<ConeFace> faces(const RationalCone& cone) {
  require(cone.pointed, ErrorKind::PositivityRequired, "faces need a pointed cone");
  require(cone.facets.size() <= 20, ErrorKind::DeskScaleLimit, "too many facets");
  std::set<std::vector<std::size_t>> seen;
  std::vector<ConeFace> out;
  const std::size_t nf = cone.facets.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << nf); ++mask) {
    std::vector<std::size_t> ray_idx;
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
      bool on_all = true;
      for (std::size_t f = 0; f < nf && on_all; ++f) {
        if ((mask >> f & 1) && dot(cone.facets[f], cone.rays[r]) != 0) on_all = false;
      }
      if (on_all) ray_idx.push_back(r);
    }
    if (!seen.insert(ray_idx).second) continue;
    ConeFace face;
    for (auto r : ray_idx) face.rays.push_back(cone.rays[r]);
    for (std::size_t f = 0; f < nf; ++f) {
      bool tight = std::all_of(face.rays.begin(), face.rays.end(),
                               [&](const Vec& r) { return dot(cone.facets[f], r) == 0; });
      if (tight) face.facets.push_back(f);
    }
    face.dimension = rank(face.rays);
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(),
            [](const ConeFace& a, const ConeFace& b) { return a.dimension < b.dimension; });
  return out;
}

bool in_face_interior(const RationalCone& cone, const ConeFace& face, const Vec& x) {
  if (!cone.contains(x)) return false;
  std::vector<bool> tight(cone.facets.size(), false);
  for (auto f : face.facets) tight[f] = true;
  for (std::size_t f = 0; f < cone.facets.size(); ++f) {
    long long v = dot(cone.facets[f], x);
    if (tight[f] ? v != 0 : v <= 0) return false;
  }
  return true;
}

struct AffineMonoid::Data {
  int ambient_rank = 0;
  std::vector<Vec> generators;
  RationalCone cone;
  std::vector<Vec> group_basis;
  Vec grading;
  bool is_free = false;
};

AffineMonoid::AffineMonoid(int ambient_rank, std::vector<Vec> generators) {
  require(ambient_rank >= 1, ErrorKind::Precondition, "ambient rank must be positive");
  std::set<Vec> seen;
  for (const auto& g : generators) {
    require(static_cast<int>(g.size()) == ambient_rank, ErrorKind::SizeMismatch,
            "generator length differs from the ambient rank");
    require(!is_zero(g), ErrorKind::Precondition, "generators must be nonzero");
    require(seen.insert(g).second, ErrorKind::Precondition, "generators must be distinct");
  }
  auto d = std::make_shared<Data>();
  d->ambient_rank = ambient_rank;
  d->generators = std::move(generators);
  d->cone = cone_of(ambient_rank, d->generators);
  d->group_basis = hermite_basis(d->generators);
  d->grading = d->cone.pointed ? facet_sum(d->cone) : Vec(ambient_rank, 0);
  d->is_free = umrow::rank(d->generators) == static_cast<int>(d->generators.size());
  data_ = std::move(d);
}

AffineMonoid AffineMonoid::free(int r) {
  std::vector<Vec> gens;
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return AffineMonoid(r, std::move(gens));
}

int AffineMonoid::ambient_rank() const { return data_->ambient_rank; }
const std::vector<Vec>& AffineMonoid::generators() const { return data_->generators; }
int AffineMonoid::rank() const { return data_->cone.rank; }
const RationalCone& AffineMonoid::cone() const { return data_->cone; }
const std::vector<Vec>& AffineMonoid::group_basis() const { return data_->group_basis; }
bool AffineMonoid::is_positive() const { return data_->cone.pointed; }
bool AffineMonoid::is_free() const { return data_->is_free; }
const Vec& AffineMonoid::grading() const { return data_->grading; }
long long AffineMonoid::degree(const Vec& x) const { return dot(data_->grading, x); }
bool AffineMonoid::in_group(const Vec& x) const { return in_lattice(data_->group_basis, x); }

bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
  if (a.data_ == b.data_) return true;
  if (a.ambient_rank() != b.ambient_rank()) return false;
  std::set<Vec> ga(a.generators().begin(), a.generators().end());
  std::set<Vec> gb(b.generators().begin(), b.generators().end());
  return ga == gb;
}

namespace {

// Generators e_1, ..., e_r in order.
bool is_standard_basis(const std::vector<Vec>& gens) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].size() != gens.size()) return false;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (gens[k][j] != (j == k ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

bool monoid_membership(const AffineMonoid& M, const Vec& x) {
  require(static_cast<int>(x.size()) == M.ambient_rank(), ErrorKind::SizeMismatch,
          "point length differs from the ambient rank");
  require(M.is_positive(), ErrorKind::PositivityRequired,
          "membership search needs a positive monoid");
  if (is_zero(x)) return true;
  if (is_standard_basis(M.generators()))
    return std::all_of(x.begin(), x.end(), [](long long v) { return v >= 0; });
  if (!M.cone().contains(x) || !M.in_group(x)) return false;
  if (M.is_free()) {
    const auto& gens = M.generators();
    std::vector<QVec> A(x.size(), QVec(gens.size()));
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t k = 0; k < gens.size(); ++k) A[j][k] = rat(gens[k][j]);
    auto c = solve(A, to_rational(x));
    return c && std::all_of(c->begin(), c->end(), [](const Rational& v) {
             return v >= 0 && v.get_den() == 1;
           });
  }
  std::map<Vec, bool> memo;
  std::function<bool(const Vec&)> search = [&](const Vec& y) -> bool {
    if (is_zero(y)) return true;
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    bool found = false;
    for (const auto& g : M.generators()) {
      Vec z = sub(y, g);
      if (M.cone().contains(z) && search(z)) {
        found = true;
        break;
      }
    }
    memo.emplace(y, found);
    return found;
  };
  return search(x);
}

bool interior(const AffineMonoid& M, const Vec& x) {
  return monoid_membership(M, x) && M.cone().in_relative_interior(x);
}

MembershipPredicate star_submonoid(const AffineMonoid& M) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "star submonoid needs positivity");
  return [M](const Vec& x) { return is_zero(x) || interior(M, x); };
}

std::vector<Vec> hilbert_basis(const RationalCone& cone, const std::vector<Vec>& lattice_gens) {
  require(cone.pointed, ErrorKind::PositivityRequired, "Hilbert basis needs a pointed cone");
  require_desk_rank(cone.rank);
  if (cone.rank == 0) return {};
  const auto L = hermite_basis(lattice_gens);
  const Vec alpha = facet_sum(cone);
  Rational bound = 0;
  for (const auto& r : cone.rays) bound += rat(lattice_multiple(L, r) * dot(alpha, r));

  Vec lo(cone.ambient_rank, 0), hi(cone.ambient_rank, 0);
  for (const auto& r : cone.rays) {
    Rational s = bound / rat(dot(alpha, r));
    for (int j = 0; j < cone.ambient_rank; ++j) {
      Rational c = s * rat(r[j]);
      lo[j] = std::min(lo[j], ceil_div(c));
      hi[j] = std::max(hi[j], floor_div(c));
    }
  }
  std::vector<Vec> points;
  for_each_box_point(lo, hi, [&](const Vec& x) {
    if (is_zero(x) || rat(dot(alpha, x)) > bound) return;
    if (cone.contains(x) && in_lattice(L, x)) points.push_back(x);
  });
  std::sort(points.begin(), points.end(), [&](const Vec& a, const Vec& b) {
    long long da = dot(alpha, a), db = dot(alpha, b);
    return da != db ? da < db : a < b;
  });
  std::vector<Vec> basis;
  for (const auto& x : points) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Vec& h) {
      Vec rest = sub(x, h);
      return !is_zero(rest) && cone.contains(rest) && in_lattice(L, rest);
    });
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

bool is_normal(const AffineMonoid& M) {
  require_desk_rank(M.rank());
  require(M.is_positive(), ErrorKind::PositivityRequired, "normality test needs positivity");
  for (const auto& h : hilbert_basis(M.cone(), M.generators())) {
    if (!monoid_membership(M, h)) return false;
  }
  return true;
}

SeminormalityResult is_seminormal(const AffineMonoid& M, std::optional<long long> bound) {
  require_desk_rank(M.rank());
  require(M.is_positive(), ErrorKind::PositivityRequired, "seminormality test needs positivity");
  SeminormalityResult result;
  long long max_coord = 1;
  for (const auto& g : M.generators())
    for (long long c : g) max_coord = std::max(max_coord, std::llabs(c));
  result.bound = bound.value_or(8 * max_coord);

  const RationalCone& C = M.cone();
  bool skipped = false;
  for (const auto& face : faces(C)) {
    if (face.dimension == 0) continue;
    std::vector<Vec> gens;
    for (const auto& g : M.generators()) {
      bool inside = std::all_of(face.facets.begin(), face.facets.end(),
                                [&](std::size_t f) { return dot(C.facets[f], g) == 0; });
      if (inside) gens.push_back(g);
    }
    const auto lattice = hermite_basis(gens);
    const auto d = static_cast<std::size_t>(face.dimension);
    std::set<Vec> tested;
    bool failed = false;
    for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
      if (failed) return;
      std::vector<Vec> B;
      for (auto i : idx) B.push_back(gens[i]);
      if (rank(B) != face.dimension) return;
      // Coordinates with respect to B: solve B^T c = z.
      std::vector<QVec> Bt(C.ambient_rank, QVec(d));
      for (std::size_t i = 0; i < d; ++i)
        for (int j = 0; j < C.ambient_rank; ++j) Bt[j][i] = rat(B[i][j]);
      Vec lo(C.ambient_rank, 0), hi(C.ambient_rank, 0);
      for (const auto& b : B) {
        for (int j = 0; j < C.ambient_rank; ++j) {
          if (b[j] < 0) lo[j] += b[j];
          else hi[j] += b[j];
        }
      }
      for_each_box_point(lo, hi, [&](const Vec& z) {
        if (failed || !in_lattice(lattice, z)) return;
        auto c = solve(Bt, to_rational(z));
        if (!c) return;
        for (const auto& ci : *c)
          if (ci < 0 || ci >= 1) return;
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
          Vec y(z);
          for (std::size_t i = 0; i < d; ++i)
            if (mask >> i & 1) y = add(y, B[i]);
          if (!in_face_interior(C, face, y) || !tested.insert(y).second) continue;
          long long norm = 0;
          for (long long v : y) norm = std::max(norm, std::llabs(v));
          if (norm > result.bound) {
            skipped = true;
            continue;
          }
          if (!monoid_membership(M, y)) {
            failed = true;
            result.witness = y;
            return;
          }
        }
      });
    });
    if (failed) {
      result.status = SeminormalStatus::False;
      result.certified = true;
      return result;
    }
  }
  result.certified = !skipped;
  result.status = skipped ? SeminormalStatus::Inconclusive : SeminormalStatus::True;
  return result;
}

bool is_phi_simplicial(const AffineMonoid& M) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "needs a positive monoid");
  return static_cast<int>(M.cone().rays.size()) == M.rank();
}

QVec section_point(const Vec& functional, const Rational& level, const Vec& x) {
  long long ax = dot(functional, x);
  require(ax > 0, ErrorKind::NotInteriorDual, "section functional is not positive at the point");
  Rational s = level / rat(ax);
  QVec out = to_rational(x);
  for (auto& c : out) c *= s;
  return out;
}

bool SectionPolytope::contains(const QVec& point) const {
  return dot(functional, point) == level && in_convex_hull(vertices, point);
}

SectionPolytope section_polytope(const AffineMonoid& M, const Vec& functional,
                                 const Rational& level) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "section polytope needs positivity");
  require(static_cast<int>(functional.size()) == M.ambient_rank(), ErrorKind::SizeMismatch,
          "functional length differs from the ambient rank");
  require(level > 0, ErrorKind::Precondition, "section level must be positive");
  SectionPolytope P{functional, level, {}};
  for (const auto& r : M.cone().rays) {
    require(dot(functional, r) > 0, ErrorKind::NotInteriorDual,
            "functional is not strictly positive on the cone");
    P.vertices.push_back(section_point(functional, level, r));
  }
  return P;
}

SectionPolytope section_polytope(const AffineMonoid& M) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "section polytope needs positivity");
  long long a = 1;
  for (const auto& r : M.cone().rays) a = std::lcm(a, M.degree(r));
  return section_polytope(M, M.grading(), Rational(static_cast<long>(a)));
}

bool in_convex_hull(const std::vector<QVec>& vertices, const QVec& x) {
  if (vertices.empty()) return false;
  const int dim = affine_dimension(vertices);
  // Carathéodory: x is in the hull iff it is in a simplex on dim + 1 of the
  // vertices spanning the affine hull.
  bool found = false;
  for_each_subset(vertices.size(), static_cast<std::size_t>(dim + 1),
                  [&](const std::vector<std::size_t>& idx) {
                    if (found) return;
                    std::vector<QVec> pts;
                    for (auto i : idx) pts.push_back(vertices[i]);
                    if (affine_dimension(pts) != dim) return;
                    std::vector<QVec> A(x.size() + 1, QVec(idx.size()));
                    QVec b(x.size() + 1);
                    for (std::size_t j = 0; j < x.size(); ++j) {
                      for (std::size_t k = 0; k < idx.size(); ++k) A[j][k] = pts[k][j];
                      b[j] = x[j];
                    }
                    for (std::size_t k = 0; k < idx.size(); ++k) A[x.size()][k] = 1;
                    b[x.size()] = 1;
                    auto lambda = solve(A, b);
                    if (!lambda) return;
                    found = std::all_of(lambda->begin(), lambda->end(),
                                        [](const Rational& l) { return l >= 0; });
                  });
  return found;
}

MembershipPredicate submonoid_of_polytope(const AffineMonoid& M, const SectionPolytope& phi,
                                          const std::vector<QVec>& polytope) {
  for (const auto& v : polytope) {
    require(phi.contains(v), ErrorKind::Containment, "polytope is not inside phi(M)");
  }
  return [M, phi, polytope](const Vec& x) {
    if (is_zero(x)) return true;
    if (!monoid_membership(M, x)) return false;
    return in_convex_hull(polytope, section_point(phi.functional, phi.level, x));
  };
}

std::vector<Vec> extremal_generators(const AffineMonoid& M) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "needs a positive monoid");
  require(is_normal(M), ErrorKind::Precondition, "extremal generators need a normal monoid");
  std::vector<Vec> out;
  for (const auto& r : M.cone().rays) {
    Vec m = scale(r, lattice_multiple(M.group_basis(), r));
    // Normality makes R_+ m cap M = Z_+ m.
    if (monoid_membership(M, m)) out.push_back(m);
  }
  return out;
}

int complexity(const AffineMonoid& M) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "complexity needs positivity");
  require_desk_rank(M.rank());
  if (M.rank() == 0) return 0;
  const auto P = section_polytope(M);
  const std::size_t n = P.vertices.size();
  require(n <= kDeskScaleVertices, ErrorKind::DeskScaleLimit, "too many vertices");
  std::map<std::size_t, int> memo;
  auto dim_of = [&](std::size_t mask) {
    std::vector<QVec> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) pts.push_back(P.vertices[i]);
    return affine_dimension(pts);
  };
  std::function<int(std::size_t)> peel = [&](std::size_t mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int dim = dim_of(mask);
    int best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      std::size_t rest = mask & ~(std::size_t{1} << i);
      if (dim_of(rest) == dim - 1) best = std::max(best, 1 + peel(rest));
    }
    memo.emplace(mask, best);
    return best;
  };
  return M.rank() - peel((std::size_t{1} << n) - 1);
}

PyramidalDecomposition pyramidal_decomposition(const AffineMonoid& M, const Vec& apex) {
  const auto extremal = extremal_generators(M);
  require(std::find(extremal.begin(), extremal.end(), apex) != extremal.end(),
          ErrorKind::Precondition, "apex is not an extremal generator");
  const RationalCone& C = M.cone();
  require(C.rank >= 2, ErrorKind::DegenerateDecomposition,
          "a point admits no pyramidal decomposition");
  const auto P = section_polytope(M);
  const std::size_t n = C.rays.size();
  const std::size_t t = static_cast<std::size_t>(
      std::find(C.rays.begin(), C.rays.end(), primitive(apex)) - C.rays.begin());

  auto values = [&](const Vec& delta) {
    std::vector<Rational> v;
    for (const auto& w : P.vertices) v.push_back(dot(delta, w));
    return v;
  };

  std::optional<Vec> delta;
  {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j)
      if (j != t && rays_adjacent(C, t, j)) rows.push_back(C.rays[j]);
    if (rank(rows) == C.rank - 1) {
      for (const auto& e : C.span_equations) rows.push_back(e);
      auto ns = nullspace(to_rational_rows(rows), C.ambient_rank);
      if (ns.size() == 1) {
        Vec d = primitive(ns.front());
        if (dot(d, C.rays[t]) < 0) d = scale(d, -1);
        auto v = values(d);
        bool negative = std::any_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; });
        if (dot(d, C.rays[t]) > 0 && negative) delta = d;
      }
    }
  }
  if (!delta) {
    Vec beta(C.ambient_rank, 0);
    for (const auto& f : C.facets)
      if (dot(f, C.rays[t]) == 0) beta = sub(beta, f);
    std::optional<Rational> least;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == t) continue;
      Rational v = -dot(beta, P.vertices[j]);
      if (!least || v < *least) least = v;
    }
    require(least && *least > 0, ErrorKind::DegenerateDecomposition,
            "no separating hyperplane at this apex");
    Rational tau = *least / (2 * P.level);
    QVec d = to_rational(beta);
    for (int j = 0; j < C.ambient_rank; ++j) d[j] += tau * rat(P.functional[j]);
    delta = primitive(d);
  }

  const auto v = values(*delta);
  SectionPolytope common{P.functional, P.level, {}};
  SectionPolytope pyramid{P.functional, P.level, {P.vertices[t]}};
  SectionPolytope gamma{P.functional, P.level, {}};
  std::set<QVec> on_h;
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) on_h.insert(P.vertices[j]);
    else if (v[j] < 0) gamma.vertices.push_back(P.vertices[j]);
    else
      require(j == t, ErrorKind::DegenerateDecomposition,
              "a second vertex lies on the apex side");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (v[a] * v[b] >= 0 || !rays_adjacent(C, a, b)) continue;
      Rational s = v[a] / (v[a] - v[b]);
      QVec x(P.vertices[a]);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += s * (P.vertices[b][j] - P.vertices[a][j]);
      on_h.insert(x);
    }
  }
  common.vertices.assign(on_h.begin(), on_h.end());
  for (const auto& h : common.vertices) {
    pyramid.vertices.push_back(h);
    gamma.vertices.push_back(h);
  }
  const int dim = P.dimension();
  require(!common.vertices.empty() && pyramid.dimension() == dim && gamma.dimension() == dim,
          ErrorKind::DegenerateDecomposition, "decomposition parts are not equi-dimensional");
  return PyramidalDecomposition{apex, P, pyramid, gamma, common, *delta};
}

}  // namespace umrow
