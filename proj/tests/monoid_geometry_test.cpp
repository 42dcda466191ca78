#include "umrow/monoid_geometry.hpp"

#include <gtest/gtest.h>

#include <set>

#include "geometry_oracles.hpp"
#include "test_support.hpp"
#include "umrow/corpus.hpp"

namespace umrow {
namespace {

using testing::Gen;
using testing::test_seed;

AffineMonoid veronese() { return AffineMonoid(2, {{2, 0}, {1, 1}, {0, 2}}); }
AffineMonoid numerical23() { return AffineMonoid(1, {{2}, {3}}); }

std::set<Vec> as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

QVec q(std::initializer_list<Rational> xs) { return QVec(xs); }

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parse;
}

TEST(MonoidGeometry, RejectsBadGenerators) {
  EXPECT_EQ(error_of([] { AffineMonoid(2, {{0, 0}}); }), ErrorKind::Precondition);
  EXPECT_EQ(error_of([] { AffineMonoid(2, {{1, 0}, {1, 0}}); }), ErrorKind::Precondition);
  EXPECT_EQ(error_of([] { AffineMonoid(2, {{1, 0, 0}}); }), ErrorKind::SizeMismatch);
}

TEST(MonoidGeometry, ConeOfSquare) {
  auto M = square_cone_monoid();
  EXPECT_EQ(M.rank(), 3);
  EXPECT_TRUE(M.is_positive());
  EXPECT_EQ(M.cone().rays.size(), 4u);
  EXPECT_EQ(as_set(M.cone().facets),
            (std::set<Vec>{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
  EXPECT_EQ(faces(M.cone()).size(), 10u);  // 0, 4 rays, 4 facets, the cone
}

TEST(MonoidGeometry, NonPointedCone) {
  AffineMonoid line(1, {{1}, {-1}});
  EXPECT_FALSE(line.is_positive());
  AffineMonoid half(2, {{1, 0}, {-1, 0}, {0, 1}});
  EXPECT_FALSE(half.is_positive());
  EXPECT_EQ(error_of([&] { monoid_membership(half, {0, 1}); }), ErrorKind::PositivityRequired);
  EXPECT_EQ(error_of([&] { hilbert_basis(half.cone(), half.generators()); }),
            ErrorKind::PositivityRequired);
}

TEST(MonoidGeometry, LowerDimensionalCone) {
  AffineMonoid M(3, {{1, 1, 0}, {2, 2, 1}});
  EXPECT_EQ(M.rank(), 2);
  EXPECT_TRUE(M.is_positive());
  EXPECT_EQ(M.cone().rays.size(), 2u);
  EXPECT_TRUE(monoid_membership(M, {3, 3, 1}));
  EXPECT_FALSE(monoid_membership(M, {1, 0, 0}));
  EXPECT_TRUE(is_normal(M));
}

TEST(MonoidGeometry, Membership) {
  EXPECT_TRUE(monoid_membership(veronese(), {3, 1}));
  EXPECT_TRUE(monoid_membership(veronese(), {0, 0}));
  EXPECT_FALSE(monoid_membership(veronese(), {1, 0}));
  EXPECT_FALSE(monoid_membership(numerical23(), {1}));
  EXPECT_TRUE(monoid_membership(numerical23(), {7}));
  EXPECT_FALSE(monoid_membership(numerical23(), {-2}));
}

TEST(MonoidGeometry, MembershipMatchesEnumeration) {
  for (const auto& [name, M] : monoid_corpus(7)) {
    if (M.ambient_rank() > 3) continue;
    Vec w = *oracle::positive_functional(M.generators(), M.ambient_rank());
    auto members = oracle::sums_up_to(M.generators(), w, 12);
    oracle::for_each_in_box(M.ambient_rank(), 3, [&](const Vec& x) {
      if (dot(w, x) > 12) return;
      EXPECT_EQ(monoid_membership(M, x), members.count(x) > 0) << name;
    });
  }
}

TEST(MonoidGeometry, InteriorAndStar) {
  auto Z2 = AffineMonoid::free(2);
  EXPECT_TRUE(interior(Z2, {1, 1}));
  EXPECT_FALSE(interior(Z2, {1, 0}));
  EXPECT_TRUE(interior(veronese(), {1, 1}));
  auto star = star_submonoid(Z2);
  EXPECT_TRUE(star({0, 0}));
  EXPECT_FALSE(star({1, 0}));
  EXPECT_TRUE(star({2, 3}));
}

TEST(MonoidGeometry, HilbertBasisExamples) {
  auto Z2 = AffineMonoid::free(2);
  EXPECT_EQ(as_set(hilbert_basis(Z2.cone(), {{1, 0}, {0, 1}})), (std::set<Vec>{{1, 0}, {0, 1}}));
  auto quadrant = cone_of(2, {{2, 0}, {0, 2}});
  EXPECT_EQ(as_set(hilbert_basis(quadrant, {{2, 0}, {1, 1}})),
            (std::set<Vec>{{2, 0}, {1, 1}, {0, 2}}));
  auto thin = cone_of(2, {{1, 0}, {1, 3}});
  EXPECT_EQ(as_set(hilbert_basis(thin, {{1, 0}, {0, 1}})),
            (std::set<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
}

TEST(MonoidGeometry, HilbertBasisMatchesParallelogramOracle) {
  Gen g(test_seed());
  for (int trial = 0; trial < 60; ++trial) {
    Vec r1 = primitive(g.vec(2, -6, 6));
    Vec r2 = primitive(g.vec(2, -6, 6));
    if (is_zero(r1) || is_zero(r2) || r1[0] * r2[1] - r1[1] * r2[0] == 0) continue;
    auto C = cone_of(2, {r1, r2});
    EXPECT_EQ(as_set(hilbert_basis(C, {{1, 0}, {0, 1}})), oracle::hilbert_basis_rank2(r1, r2))
        << "rays " << r1[0] << "," << r1[1] << " " << r2[0] << "," << r2[1];
  }
}

// Removing any Hilbert basis element breaks generation of that element.
TEST(MonoidGeometry, HilbertBasisIsIrredundant) {
  for (const auto& [name, M] : monoid_corpus(7)) {
    if (M.rank() > 3) continue;
    auto H = hilbert_basis(M.cone(), M.generators());
    for (std::size_t k = 0; k < H.size(); ++k) {
      std::vector<Vec> rest;
      for (std::size_t j = 0; j < H.size(); ++j)
        if (j != k) rest.push_back(H[j]);
      if (rest.empty()) continue;
      Vec w = *oracle::positive_functional(H, M.ambient_rank());
      auto sums = oracle::sums_up_to(rest, w, dot(w, H[k]));
      EXPECT_FALSE(sums.count(H[k])) << name;
    }
  }
}

TEST(MonoidGeometry, NormalityExamples) {
  EXPECT_TRUE(is_normal(AffineMonoid::free(3)));
  EXPECT_FALSE(is_normal(numerical23()));
  EXPECT_TRUE(is_normal(veronese()));
  EXPECT_TRUE(is_normal(square_cone_monoid()));
  EXPECT_EQ(error_of([] {
              is_normal(AffineMonoid(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                         {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
            }),
            ErrorKind::DeskScaleLimit);
}

TEST(MonoidGeometry, SeminormalityExamples) {
  auto r = is_seminormal(AffineMonoid::free(2));
  EXPECT_EQ(r.status, SeminormalStatus::True);
  EXPECT_TRUE(r.certified);
  r = is_seminormal(numerical23());
  EXPECT_EQ(r.status, SeminormalStatus::False);
  EXPECT_EQ(*r.witness, Vec{1});
  r = is_seminormal(AffineMonoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(r.status, SeminormalStatus::False);
  EXPECT_EQ(*r.witness, (Vec{1, 0}));
  r = is_seminormal(AffineMonoid(2, {{2, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(r.status, SeminormalStatus::True);
}

TEST(MonoidGeometry, SeminormalityBoundGivesInconclusive) {
  auto r = is_seminormal(AffineMonoid(2, {{2, 0}, {0, 1}, {1, 1}}), 0);
  EXPECT_EQ(r.status, SeminormalStatus::Inconclusive);
  EXPECT_FALSE(r.certified);
}

TEST(MonoidGeometry, CorpusAgreesWithDefinitionOracles) {
  for (const auto& [name, M] : monoid_corpus(7)) {
    const auto& gens = M.generators();
    const int r = M.ambient_rank();
    if (r > 3) {
      EXPECT_TRUE(is_normal(M));
      continue;
    }
    const bool normal = is_normal(M);
    EXPECT_EQ(normal, oracle::is_normal(gens, r)) << name;
    auto semi = is_seminormal(M);
    EXPECT_NE(semi.status, SeminormalStatus::Inconclusive) << name;
    EXPECT_EQ(semi.status == SeminormalStatus::True,
              oracle::is_seminormal(gens, r, 8))
        << name;
    if (normal) EXPECT_EQ(semi.status, SeminormalStatus::True) << name;
  }
}

TEST(MonoidGeometry, PhiSimplicial) {
  EXPECT_TRUE(is_phi_simplicial(AffineMonoid::free(3)));
  EXPECT_FALSE(is_phi_simplicial(square_cone_monoid()));
  EXPECT_TRUE(is_phi_simplicial(numerical23()));
}

TEST(MonoidGeometry, SectionPolytopes) {
  auto P = section_polytope(AffineMonoid::free(2), {1, 1}, 1);
  EXPECT_EQ(std::set<QVec>(P.vertices.begin(), P.vertices.end()),
            (std::set<QVec>{q({1, 0}), q({0, 1})}));
  P = section_polytope(square_cone_monoid(), {0, 0, 1}, 1);
  EXPECT_EQ(std::set<QVec>(P.vertices.begin(), P.vertices.end()),
            (std::set<QVec>{q({0, 0, 1}), q({1, 0, 1}), q({0, 1, 1}), q({1, 1, 1})}));
  P = section_polytope(veronese(), {1, 1}, 2);
  EXPECT_EQ(std::set<QVec>(P.vertices.begin(), P.vertices.end()),
            (std::set<QVec>{q({2, 0}), q({0, 2})}));
  EXPECT_EQ(error_of([] { section_polytope(AffineMonoid::free(2), {1, 0}, 1); }),
            ErrorKind::NotInteriorDual);
  for (const auto& [name, M] : monoid_corpus(7)) {
    auto D = section_polytope(M);
    for (const auto& v : D.vertices) {
      EXPECT_EQ(dot(D.functional, v), D.level) << name;
      for (const auto& c : v) EXPECT_EQ(c.get_den(), 1) << name;
    }
  }
}

TEST(MonoidGeometry, SubmonoidOfPolytope) {
  auto Z2 = AffineMonoid::free(2);
  auto P = section_polytope(Z2, {1, 1}, 1);
  auto MQ = submonoid_of_polytope(Z2, P, {q({0, 1}), q({Rational(1, 2), Rational(1, 2)})});
  EXPECT_TRUE(MQ({1, 3}));
  EXPECT_FALSE(MQ({3, 1}));
  EXPECT_TRUE(MQ({0, 0}));
  EXPECT_EQ(error_of([&] { submonoid_of_polytope(Z2, P, {q({2, -1})}); }), ErrorKind::Containment);
}

TEST(MonoidGeometry, SubmonoidOfWholePolytopeIsMembership) {
  Gen g(test_seed());
  for (const auto& [name, M] : monoid_corpus(7)) {
    if (M.ambient_rank() > 3) continue;
    auto P = section_polytope(M);
    auto MQ = submonoid_of_polytope(M, P, P.vertices);
    for (int t = 0; t < 40; ++t) {
      Vec x = g.vec(M.ambient_rank(), -2, 6);
      EXPECT_EQ(MQ(x), monoid_membership(M, x)) << name;
    }
  }
}

TEST(MonoidGeometry, DoubleDescription) {
  Gen g(test_seed());
  for (const auto& [name, M] : monoid_corpus(7)) {
    const auto& C = M.cone();
    for (const auto& r : C.rays)
      for (const auto& f : C.facets) EXPECT_GE(dot(f, r), 0) << name;
    for (int t = 0; t < 30; ++t) {
      Vec x = g.vec(M.ambient_rank(), -4, 6);
      EXPECT_EQ(C.contains(x), oracle::in_cone(C.rays, x)) << name;
      EXPECT_EQ(C.contains(x), oracle::in_cone(M.generators(), x)) << name;
    }
  }
}

TEST(MonoidGeometry, ExtremalGenerators) {
  EXPECT_EQ(as_set(extremal_generators(AffineMonoid::free(2))), (std::set<Vec>{{1, 0}, {0, 1}}));
  EXPECT_EQ(as_set(extremal_generators(veronese())), (std::set<Vec>{{2, 0}, {0, 2}}));
  EXPECT_EQ(as_set(extremal_generators(square_cone_monoid())),
            as_set(square_cone_monoid().generators()));
  EXPECT_EQ(error_of([] { extremal_generators(numerical23()); }), ErrorKind::Precondition);
}

TEST(MonoidGeometry, Complexity) {
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(complexity(AffineMonoid::free(r)), 0);
  EXPECT_EQ(complexity(square_cone_monoid()), 3);
  EXPECT_EQ(complexity(veronese()), 0);
  // Pyramid over a square: one apex peels, the square does not.
  AffineMonoid pyramid(4, {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1}, {0, 0, 1, 1}});
  EXPECT_EQ(complexity(pyramid), 3);
  for (const auto& [name, M] : monoid_corpus(7)) {
    EXPECT_EQ(complexity(M) == 0, is_phi_simplicial(M)) << name;
  }
}

void check_decomposition(const AffineMonoid& M, const PyramidalDecomposition& D) {
  const Vec& d = D.degree_functional;
  EXPECT_EQ(primitive(d), d);
  EXPECT_GT(dot(d, D.apex), 0);
  for (const auto& h : D.common.vertices) EXPECT_EQ(dot(d, h), 0);
  for (const auto& v : D.delta.vertices) EXPECT_GE(dot(d, v), 0);
  for (const auto& v : D.gamma.vertices) EXPECT_LE(dot(d, v), 0);
  for (const auto& v : D.whole.vertices) {
    EXPECT_TRUE(D.delta.contains(v) || D.gamma.contains(v));
  }
  for (const auto& v : D.delta.vertices) EXPECT_TRUE(D.whole.contains(v));
  for (const auto& v : D.gamma.vertices) EXPECT_TRUE(D.whole.contains(v));
  for (const auto& g : M.generators()) {
    QVec p = section_point(D.whole.functional, D.whole.level, g);
    long long s = dot(d, g);
    if (s > 0) EXPECT_TRUE(D.delta.contains(p));
    else if (s < 0) EXPECT_TRUE(D.gamma.contains(p));
    else EXPECT_TRUE(in_convex_hull(D.common.vertices, p));
  }
}

TEST(MonoidGeometry, PyramidalDecompositionExamples) {
  auto Z2 = AffineMonoid::free(2);
  auto D = pyramidal_decomposition(Z2, {1, 0});
  EXPECT_EQ(D.degree_functional, (Vec{1, -1}));
  EXPECT_EQ(D.common.vertices, (std::vector<QVec>{q({Rational(1, 2), Rational(1, 2)})}));
  check_decomposition(Z2, D);

  auto S = square_cone_monoid();
  D = pyramidal_decomposition(S, {0, 0, 1});
  EXPECT_EQ(D.degree_functional, (Vec{-1, -1, 1}));
  EXPECT_EQ(D.common.vertices.size(), 2u);
  check_decomposition(S, D);

  EXPECT_EQ(error_of([&] { pyramidal_decomposition(Z2, {1, 1}); }), ErrorKind::Precondition);
  EXPECT_EQ(error_of([] { pyramidal_decomposition(AffineMonoid::free(1), {1}); }),
            ErrorKind::DegenerateDecomposition);
}

TEST(MonoidGeometry, PyramidalDecompositionCorpus) {
  for (const auto& [name, M] : monoid_corpus(7)) {
    if (M.rank() < 2 || !is_normal(M)) continue;
    for (const auto& m : extremal_generators(M)) {
      SCOPED_TRACE(name);
      check_decomposition(M, pyramidal_decomposition(M, m));
    }
  }
}

TEST(MonoidGeometry, InConvexHull) {
  std::vector<QVec> tri = {q({0, 0}), q({2, 0}), q({0, 2})};
  EXPECT_TRUE(in_convex_hull(tri, q({1, 1})));
  EXPECT_FALSE(in_convex_hull(tri, q({Rational(3, 2), 1})));
  std::vector<QVec> seg = {q({0, 0, 1}), q({1, 1, 1})};
  EXPECT_TRUE(in_convex_hull(seg, q({Rational(1, 3), Rational(1, 3), 1})));
  EXPECT_FALSE(in_convex_hull(seg, q({Rational(1, 3), Rational(1, 4), 1})));
}

}  // namespace
}  // namespace umrow
