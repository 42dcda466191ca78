#include "umrow/reduction.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umrow/row_corpus.hpp"
#include "word_oracle.hpp"

namespace umrow {
namespace {

using testing::test_seed;
using R = RingElement;
using MR = MonoidRingElement;

const FormKind kSp4{Form::Symplectic, 2};
const FormKind kO4{Form::Orthogonal, 2};

Row<R> row(const Ring& ring, std::vector<long> v) {
  Row<R> out;
  for (long x : v) out.push_back(ring.element(x));
  return out;
}

template <class E>
UnimodularRow<E> urow(const FormKind& f, Row<E> v, std::optional<Ideal> I = {}) {
  return {f, std::move(v), {}, std::move(I)};
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

// Replays the transcript through the matrix oracle and checks e_1.
template <class E>
::testing::AssertionResult sound(const Transcript<E>& t) {
  if (oracle::replay(t.input, t.word, t.form) != t.output)
    return ::testing::AssertionFailure() << "oracle replay differs from the claim";
  if (!is_e1(t.output)) return ::testing::AssertionFailure() << "output is not e1";
  return ::testing::AssertionSuccess();
}

// Walks the transcript token by token carrying a witness s with u.s = 1:
// u -> u T, s -> s (T^{-1})^T. Checks the dot product and, for orthogonal
// forms, isotropy at every step.
template <class E>
::testing::AssertionResult intermediates_ok(const Transcript<E>& t, Row<E> s) {
  Row<E> u = t.input;
  const auto c = u[0].carrier();
  for (const auto& tok : expand(t.word)) {
    Word<E> one{WordItem<E>{tok, {}, {}}};
    u = oracle::replay(u, one, t.form);
    auto inv = oracle::matrix(one, t.form, c, true);
    Row<E> next(s.size(), E::zero(c));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < s.size(); ++k) next[i] = next[i] + inv[i][k] * s[k];
    s = next;
    if (!dot_row(u, s).is_one()) return ::testing::AssertionFailure() << "witness lost";
    if (!t.form.symplectic() && !quadratic_value(u).is_zero())
      return ::testing::AssertionFailure() << "isotropy lost";
  }
  return ::testing::AssertionSuccess();
}

// ---- witnesses -------------------------------------------------------

TEST(CheckUnimodular, Examples) {
  Ring Z4 = Ring::integers_mod(4);
  auto s = check_unimodular(row(Z4, {3, 2, 2, 2}));
  ASSERT_TRUE(s);
  EXPECT_TRUE(dot_row(row(Z4, {3, 2, 2, 2}), *s).is_one());
  EXPECT_EQ(*check_unimodular(row(Z4, {1, 0, 0, 0})), row(Z4, {1, 0, 0, 0}));
  EXPECT_FALSE(check_unimodular(row(Z4, {2, 0, 2, 2})));

  Ring Z = Ring::integers();
  auto sz = check_unimodular(row(Z, {6, 10, 15, 0}));
  ASSERT_TRUE(sz);
  EXPECT_TRUE(dot_row(row(Z, {6, 10, 15, 0}), *sz).is_one());
  EXPECT_FALSE(check_unimodular(row(Z, {6, 10, 0, 0})));

  Ring Q = Ring::rationals();
  EXPECT_FALSE(check_unimodular(row(Q, {0, 0, 0, 0})));
  EXPECT_TRUE(check_unimodular(row(Q, {0, 0, 3, 0})));
}

TEST(CheckUnimodular, MatchesGcdOracleOverZmod12) {
  Ring Z12 = Ring::integers_mod(12);
  for (long a = 0; a < 12; ++a)
    for (long b = 0; b < 12; ++b)
      for (long c : {0L, 4L, 9L}) {
        Integer g = 12;
        for (long x : {a, b, c}) mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), x);
        auto u = row(Z12, {a, b, c, 0});
        auto s = check_unimodular(u);
        EXPECT_EQ(s.has_value(), g == 1) << a << " " << b << " " << c;
        if (s) EXPECT_TRUE(dot_row(u, *s).is_one());
      }
}

TEST(CheckUnimodular, MonoidRings) {
  MonoidRing A{Ring::rationals(), AffineMonoid::free(1)};
  MR t = MR::monomial(A, {1});
  MR one = MR::one(A), zero = MR::zero(A);
  Row<MR> u{t, one - t, zero, zero};
  auto s = check_unimodular(u);
  ASSERT_TRUE(s);
  EXPECT_TRUE(dot_row(u, *s).is_one());
  EXPECT_FALSE(check_unimodular(Row<MR>{t, t * t, zero, zero}));

  // (t^2, 1 + t^3) over F_2[<2,3>]: 1 = (1 + t^3)^2 + t^2 t^4.
  MonoidRing B{Ring::integers_mod(2), AffineMonoid(1, {{2}, {3}})};
  MR t2 = MR::monomial(B, {2}), t3 = MR::monomial(B, {3});
  Row<MR> v{t2, MR::one(B) + t3, MR::zero(B), MR::zero(B)};
  auto w = check_unimodular(v);
  ASSERT_TRUE(w);
  EXPECT_TRUE(dot_row(v, *w).is_one());
  EXPECT_FALSE(check_unimodular(Row<MR>{t2, t3, MR::zero(B), MR::zero(B)}, 8));
}

// ---- field and pivot -------------------------------------------------

TEST(ReduceOverField, Examples) {
  Ring F5 = Ring::integers_mod(5);
  EXPECT_TRUE(reduce_over_field(urow(kSp4, row(F5, {1, 0, 0, 0}))).word.empty());
  EXPECT_TRUE(sound(reduce_over_field(urow(kSp4, row(F5, {0, 1, 0, 0})))));
  EXPECT_TRUE(sound(reduce_over_field(urow(kO4, row(F5, {0, 1, 0, 0})))));
  EXPECT_EQ(kind_of([&] { reduce_over_field(urow(kSp4, row(F5, {0, 0, 0, 0}))); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { reduce_over_field(urow(kO4, row(F5, {1, 1, 0, 0}))); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { reduce_over_field(urow(kSp4, row(Ring::integers_mod(4), {1, 1, 0, 0}))); }),
            ErrorKind::Unsupported);
}

TEST(ReduceOverField, ExhaustiveOverF3) {
  Ring F3 = Ring::integers_mod(3);
  int orthogonal = 0;
  for (long code = 1; code < 81; ++code) {
    std::vector<long> v;
    for (long c = code, k = 0; k < 4; ++k, c /= 3) v.push_back(c % 3);
    auto u = row(F3, v);
    auto t = reduce_over_field(urow(kSp4, u));
    EXPECT_TRUE(sound(t));
    EXPECT_TRUE(intermediates_ok(t, *check_unimodular(u)));
    if (quadratic_value(u).is_zero()) {
      ++orthogonal;
      auto o = reduce_over_field(urow(kO4, u));
      EXPECT_TRUE(sound(o));
      EXPECT_TRUE(intermediates_ok(o, *check_unimodular(u)));
    }
  }
  EXPECT_EQ(orthogonal, 27 + 9 - 3 - 1);  // q^3 + q^2 - q zeros of xy + zw, minus 0
}

TEST(ReduceOverField, RandomRowsOverF7) {
  Ring F7 = Ring::integers_mod(7);
  Sampler s(test_seed());
  for (int n : {2, 3}) {
    for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
      FormKind f{kind, n};
      for (int k = 0; k < 100; ++k) {
        auto u = random_unimodular_row(s, F7, f);
        EXPECT_TRUE(sound(reduce_over_field(urow(f, u))));
      }
    }
  }
}

TEST(PivotReduce, Examples) {
  Ring Q = Ring::rationals();
  MonoidRing A{Q, AffineMonoid::free(2)};
  MR f = MR::monomial(A, {1, 1}, Q.element(Rational(2, 3))) + MR::monomial(A, {0, 3});
  Row<MR> u{MR::one(A), f, MR::zero(A), MR::zero(A)};
  auto t = pivot_reduce(urow(kSp4, u));
  ASSERT_TRUE(sound(t));
  ASSERT_FALSE(t.word.empty());
  EXPECT_EQ(t.word.back().token->kind, Token<MR>::Kind::SE);

  MonoidRing B{Ring::integers_mod(5), AffineMonoid(1, {{2}, {3}})};
  MR g = MR::monomial(B, {2}) + MR::monomial(B, {5}, B.coeffs.element(3));
  MR h = MR::monomial(B, {3}, B.coeffs.element(4));
  auto t2 = pivot_reduce(urow(kSp4, Row<MR>{MR::one(B), MR::zero(B), g, h}));
  EXPECT_TRUE(sound(t2));
  EXPECT_TRUE(pivot_reduce(urow(kSp4, Row<MR>{MR::one(B), MR::zero(B), MR::zero(B), MR::zero(B)}))
                  .word.empty());

  Ring Z9 = Ring::integers_mod(9);
  EXPECT_TRUE(sound(pivot_reduce(urow(kSp4, row(Z9, {5, 3, 7, 1})))));
  EXPECT_TRUE(sound(pivot_reduce(urow(kO4, row(Z9, {5, 0, 3, 0})))));
  EXPECT_EQ(kind_of([&] { pivot_reduce(urow(kSp4, row(Z9, {3, 1, 0, 0}))); }),
            ErrorKind::Precondition);
}

TEST(PivotReduce, RandomUnitPivotsOverZmod8) {
  Ring Z8 = Ring::integers_mod(8);
  Sampler s(test_seed());
  for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
    for (int n : {2, 3, 4}) {
      FormKind f{kind, n};
      for (int k = 0; k < 40; ++k) {
        auto u = random_unimodular_row(s, Z8, f);
        if (!is_unit(u[0])) continue;
        auto t = pivot_reduce(urow(f, u));
        EXPECT_TRUE(sound(t));
        EXPECT_TRUE(intermediates_ok(t, *check_unimodular(u)));
      }
    }
  }
}

// ---- radical script --------------------------------------------------

TEST(ReduceModRadical, PinnedExamples) {
  Ring Z4 = Ring::integers_mod(4);
  Ideal I = Ideal::generated_by(Z4, {Z4.element(2)});
  EXPECT_TRUE(reduce_mod_radical(urow(kSp4, row(Z4, {1, 0, 0, 0})), I).word.empty());

  // (3,2,2,2): lam = -(2-1)*3^{-1} = 1, so eps = 0 and the script is
  // conj(ge24(2) ge14(2), by ge13(-1)): rows (3,0,1,2), (1,0,1,2), (1,2,1,0),
  // (1,2,0,0), then se1(-2) clears slot 2.
  auto t = reduce_mod_radical(urow(kSp4, row(Z4, {3, 2, 2, 2})), I);
  ASSERT_TRUE(sound(t));
  ASSERT_EQ(t.word.size(), 2u);
  ASSERT_TRUE(t.word[0].is_conj());
  ASSERT_EQ(t.word[0].core.size(), 2u);
  EXPECT_EQ(t.word[0].core[0].token->i, 2);
  EXPECT_EQ(t.word[0].core[0].token->j, 4);
  EXPECT_EQ(t.word[0].core[0].token->lam, Z4.element(2));
  EXPECT_EQ(t.word[0].core[1].token->i, 1);
  EXPECT_EQ(t.word[0].core[1].token->j, 4);
  EXPECT_EQ(t.word[0].core[1].token->lam, Z4.element(2));
  EXPECT_EQ(t.word[0].by.size(), 1u);
  EXPECT_EQ(t.word[0].by[0].token->lam, Z4.element(-1));
  EXPECT_EQ(t.word[1].token->kind, Token<R>::Kind::SE);
  EXPECT_EQ(t.word[1].token->lam, Z4.element(2));
  EXPECT_TRUE(word_in_relative_subgroup(t.word, I));

  auto t6 = reduce_mod_radical(urow(FormKind{Form::Symplectic, 3}, row(Z4, {3, 2, 2, 2, 0, 2})), I);
  EXPECT_TRUE(sound(t6));
  EXPECT_TRUE(word_in_relative_subgroup(t6.word, I));
  // Induction clears slot 6 against the pivot first.
  EXPECT_EQ(t6.word[0].token->j, 6);
}

TEST(ReduceModRadical, Preconditions) {
  Ring Z4 = Ring::integers_mod(4);
  Ideal I = Ideal::generated_by(Z4, {Z4.element(2)});
  EXPECT_EQ(kind_of([&] { reduce_mod_radical(urow(kSp4, row(Z4, {3, 1, 0, 0})), I); }),
            ErrorKind::Precondition);
  Ring Z6 = Ring::integers_mod(6);
  Ideal J = Ideal::generated_by(Z6, {Z6.element(2)});
  EXPECT_EQ(kind_of([&] { reduce_mod_radical(urow(kSp4, row(Z6, {1, 2, 0, 0})), J); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { reduce_mod_radical(urow(kO4, row(Z4, {1, 2, 0, 0})), I); }),
            ErrorKind::Precondition);
}

TEST(ReduceModRadical, RandomRowsOverNilradicals) {
  Sampler s(test_seed());
  for (auto [n, p] : std::vector<std::pair<long, long>>{{4, 2}, {8, 2}, {9, 3}, {27, 3}}) {
    Ring Zn = Ring::integers_mod(n);
    Ideal I = Ideal::generated_by(Zn, {Zn.element(p)});
    for (int size : {2, 3}) {
      for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
        FormKind f{kind, size};
        for (int k = 0; k < 25; ++k) {
          auto u = random_relative_row(s, Zn, p, f);
          auto t = reduce_mod_radical(urow(f, u), I);
          ASSERT_TRUE(sound(t)) << n;
          EXPECT_TRUE(word_in_relative_subgroup(t.word, I));
          EXPECT_LE(conjugation_depth(t.word), 1);
          EXPECT_TRUE(intermediates_ok(t, *check_unimodular(u)));
        }
      }
    }
  }
}

// ---- semilocal and relative ------------------------------------------

TEST(ReduceSemilocal, Examples) {
  Ring Z4 = Ring::integers_mod(4);
  EXPECT_TRUE(sound(reduce_semilocal(urow(kSp4, row(Z4, {3, 2, 2, 2})))));
  EXPECT_TRUE(reduce_semilocal(urow(kSp4, row(Z4, {1, 0, 0, 0}))).word.empty());
  Ring F7 = Ring::integers_mod(7);
  auto u = urow(kSp4, row(F7, {0, 3, 5, 1}));
  EXPECT_EQ(reduce_semilocal(u).word.size(), reduce_over_field(u).word.size());
  Ring Z360 = Ring::integers_mod(360);
  EXPECT_EQ(kind_of([&] { reduce_semilocal(urow(kSp4, row(Z360, {2, 4, 6, 0}))); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { reduce_semilocal(urow(kSp4, row(Ring::integers(), {1, 0, 0, 0}))); }),
            ErrorKind::Unsupported);
}

TEST(ReduceSemilocal, RandomRows) {
  Sampler s(test_seed());
  for (long n : {360L, 1024L, 30L, 49L}) {
    Ring Zn = Ring::integers_mod(n);
    for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
      for (int size : {2, 3}) {
        FormKind f{kind, size};
        for (int k = 0; k < 20; ++k) {
          auto u = random_unimodular_row(s, Zn, f);
          auto t = reduce_semilocal(urow(f, u));
          ASSERT_TRUE(sound(t)) << n;
          EXPECT_TRUE(intermediates_ok(t, *check_unimodular(u)));
        }
      }
    }
  }
}

TEST(ReduceRelative, Examples) {
  Ring Z25 = Ring::integers_mod(25);
  Ideal I = Ideal::generated_by(Z25, {Z25.element(5)});
  EXPECT_TRUE(reduce_relative(urow(kSp4, row(Z25, {1, 0, 0, 0}), I)).word.empty());
  auto t = reduce_relative(urow(kSp4, row(Z25, {6, 5, 5, 10}), I));
  ASSERT_TRUE(sound(t));
  EXPECT_TRUE(word_in_relative_subgroup(t.word, I));
  EXPECT_TRUE(congruent_to_identity(oracle::matrix(t.word, kSp4, Z25), I));

  Ring Z9 = Ring::integers_mod(9);
  Ideal J = Ideal::generated_by(Z9, {Z9.element(3)});
  auto u = row(Z9, {4, 0, 3, 6});
  ASSERT_TRUE(quadratic_value(u).is_zero());
  auto o = reduce_relative(urow(kO4, u, J));
  EXPECT_TRUE(sound(o));
  EXPECT_TRUE(word_in_relative_subgroup(o.word, J));

  EXPECT_EQ(kind_of([&] { reduce_relative(urow(kSp4, row(Z25, {6, 1, 0, 0}), I)); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { reduce_relative(urow(kSp4, row(Z25, {6, 5, 0, 0}))); }),
            ErrorKind::Precondition);
}

TEST(ReduceRelative, RandomRowsAndExcisionCoherence) {
  Sampler s(test_seed());
  struct Case {
    long n, d;
  };
  for (auto [n, d] : std::vector<Case>{{25, 5}, {27, 3}, {27, 9}, {9, 3}, {360, 6}, {360, 5}, {1024, 4}}) {
    Ring Zn = Ring::integers_mod(n);
    Ideal I = Ideal::generated_by(Zn, {Zn.element(d)});
    for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
      for (int size : {2, 3}) {
        FormKind f{kind, size};
        for (int k = 0; k < 12; ++k) {
          auto u = random_relative_row(s, Zn, d, f);
          auto t = reduce_relative(urow(f, u, I));
          ASSERT_TRUE(sound(t)) << n << " " << d;
          EXPECT_TRUE(word_in_relative_subgroup(t.word, I));
          EXPECT_TRUE(congruent_to_identity(oracle::matrix(t.word, f, Zn), I));
          EXPECT_TRUE(sound(reduce_semilocal(urow(f, u))));
        }
      }
    }
  }
}

// ---- lifting ---------------------------------------------------------

TEST(LiftWord, ProjectionsAgree) {
  Ring Z2 = Ring::integers_mod(2), Z4 = Ring::integers_mod(4);
  Sampler s(test_seed());
  for (int k = 0; k < 20; ++k) {
    auto u = random_unimodular_row(s, Z2, kSp4);
    auto w = reduce_over_field(urow(kSp4, u)).word;
    auto same = lift_word<R, R>(w, [](const R& x) { return x; });
    EXPECT_EQ(word_matrix(same, kSp4, Z2), word_matrix(w, kSp4, Z2));
    auto up = lift_word<R, R>(w, [&](const R& x) { return reduce_representative(x, Z4); });
    auto W4 = word_matrix(up, kSp4, Z4);
    auto W2 = word_matrix(w, kSp4, Z2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(reduce_representative(W4[i][j], Z2), W2[i][j]);
  }

  // Words over R[t1,t2]/(t1), represented by t1-free elements, lift by inclusion.
  MonoidRing A{Ring::integers_mod(5), AffineMonoid::free(2)};
  MR t1 = MR::monomial(A, {1, 0}), t2 = MR::monomial(A, {0, 1});
  Word<MR> w{ge(1, 3, t2), ge(4, 2, t2 * t2 + MR::one(A)), se(2, MR::one(A))};
  auto lifted = lift_word<MR, MR>(w, [&](const MR& x) { return x; });
  auto perturbed = map_word<MR, MR>(lifted, [&](const MR& x) { return x + t1 * x; });
  auto W = word_matrix(perturbed, kSp4, A);
  auto base = word_matrix(w, kSp4, A);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(evaluate_at_t1_zero(W[i][j]), base[i][j]);
}

// ---- Nagata twist ----------------------------------------------------

TEST(MonicThenReduce, Examples) {
  MonoidRing A{Ring::integers_mod(5), AffineMonoid::free(2)};
  MR one = MR::one(A), zero = MR::zero(A);
  MR t1 = MR::monomial(A, {1, 0}), t2 = MR::monomial(A, {0, 1});
  DegreeAssignment d{{1, 0}};

  auto r = monic_then_reduce(urow(kSp4, Row<MR>{one, zero, zero, t2}), d, 2);
  EXPECT_TRUE(r.monic);
  EXPECT_EQ(r.c, 2u);
  EXPECT_EQ(r.twisted.back(), t2 + t1 * t1);
  ASSERT_TRUE(r.continuation);
  EXPECT_TRUE(sound(*r.continuation));

  auto r3 = monic_then_reduce(urow(kSp4, Row<MR>{one, zero, zero, t1 * t1 * t1}), d, 2);
  EXPECT_TRUE(r3.monic);
  EXPECT_EQ(r3.twisted.back(), t1 * t1 * t1);

  MonoidRing B{Ring::integers_mod(4), AffineMonoid::free(2)};
  MR two_t2 = MR::monomial(B, {0, 1}, B.coeffs.element(2));
  auto r4 = monic_then_reduce(urow(kSp4, Row<MR>{MR::one(B), MR::zero(B), MR::zero(B), two_t2}), d, 1);
  EXPECT_FALSE(r4.monic);
  EXPECT_EQ(r4.c, 64u);

  // Pyramidal degree of Z_+^2 with apex t1.
  auto pd = pyramidal_decomposition(A.monoid, {1, 0});
  EXPECT_TRUE(monic_then_reduce(urow(kSp4, Row<MR>{one, zero, zero, t2}), pd, 2).monic);

  EXPECT_EQ(kind_of([&] { monic_then_reduce(urow(kSp4, Row<MR>{t1, zero, zero, t1}), d, 2); }),
            ErrorKind::Precondition);
}

TEST(MonicThenReduce, TieBreakingNeedsLargerTwist) {
  // t1^2 + t1 t2: with c = 1 both twisted tops meet at t1^2; c = 2 separates.
  MonoidRing A{Ring::integers_mod(5), AffineMonoid::free(2)};
  MR t1 = MR::monomial(A, {1, 0}), t2 = MR::monomial(A, {0, 1});
  MR f = t1 * t1 * MR::constant(A, A.coeffs.element(4)) + t1 * t2;
  auto r = monic_then_reduce(urow(kSp4, Row<MR>{MR::one(A), MR::zero(A), MR::zero(A), f}),
                             DegreeAssignment{{1, 0}}, 1);
  EXPECT_TRUE(r.monic);
  EXPECT_EQ(r.c, 2u);
  EXPECT_TRUE(is_monic_in(r.twisted.back(), {1, 0}, DegreeAssignment{{1, 0}}));
}

// ---- descent ---------------------------------------------------------

TEST(StabilizationDescent, Examples) {
  Ring F7 = Ring::integers_mod(7);
  FormKind f6{Form::Symplectic, 3};
  auto id = identity_matrix<R>(6, F7);
  auto d = stabilization_descent(id, f6);
  EXPECT_TRUE(d.epsilon.empty());
  EXPECT_EQ(d.beta, identity_matrix<R>(4, F7));

  Sampler s(test_seed());
  for (int k = 0; k < 20; ++k) {
    Word<R> w;
    for (int t = 0; t < 6; ++t) {
      int i = static_cast<int>(s.range(1, 4)), j = static_cast<int>(s.range(1, 4));
      if (i == j || sigma(i) == j) continue;
      w.push_back(ge(i, j, random_element(s, F7)));
    }
    auto gamma = word_matrix(w, kSp4, F7);
    auto dd = stabilization_descent(block_sum_identity2(gamma, F7), f6);
    EXPECT_TRUE(dd.epsilon.empty());
    EXPECT_EQ(dd.beta, gamma);
  }
  auto bad = id;
  bad[0][5] = F7.one();
  EXPECT_EQ(kind_of([&] { stabilization_descent(bad, f6); }), ErrorKind::Precondition);
}

TEST(StabilizationDescent, RandomMatricesFixingLastColumn) {
  Sampler s(test_seed());
  for (long n : {7L, 9L, 360L}) {
    Ring Zn = Ring::integers_mod(n);
    for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
      for (int size : {2, 3, 4}) {
        FormKind f{kind, size};
        FormKind small{kind, size - 1};
        for (int k = 0; k < 10; ++k) {
          auto alpha = random_matrix_fixing_last(s, Zn, f, 12);
          auto d = stabilization_descent(alpha, f);
          EXPECT_TRUE(is_in_group(d.beta, small));
          EXPECT_EQ(oracle::product(oracle::matrix(d.epsilon, f, Zn), block_sum_identity2(d.beta, Zn)),
                    alpha);
        }
      }
    }
  }
}

TEST(StabilizationDescent, RelativeMatricesStayRelative) {
  Sampler s(test_seed());
  Ring Z27 = Ring::integers_mod(27);
  Ideal I = Ideal::generated_by(Z27, {Z27.element(3)});
  for (Form kind : {Form::Symplectic, Form::Orthogonal}) {
    FormKind f{kind, 3};
    for (int k = 0; k < 20; ++k) {
      auto alpha = random_matrix_fixing_last(s, Z27, f, 10, 3);
      ASSERT_TRUE(congruent_to_identity(alpha, I));
      auto d = stabilization_descent(alpha, f);
      EXPECT_TRUE(word_in_relative_subgroup(d.epsilon, I));
      EXPECT_TRUE(congruent_to_identity(d.beta, I));
    }
  }
}

// ---- search ----------------------------------------------------------

TEST(BoundedOrbitSearch, Examples) {
  Ring Z4 = Ring::integers_mod(4);
  auto e = bounded_orbit_search(urow(kSp4, row(Z4, {1, 0, 0, 0})), SearchBudget{});
  ASSERT_TRUE(e.transcript);
  EXPECT_TRUE(e.transcript->word.empty());
  auto r = bounded_orbit_search(urow(kSp4, row(Z4, {3, 2, 2, 2})), SearchBudget{});
  ASSERT_TRUE(r.transcript);
  EXPECT_TRUE(sound(*r.transcript));

  // No entry is a unit, so the search has to move first.
  MonoidRing B{Ring::integers_mod(2), AffineMonoid(1, {{2}, {3}})};
  MR t2 = MR::monomial(B, {2}), t3 = MR::monomial(B, {3});
  Row<MR> v{t2, MR::one(B) + t3, MR::zero(B), MR::zero(B)};
  auto sr = bounded_orbit_search(urow(kSp4, v), SearchBudget{});
  ASSERT_TRUE(sr.transcript);
  EXPECT_TRUE(sound(*sr.transcript));
  EXPECT_GT(sr.expansions, 0);
}

TEST(BoundedOrbitSearch, DeterministicForSeed) {
  MonoidRing B{Ring::integers_mod(3), AffineMonoid::free(2)};
  Sampler s(test_seed());
  for (int k = 0; k < 5; ++k) {
    auto u = random_monoid_row(s, B, kSp4, 2);
    SearchBudget b;
    b.seed = 7;
    auto a = bounded_orbit_search(urow(kSp4, u), b);
    auto c = bounded_orbit_search(urow(kSp4, u), b);
    EXPECT_EQ(a.expansions, c.expansions);
    ASSERT_EQ(a.transcript.has_value(), c.transcript.has_value());
    if (a.transcript) {
      EXPECT_EQ(a.transcript->word.size(), c.transcript->word.size());
      EXPECT_TRUE(sound(*a.transcript));
    }
  }
}

}  // namespace
}  // namespace umrow
