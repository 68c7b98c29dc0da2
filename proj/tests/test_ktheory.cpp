#include "qsl2/ktheory.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qsl2;

namespace {

BigradedLaurent q(int k) { return BigradedLaurent::q_power(k); }

Coproduct mirror(Coproduct c) {
  auto flip = [](Side s) { return s == Side::Left ? Side::Right : Side::Left; };
  return {flip(c.e_side), c.e_sign, flip(c.f_side), c.f_sign};
}
Coproduct bar(Coproduct c) { return {c.e_side, -c.e_sign, c.f_side, -c.f_sign}; }

}  // namespace

TEST(WeightBasis, LexicographicSubsets) {
  const WeightBasis b = WeightBasis::make(4, 0);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.label(0), "{1,2}");
  EXPECT_EQ(b.label(5), "{3,4}");
  EXPECT_EQ(WeightBasis::make(4, -1).size(), 0u);
}

TEST(GeneratorMatrix, Examples) {
  const KMatrix e = generator_matrix(1, -1, Kind::E, 1);
  ASSERT_EQ(e.rows(), 1u);
  ASSERT_EQ(e.cols(), 1u);
  EXPECT_EQ(e(0, 0), Laurent(1));

  TensorPower tp(2);
  const KMatrix ef = tp.word(Word({2}, 0, {F(), E()}));
  const KMatrix fe = tp.word(Word({2}, 0, {E(), F()}));
  EXPECT_TRUE((ef - fe).is_zero());
  EXPECT_EQ(ef.rows(), 2u);

  const KMatrix e2 = generator_matrix(2, -2, Kind::E, 2);
  ASSERT_EQ(e2.rows(), 1u);
  EXPECT_EQ(e2(0, 0), Laurent(1));  // convention exponent c = 0
}

TEST(GeneratorMatrix, ZeroExactlyWhenWordIsZero) {
  for (int n = 0; n <= 6; ++n)
    for (int s = -n - 2; s <= n + 2; ++s)
      for (Kind k : {Kind::E, Kind::F})
        for (int r = 1; r <= 3; ++r) {
          const bool zero = !make_word({n}, s, {Generator{k, r}});
          const KMatrix m = generator_matrix(n, s, k, r);
          EXPECT_EQ(zero, m.rows() == 0 || m.cols() == 0 || m.is_zero()) << n << " " << s << " " << r;
        }
}

TEST(WordMatrix, Examples) {
  TensorPower tp(4);
  for (int l : {-4, -2, 0, 2, 4}) EXPECT_EQ(tp.word(Word::identity({4}, l)), KMatrix::identity(tp.dim(l)));

  TensorPower t2(2);
  const FormalSum merged(Word({2}, -2, {E(2)}), q(1) + q(-1));
  EXPECT_EQ(t2.formal_sum(merged, -2, 2), t2.word(Word({2}, -2, {E(), E()})));

  for (int n : {2, 4, 6}) {
    TensorPower tn(n);
    FormalSum rhs(Word({n}, -2, {F(), E()}));
    rhs.add(Word::identity({n}, -2), q(1) + q(-1));
    EXPECT_EQ(tn.formal_sum(rhs, -2, -2), tn.word(Word({n}, -2, {E(), F()}))) << n;
  }
}

TEST(VerifyRelations, Examples) {
  const Report cas = verify_relations(4, Relation::Casimir);
  EXPECT_TRUE(cas.pass());
  EXPECT_EQ(cas.checked(), 5u);
  EXPECT_TRUE(verify_relations(1, Relation::All).pass());
  Report rep;
  TensorPower tp(5);
  check_commute(tp, rep, 3);
  bool found = false;
  for (const auto& l : rep.lines)
    if (l.key == "commute EF N=5 source=-1 a=1 b=2" || l.key == "commute FE N=5 source=-1 a=2 b=1") found = true;
  EXPECT_TRUE(rep.pass());
  EXPECT_TRUE(found);
}

TEST(Coproduct, NameRoundTrip) {
  for (const auto& c : Coproduct::variants()) EXPECT_EQ(Coproduct::parse(c.name()), c);
  EXPECT_THROW(Coproduct::parse("nope"), std::invalid_argument);
  EXPECT_EQ(Coproduct::standard().name(), "e-left+,f-right-");
}

TEST(Coproduct, SelectionIsOneSymmetryOrbit) {
  std::set<Coproduct> passing;
  for (const auto& c : Coproduct::variants())
    if (verify_relations(4, Relation::All, c).pass()) passing.insert(c);
  const Coproduct s = Coproduct::standard();
  const std::set<Coproduct> orbit{s, bar(s), mirror(s), bar(mirror(s))};
  EXPECT_EQ(passing, orbit);
  EXPECT_EQ(passing.size(), 4u);
}

TEST(KTheoryProperty, Dimensions) {
  for (int n = 0; n <= 8; ++n) {
    Report r;
    TensorPower tp(n);
    check_dimensions(tp, r);
    EXPECT_TRUE(r.pass()) << n;
  }
}

TEST(KTheoryProperty, CasimirUpToEight) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(verify_relations(n, Relation::Casimir).pass()) << n;
}

TEST(KTheoryProperty, Integrality) {
  for (int n = 0; n <= 6; ++n) {
    Report r;
    TensorPower tp(n);
    check_integrality(tp, r, 3);
    EXPECT_TRUE(r.pass()) << n;
  }
}

TEST(KTheoryProperty, ParseRelation) {
  EXPECT_EQ(parse_relation("merge"), Relation::Merge);
  EXPECT_EQ(parse_relation("all"), Relation::All);
  EXPECT_THROW(parse_relation("bogus"), std::invalid_argument);
}
