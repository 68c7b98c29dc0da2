#include "qsl2/words.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace qsl2;

namespace {

BigradedLaurent q(int k) { return BigradedLaurent::q_power(k); }

// Every nonzero word of length <= max_len with powers <= max_pow.
void for_each_word(int n, int max_len, int max_pow, const std::function<void(const Word&)>& f) {
  const WeightConfig cfg{n};
  std::vector<Generator> cur;
  std::function<void(int)> rec = [&](int source) {
    if (auto w = make_word(cfg, source, cur)) f(*w);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Kind k : {Kind::E, Kind::F})
      for (int r = 1; r <= max_pow; ++r) {
        cur.push_back({k, r});
        rec(source);
        cur.pop_back();
      }
  };
  for (int s : cfg.weights()) rec(s);
}

}  // namespace

TEST(WeightConfig, Inhabited) {
  const WeightConfig c{4};
  EXPECT_TRUE(c.inhabited(-4));
  EXPECT_TRUE(c.inhabited(0));
  EXPECT_FALSE(c.inhabited(-1));
  EXPECT_FALSE(c.inhabited(6));
  EXPECT_EQ(c.weights(), (std::vector<int>{-4, -2, 0, 2, 4}));
  EXPECT_EQ(c.lowered(-2), 3);
  EXPECT_EQ(WeightConfig{3}.parity(), 1);
}

TEST(MakeWord, Examples) {
  auto w = make_word({2}, -2, {E()});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->target(), 0);
  EXPECT_FALSE(make_word({2}, 0, {E(), E()}));
  EXPECT_FALSE(make_word({4}, -1, {E()}));
  EXPECT_FALSE(make_word({4}, 0, {E(0)}));
  auto id = make_word({3}, 1, {});
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->is_identity());
}

TEST(MakeWord, TotalOnWideInputs) {
  for (int n = 0; n <= 4; ++n)
    for (int s = -8; s <= 8; ++s)
      for (int p = -1; p <= 3; ++p)
        EXPECT_NO_THROW((void)make_word({n}, s, {E(1), Generator{Kind::F, p}}));
}

TEST(Word, WeightsAndMidpoints) {
  // F applied after E^(2), from -3 at N = 3.
  const Word w({3}, -3, {E(2), F()});
  EXPECT_EQ(w.weight_before(1), 1);
  EXPECT_EQ(w.target(), -1);
  EXPECT_EQ(w.midpoint(0), -1);
  EXPECT_EQ(w.midpoint(1), 0);
  EXPECT_EQ(w.blocks(), 2u);
  EXPECT_EQ(midpoint_label(w), "F(0)*E^(2)(-1)");
  EXPECT_EQ(midpoint_label(Word::identity({3}, 1)), "1_{1}");
}

TEST(FormalSum, DropsZeros) {
  FormalSum s;
  const Word w({2}, -2, {E()});
  s.add(w, q(1));
  s.add(w, -q(1));
  EXPECT_TRUE(s.empty());
  s.add(Word({2}, 0, {E(), E()}), 1);
  EXPECT_TRUE(s.empty());
  EXPECT_TRUE(FormalSum(make_word({2}, 0, {E(), E()})).empty());
}

TEST(Adjoint, Examples) {
  const int n = 9;
  for (int l = -7; l <= 7; l += 2) {
    const Word e({n}, l - 1, {E()});
    const Adjoint r = adjoint(e, Side::Right);
    EXPECT_EQ(r.word, Word({n}, l + 1, {F()}));
    EXPECT_EQ(r.shift, q(l));
    EXPECT_EQ(adjoint(e, Side::Left).shift, q(-l));
  }
  for (int r = 1; r <= 3; ++r) {
    const Word e({6}, -r, {E(r)});
    EXPECT_EQ(adjoint(e, Side::Left).shift, BigradedLaurent(1));
  }
  for (int l = -4; l <= 4; l += 2) {
    const Word ee({8}, l - 2, {E(), E()});
    const Adjoint a = adjoint(ee, Side::Right);
    EXPECT_EQ(a.word, Word({8}, l + 2, {F(), F()}));
    EXPECT_EQ(a.shift, q(2 * l));
    EXPECT_EQ(adjoint(Word({8}, l - 2, {E(2)}), Side::Right).shift, q(2 * l));
  }
  const Word f({4}, 2, {F(2)});
  EXPECT_EQ(adjoint(f, Side::Right).shift, q(0));
  EXPECT_EQ(adjoint(Word({4}, 4, {F()}), Side::Right).shift, q(-3));
  EXPECT_EQ(adjoint(Word({4}, 4, {F()}), Side::Left).shift, q(3));
}

TEST(Adjoint, ZeroMapsToZero) {
  const auto [w, s] = adjoint(MaybeWord{}, Side::Right);
  EXPECT_FALSE(w);
  EXPECT_EQ(s, BigradedLaurent(1));
}

TEST(WordsProperty, AdjointInvolution) {
  int count = 0;
  for (int n = 0; n <= 5; ++n)
    for_each_word(n, 4, 2, [&](const Word& w) {
      for (Side first : {Side::Right, Side::Left}) {
        const Side second = first == Side::Right ? Side::Left : Side::Right;
        const Adjoint a = adjoint(w, first);
        const Adjoint b = adjoint(a.word, second);
        EXPECT_EQ(b.word, w);
        // (Y<k>)_L = Y_L<-k>, so the second shift cancels the first.
        EXPECT_EQ(b.shift * a.shift.monomial_inverse(), BigradedLaurent(1));
        EXPECT_EQ(a.word.source(), w.target());
        EXPECT_EQ(a.word.target(), w.source());
        EXPECT_FALSE(a.word.is_zero());
      }
      ++count;
    });
  EXPECT_GT(count, 1000);
}

TEST(WordsProperty, CompositeReversesOrder) {
  for_each_word(5, 3, 2, [](const Word& w) {
    if (w.length() < 2) return;
    const Word head({5}, w.source(), {w.letters().front()});
    const Word tail({5}, head.target(), std::vector<Generator>(w.letters().begin() + 1, w.letters().end()));
    for (Side s : {Side::Left, Side::Right}) {
      const Adjoint whole = adjoint(w, s), a = adjoint(head, s), b = adjoint(tail, s);
      EXPECT_EQ(whole.word, b.word.then(a.word));
      EXPECT_EQ(whole.shift, a.shift * b.shift);
    }
  });
}
