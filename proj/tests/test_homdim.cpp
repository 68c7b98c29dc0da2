#include "qsl2/homdim.hpp"

#include <gtest/gtest.h>

using namespace qsl2;

namespace {

BigradedLaurent q(int k) { return BigradedLaurent::q_power(k); }

const CertLine* find_line(const Certificate& c, const std::string& term) {
  for (const auto& l : c.ledger)
    if (l.term == term) return &l;
  return nullptr;
}

}  // namespace

TEST(Transfer, Examples) {
  const WeightConfig cfg{6};
  const Word id = Word::identity(cfg, -2);
  const Transfer t = transfer_to_identity(id, id);
  EXPECT_EQ(t.weight, -2);
  EXPECT_EQ(t.u, FormalSum(id));

  // E at midpoint l <= -1: the degree-0 part of the identity coefficient is 1.
  for (int l = -5; l <= -1; l += 2) {
    const Word e({8}, l - 1, {E()});
    const Transfer te = transfer_to_identity(e, e);
    const BigradedLaurent c = te.u.coefficient(Word::identity({8}, l - 1));
    EXPECT_EQ(c, qbinom(-(l - 1), 1) * q(l)) << l;
    EXPECT_EQ(c.coefficient(0, 0), 1) << l;
  }

  // 1 against E o F (F first): no identity term where F-then-E is canonical.
  for (int l = -4; l <= 0; l += 2) {
    const Word ef(cfg, l, {F(), E()});
    const Transfer tr = transfer_to_identity(Word::identity(cfg, l), ef);
    EXPECT_TRUE(tr.u.coefficient(Word::identity(cfg, l)).is_zero()) << l;
    EXPECT_FALSE(tr.u.empty());
  }
}

TEST(Transfer, WeightOrthogonality) {
  const WeightConfig cfg{4};
  for (int a : cfg.weights())
    for (int b : cfg.weights()) {
      if (a == b) continue;
      EXPECT_TRUE(transfer_to_identity(Word::identity(cfg, a), Word::identity(cfg, b)).u.empty());
      const Word e1(cfg, a, {E()}), e2(cfg, b, {E()});
      EXPECT_TRUE(transfer_to_identity(e1, e2).u.empty());
    }
  EXPECT_TRUE(transfer_to_identity(Word(cfg, 4, {E()}), Word(cfg, 4, {E()})).u.empty());
}

TEST(EndSimple, SmallestMidpointZero) {
  EXPECT_THROW(certify_end_simple(2, Kind::E, 0, 1), std::invalid_argument);
  const Certificate c = certify_end_simple(3, Kind::E, 0, 1);
  EXPECT_TRUE(c.pass());
  const CertLine* j0 = find_line(c, "j=0");
  const CertLine* j1 = find_line(c, "j=1");
  ASSERT_TRUE(j0 && j1);
  EXPECT_EQ(j0->degree_zero, 0);
  EXPECT_EQ(j1->degree_zero, 1);
  EXPECT_EQ(j1->window, (std::pair{0, 0}));
  EXPECT_FALSE(find_line(c, "j=2"));
}

TEST(EndSimple, PowerZero) {
  for (int n = 0; n <= 4; ++n)
    for (int l : WeightConfig{n}.weights()) {
      const Certificate c = certify_end_simple(n, Kind::E, l, 0);
      EXPECT_TRUE(c.pass());
      ASSERT_EQ(c.ledger.size(), 1u);
      EXPECT_EQ(c.ledger[0].degree_zero, 1);
    }
}

TEST(EndSimple, HandWindows) {
  // E^(2) at midpoint -1 from source -3, N = 7:
  //   j=0  F^(2)  shift (-3)(4) = -12, qbinom(3,0)      -> [-12, -12]
  //   j=1  F      shift (-2)(3) = -6,  qbinom(3,1)      -> [-8, -4]
  //   j=2  1      shift (-1)(2) = -2,  qbinom(3,2)      -> [-4, 0], one copy in degree 0
  EXPECT_THROW(certify_end_simple(4, Kind::E, -1, 2), std::invalid_argument);
  const Certificate c = certify_end_simple(7, Kind::E, -1, 2);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.params["anchor"], "source");
  const std::vector<std::pair<int, int>> want{{-12, -12}, {-8, -4}, {-4, 0}};
  for (int j = 0; j <= 2; ++j) {
    const CertLine* l = find_line(c, "j=" + std::to_string(j));
    ASSERT_TRUE(l) << j;
    EXPECT_EQ(l->window, want[static_cast<std::size_t>(j)]) << j;
    EXPECT_TRUE(l->pass) << j;
  }
  EXPECT_EQ(find_line(c, "j=2")->degree_zero, 1);
  EXPECT_EQ(c.params["shift_window"], Json::array({-12, 0}));

  // At N = 5 the F^(2) base runs below -5 and its line is marked zero.
  const Certificate c5 = certify_end_simple(5, Kind::E, -1, 2);
  EXPECT_TRUE(c5.pass());
  EXPECT_FALSE(find_line(c5, "j=0")->window);
  EXPECT_EQ(c5.params["shift_window"], Json::array({-8, 0}));
}

TEST(EndSimple, AllSmallInstancesPass) {
  for (int n = 0; n <= 6; ++n)
    for (Kind kind : {Kind::E, Kind::F})
      for (int m = -n; m <= n; ++m)
        for (int r = 0; r <= n; ++r) {
          if (generator_at_midpoint({n}, kind, m, r).is_zero()) continue;
          const Certificate c = certify_end_simple(n, kind, m, r);
          EXPECT_TRUE(c.pass()) << kind_char(kind) << " N=" << n << " m=" << m << " r=" << r << "\n" << c.to_text();
        }
}

TEST(EndSimple, OverallPassIffEveryLinePasses) {
  Certificate c = certify_end_simple(5, Kind::F, 1, 2);
  EXPECT_TRUE(c.pass());
  c.add({"extra", "-", 1, std::nullopt, 0, "forced failure", false});
  EXPECT_FALSE(c.pass());
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, "extra: forced failure");
  EXPECT_EQ(c.to_json()["verdict"], "FAIL");
}

TEST(HomdimProperty, ShiftExactness) {
  // Closed form against the generic adjunction route, both anchors.
  int compared = 0;
  for (int r = 1; r <= 3; ++r)
    for (int m = -5; m <= 5; ++m)
      for (Kind kind : {Kind::E, Kind::F})
        for (Anchor anchor : {Anchor::Source, Anchor::Target}) {
          const int n = 20 + ((m + r) % 2 != 0 ? 1 : 0);
          const WeightConfig cfg{n};
          if (generator_at_midpoint(cfg, kind, m, r).is_zero()) continue;
          std::vector<FormulaTerm> f;
          try {
            f = end_simple_formula(cfg, kind, m, r, anchor);
          } catch (const std::invalid_argument&) {
            continue;
          }
          EXPECT_EQ(as_formal_sum(f), end_simple_generic(cfg, kind, m, r, anchor))
              << kind_char(kind) << " m=" << m << " r=" << r << " " << to_string(anchor);
          for (const auto& t : f) {
            const Word g = generator_at_midpoint(cfg, kind, m, r);
            const int w = anchor == Anchor::Source ? g.source() : g.target();
            const bool lowers = (kind == Kind::E) == (anchor == Anchor::Source);
            EXPECT_EQ(t.exponent, (lowers ? w + t.j : t.j - w) * (2 * r - t.j));
          }
          ++compared;
        }
  EXPECT_GT(compared, 60);
}

TEST(HomdimProperty, Monotonicity) {
  // Only the j = 0 term reuses power r, and it must sit strictly below degree 0;
  // every degree-0 line with a generator base cites a PASS of lower power.
  for (int n = 1; n <= 6; ++n)
    for (Kind kind : {Kind::E, Kind::F})
      for (int m = -n; m <= n; ++m)
        for (int r = 1; r <= n; ++r) {
          const Word g = generator_at_midpoint({n}, kind, m, r);
          if (g.is_zero()) continue;
          const Certificate c = certify_end_simple(n, kind, m, r);
          const Anchor anchor = end_simple_anchor(kind, m);
          for (const auto& t : end_simple_formula({n}, kind, m, r, anchor)) {
            if (t.zero || t.base.is_identity()) continue;
            if (t.j == 0) {
              EXPECT_LT(t.multiplicity.max_hom_degree(), 0);
              continue;
            }
            EXPECT_LT(t.base.letters().front().power, r);
            if (t.multiplicity.max_hom_degree() == 0) {
              const Generator b = t.base.letters().front();
              EXPECT_TRUE(certify_end_simple(n, b.kind, t.base.midpoint(0), b.power).pass());
            }
          }
          EXPECT_TRUE(c.pass());
        }
}

TEST(EfEnd, Examples) {
  EXPECT_TRUE(certify_ef_end(3, -1).pass());

  const Certificate deg = certify_ef_end(1, -1);
  EXPECT_TRUE(deg.pass());
  EXPECT_TRUE(deg.degenerate);

  const Certificate c = certify_ef_end(5, -3);
  EXPECT_TRUE(c.pass());
  bool exclusion = false;
  for (const auto& l : c.ledger)
    exclusion = exclusion || l.justification.find("-10+i < -2 for all i <= 0") != std::string::npos;
  EXPECT_TRUE(exclusion) << c.to_text();

  EXPECT_THROW(certify_ef_end(4, -1), std::invalid_argument);
}

TEST(EfEnd, BothBranchesAtZero) {
  const Certificate c = certify_ef_end(4, 0);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.params["composites"].size(), 2u);
  bool ef = false, fe = false;
  for (const auto& l : c.ledger) {
    ef = ef || l.term.rfind("EF: ", 0) == 0;
    fe = fe || l.term.rfind("FE: ", 0) == 0;
  }
  EXPECT_TRUE(ef && fe);
}

TEST(EfEnd, AllSmallInstancesPass) {
  for (int n = 0; n <= 6; ++n)
    for (int l : WeightConfig{n}.weights()) EXPECT_TRUE(certify_ef_end(n, l).pass()) << n << " " << l;
}

TEST(E2Classify, NegativeMidpoint) {
  for (int n : {4, 6}) {
    const E2Inventory inv = classify_e2_degree2(n, -2);
    EXPECT_FALSE(inv.zero);
    EXPECT_EQ(inv.summary(), "Hom(1_{-4}, 1_{-4}) + Hom(1_{-4}, 1_{-4}<2>)") << n;
  }
}

TEST(E2Classify, ZeroMidpoint) {
  const E2Inventory inv = classify_e2_degree2(6, 0);
  EXPECT_EQ(inv.summary(), "Hom(1_{-2}, 1_{-2}<2>) + Hom(F(-3), F(-3) (x) [1 + q^-2]) = k");
  const E2Inventory small = classify_e2_degree2(2, 0);
  EXPECT_EQ(small.summary(), "Hom(1_{-2}, 1_{-2}<2>)");
}

TEST(E2Classify, Extremes) {
  // E^(2) with midpoint -N would start below the lowest weight.
  EXPECT_TRUE(classify_e2_degree2(4, -4).zero);
  EXPECT_EQ(classify_e2_degree2(4, -4).summary(), "0");
  EXPECT_THROW(classify_e2_degree2(4, 2), std::invalid_argument);
  // The lowest nonzero midpoint keeps both identity lines.
  const E2Inventory low = classify_e2_degree2(5, -3);
  EXPECT_EQ(low.summary(), "Hom(1_{-5}, 1_{-5}) + Hom(1_{-5}, 1_{-5}<2>)");
}
