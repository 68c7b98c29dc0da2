#include "qsl2/corpus.hpp"
#include "qsl2/parse.hpp"
#include "qsl2/rewrite.hpp"

#include <gtest/gtest.h>

using namespace qsl2;

namespace {

BigradedLaurent q(int k) { return BigradedLaurent::q_power(k); }

std::size_t error_offset(std::string_view text) {
  try {
    (void)parse_word_tokens(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(ParseWord, Examples) {
  const FormalSum fe = parse_word("F * E", {2}, -2);
  EXPECT_EQ(fe, FormalSum(Word({2}, -2, {E(), F()})));
  const FormalSum e2 = parse_word("E^(2)<1>", {3}, -3);
  EXPECT_EQ(e2, FormalSum(Word({3}, -3, {E(2)}), q(1)));
  EXPECT_TRUE(parse_word("E E", {2}, 0).empty());
}

TEST(ParseWord, Separators) {
  EXPECT_EQ(parse_word("F*E", {4}, 0), parse_word("F   E", {4}, 0));
  EXPECT_EQ(parse_word(" F<1> * E<-2> ", {4}, 0), FormalSum(Word({4}, 0, {E(), F()}), q(-1)));
  EXPECT_EQ(parse_word("1", {4}, 2), FormalSum(Word::identity({4}, 2)));
  EXPECT_EQ(parse_word("", {4}, 2), FormalSum(Word::identity({4}, 2)));
}

TEST(ParseWord, Errors) {
  EXPECT_EQ(error_offset("F * G"), 4u);
  EXPECT_EQ(error_offset("E^(0)"), 3u);
  EXPECT_EQ(error_offset("E^2"), 2u);
  EXPECT_EQ(error_offset("E *"), 3u);
  EXPECT_EQ(error_offset("E * * F"), 4u);
  EXPECT_EQ(error_offset("E<x>"), 2u);
  EXPECT_EQ(error_offset("1 E"), 2u);
  EXPECT_EQ(error_offset("E^(99999999999)"), 3u);
}

TEST(Display, Examples) {
  EXPECT_EQ(display(normalize(parse_word("F * E", {2}, -2))), "(q + q^-1)·1_{-2}");
  EXPECT_EQ(display(normalize(parse_word("F * E", {4}, -2))), "E*F|_{-2}  +  (q + q^-1)·1_{-2}");
  EXPECT_EQ(display(normalize(parse_word("F * E", {4}, -2)), {true, false}), "E*F|_{-2}  +  (q + q^-1).1_{-2}");
  EXPECT_EQ(display(parse_word("E^(2)<1>", {3}, -3)), "q·E^(2)|_{-3}");
  EXPECT_EQ(display(FormalSum()), "0");
  EXPECT_EQ(display(parse_word("E F", {4}, 0), {false, true}), "E*F|_{0} (E(-1)*F(-1))");
}

TEST(ParseProperty, RoundTripCorpus) {
  CorpusOptions opt;
  const auto corpus = random_word_corpus(opt);
  ASSERT_EQ(corpus.size(), 500u);
  for (const Word& w : corpus) {
    const std::string text = print_word(w);
    const FormalSum back = parse_word(text, w.config(), w.source());
    ASSERT_EQ(back.size(), 1u) << text;
    EXPECT_EQ(back.terms().begin()->first, w) << text;
    EXPECT_EQ(back.terms().begin()->second, BigradedLaurent(1));
  }
}

TEST(ParsePoly, Examples) {
  const MPoly p = parse_poly("x1^2*x2 - 3*x3 + 1", 3);
  EXPECT_EQ(p.to_string(), "x1^2*x2 - 3*x3 + 1");
  EXPECT_EQ(parse_poly("x_1 + x_2", 2), parse_poly("x2+x1", 2));
  EXPECT_EQ(parse_poly("2*3*x1", 2).to_string(), "6*x1");
  EXPECT_THROW(parse_poly("x3", 2), ParseError);
  EXPECT_THROW(parse_poly("", 2), ParseError);
  EXPECT_THROW(parse_poly("x1 x2", 2), ParseError);
  for (const auto& f : monomials_up_to(3, 4)) EXPECT_EQ(parse_poly(f.to_string(), 3), f);
}

TEST(ParseNHWord, Examples) {
  const NHWord w = parse_nh_word("X1 D1", 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], NHLetter::x(1));
  EXPECT_EQ(w[1], NHLetter::d(1));
  EXPECT_EQ(parse_nh_word("X_1,D_1", 2), w);
  EXPECT_EQ(nh_word_to_string(w), "X1 D1");
  EXPECT_THROW(parse_nh_word("D2", 2), ParseError);
  EXPECT_THROW(parse_nh_word("Y1", 2), ParseError);
}
