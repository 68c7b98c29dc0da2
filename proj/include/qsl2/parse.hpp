#pragma once

// Surface syntax.
//
// Words:  token := ("E" | "F") ["^(" INT ")"] ["<" INT ">"], separated by
// whitespace or "*". The leftmost token applies last, so "F * E" applies E
// first. "<k>" multiplies the coefficient by q^k. "1" or "" is the identity.
//
// Polynomials: sums of terms like "-3*x1^2*x2", variables x1..xn or x_1..x_n.
// Nil-Hecke words: "X1 D1" or "X_1,D_1", applied left to right.

#include "qsl2/nilhecke.hpp"
#include "qsl2/qcoeff.hpp"
#include "qsl2/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsl2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected an integer");
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<int>::max()) fail_at(start, "integer out of range");
      advance();
    }
    return static_cast<int>(neg ? -v : v);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] static void fail_at(std::size_t at, const std::string& what) { throw ParseError(at, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Letters in written order (leftmost applies last) plus the accumulated q-shift.
struct ParsedWord {
  std::vector<Generator> written_order;
  int shift = 0;
};

inline ParsedWord parse_word_tokens(std::string_view text) {
  detail::Cursor c(text);
  ParsedWord out;
  c.skip_space();
  if (c.done()) return out;
  if (c.peek() == '1') {
    c.advance();
    c.skip_space();
    if (!c.done()) c.fail("unexpected input after identity '1'");
    return out;
  }
  bool need_token = true;
  while (true) {
    c.skip_space();
    if (c.done()) {
      if (need_token) c.fail("expected a generator E or F");
      break;
    }
    if (!need_token && c.accept('*')) {
      need_token = true;
      continue;
    }
    Generator g;
    if (c.accept('E'))
      g.kind = Kind::E;
    else if (c.accept('F'))
      g.kind = Kind::F;
    else
      c.fail(std::string("unexpected character '") + c.peek() + "'");
    if (c.accept('^')) {
      c.expect('(');
      const std::size_t at = c.pos();
      g.power = c.integer(false);
      if (g.power < 1) detail::Cursor::fail_at(at, "divided power must be >= 1");
      c.expect(')');
    }
    if (c.accept('<')) {
      out.shift += c.integer(true);
      c.expect('>');
    }
    out.written_order.push_back(g);
    need_token = false;
  }
  return out;
}

/// One-term formal sum q^shift * word at `source`, or empty if the word is Zero.
inline FormalSum parse_word(std::string_view text, const WeightConfig& config, int source) {
  ParsedWord p = parse_word_tokens(text);
  std::vector<Generator> letters(p.written_order.rbegin(), p.written_order.rend());
  return FormalSum(make_word(config, source, std::move(letters)), BigradedLaurent::q_power(p.shift));
}

/// Written order joined by "*", e.g. "E^(2)*F"; "1" for an identity.
inline std::string print_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (std::size_t k = w.length(); k-- > 0;) {
    const Generator& g = w.letters()[k];
    if (!s.empty()) s += "*";
    s += kind_char(g.kind);
    if (g.power != 1) s += "^(" + std::to_string(g.power) + ")";
  }
  return s;
}

struct DisplayOptions {
  bool ascii = false;
  bool midpoints = false;  ///< append the midpoint-weight form in parentheses
};

inline std::string display_term(const Word& w, const BigradedLaurent& m, const DisplayOptions& opt = {}) {
  std::string s;
  if (m != BigradedLaurent(1)) {
    const std::string c = m.to_string();
    s += m.size() > 1 ? "(" + c + ")" : c;
    s += opt.ascii ? "." : "·";
  }
  if (w.is_identity())
    s += "1_{" + std::to_string(w.source()) + "}";
  else
    s += print_word(w) + "|_{" + std::to_string(w.source()) + "}";
  if (opt.midpoints && !w.is_identity()) s += " (" + midpoint_label(w) + ")";
  return s;
}

/// Terms ordered longest word first, then by word; "0" for the empty sum.
inline std::vector<std::pair<Word, BigradedLaurent>> ordered_terms(const FormalSum& s) {
  std::vector<std::pair<Word, BigradedLaurent>> v(s.terms().begin(), s.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.length() != b.first.length()) return a.first.length() > b.first.length();
    return a.first < b.first;
  });
  return v;
}

inline std::string display(const FormalSum& s, const DisplayOptions& opt = {}) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [w, m] : ordered_terms(s)) {
    if (!out.empty()) out += "  +  ";
    out += display_term(w, m, opt);
  }
  return out;
}

inline MPoly parse_poly(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("polynomial ring needs n >= 1");
  detail::Cursor c(text);
  const auto nv = static_cast<std::size_t>(n);
  MPoly out(nv);
  auto factor = [&](MPoly::Exponents& e, Integer& coeff) {
    c.skip_space();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff *= c.integer(false);
      return;
    }
    const std::size_t at = c.pos();
    if (!c.accept('x')) c.fail("expected a coefficient or variable x<i>");
    c.accept('_');
    const int i = c.integer(false);
    if (i < 1 || i > n) detail::Cursor::fail_at(at, "variable x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
    int k = 1;
    c.skip_space();
    if (c.accept('^')) {
      c.skip_space();
      k = c.integer(false);
    }
    e[static_cast<std::size_t>(i - 1)] += k;
  };
  c.skip_space();
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    MPoly::Exponents e(nv, 0);
    Integer coeff = sign;
    factor(e, coeff);
    while (true) {
      c.skip_space();
      if (!c.accept('*')) break;
      factor(e, coeff);
    }
    out += MPoly::monomial(std::move(e), coeff);
    first = false;
  }
  return out;
}

inline NHWord parse_nh_word(std::string_view text, int n) {
  detail::Cursor c(text);
  NHWord out;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    if (!out.empty() && c.accept(',')) c.skip_space();
    const std::size_t at = c.pos();
    NHLetter l;
    if (c.accept('X'))
      l.op = NHLetter::Op::X;
    else if (c.accept('D'))
      l.op = NHLetter::Op::D;
    else
      c.fail("expected X<i> or D<i>");
    c.accept('_');
    l.index = c.integer(false);
    const int hi = l.op == NHLetter::Op::X ? n : n - 1;
    if (l.index < 1 || l.index > hi)
      detail::Cursor::fail_at(at, l.to_string() + " out of range for n = " + std::to_string(n));
    out.push_back(l);
  }
  return out;
}

}  // namespace qsl2
