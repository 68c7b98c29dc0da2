#pragma once

// Normalization of words into canonical formal sums using the merge rule
//   E^(r2) E^(r1) = [r1+r2 choose r1] E^(r1+r2)        (same for F)
// and the straightening rules, with mu the weight where the pair starts:
//   F^(b) E^(a) 1_mu = sum_j [b-a-mu choose j] E^(a-j) F^(b-j) 1_mu   if b-a >= mu
//   E^(b) F^(a) 1_mu = sum_j [mu-a+b choose j] F^(a-j) E^(b-j) 1_mu   if b-a > -mu
// (written with the last-applied letter on the left).

#include "qsl2/qcoeff.hpp"
#include "qsl2/words.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsl2 {

/// Canonical words: 1_l, a single block, E^(a)F^(b)1_l (F first) with
/// b - a >= l, or F^(b)E^(a)1_l (E first) with b - a < l.
inline bool is_canonical(const Word& w) {
  if (w.is_zero()) return false;
  const auto& ls = w.letters();
  if (ls.size() <= 1) return true;
  if (ls.size() != 2 || ls[0].kind == ls[1].kind) return false;
  const int lambda = w.source();
  if (ls[0].kind == Kind::F) {
    const int b = ls[0].power, a = ls[1].power;
    return b - a >= lambda;
  }
  const int a = ls[0].power, b = ls[1].power;
  return b - a < lambda;
}

namespace detail {

inline Word replace_pair(const Word& w, std::size_t pos, std::vector<Generator> middle) {
  std::vector<Generator> ls(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  for (const auto& g : middle)
    if (g.power > 0) ls.push_back(g);
  ls.insert(ls.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos + 2), w.letters().end());
  return Word(w.config(), w.source(), std::move(ls));
}

}  // namespace detail

/// Merges letters[pos] (power r1, applied first) with letters[pos+1].
inline FormalSum merge_step(const Word& w, std::size_t pos) {
  assert(pos + 1 < w.length());
  const Generator lo = w.letters()[pos], hi = w.letters()[pos + 1];
  assert(lo.kind == hi.kind);
  const int total = lo.power + hi.power;
  FormalSum out;
  out.add(detail::replace_pair(w, pos, {Generator{lo.kind, total}}), qbinom(total, lo.power));
  return out;
}

struct Straightened {
  bool applicable = false;
  FormalSum sum;  ///< the unchanged word when not applicable
};

/// Straightens the mixed pair at letters[pos], letters[pos+1] if the rewrite
/// condition holds there.
inline Straightened straighten_step(const Word& w, std::size_t pos) {
  assert(pos + 1 < w.length());
  const Generator first = w.letters()[pos], second = w.letters()[pos + 1];
  assert(first.kind != second.kind);
  const int mu = w.weight_before(pos);
  const int a = first.power, b = second.power;
  Straightened r;
  int m = 0;
  if (first.kind == Kind::E) {
    if (b - a < mu) {
      r.sum.add(w, 1);
      return r;
    }
    m = b - a - mu;
  } else {
    if (b - a <= -mu) {
      r.sum.add(w, 1);
      return r;
    }
    m = mu - a + b;
  }
  r.applicable = true;
  const int top = std::min({a, b, m});
  for (int j = 0; j <= top; ++j) {
    // The lower terms swap order: second kind (power b-j) now applies first.
    Word out = detail::replace_pair(w, pos, {Generator{second.kind, b - j}, Generator{first.kind, a - j}});
    r.sum.add(out, qbinom(m, j));
  }
  return r;
}

enum class Strategy { Leftmost, Rightmost };

struct NormalizeOptions {
  Strategy strategy = Strategy::Leftmost;
  std::size_t step_budget = 1'000'000;
};

struct NormalizeStats {
  std::size_t steps = 0;
};

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// One elementary rewrite of a non-canonical word: merge a like-kind pair if
/// any exists, otherwise straighten an applicable mixed pair.
inline FormalSum rewrite_once(const Word& w, Strategy s) {
  const std::size_t n = w.length();
  auto positions = [&] {
    std::vector<std::size_t> p;
    for (std::size_t k = 0; k + 1 < n; ++k) p.push_back(k);
    if (s == Strategy::Rightmost) std::reverse(p.begin(), p.end());
    return p;
  }();
  for (auto k : positions)
    if (w.letters()[k].kind == w.letters()[k + 1].kind) return merge_step(w, k);
  for (auto k : positions) {
    auto st = straighten_step(w, k);
    if (st.applicable) return st.sum;
  }
  throw std::logic_error("non-canonical word admits no rewrite");
}

}  // namespace detail

inline FormalSum normalize(const FormalSum& x, const NormalizeOptions& opts = {},
                           NormalizeStats* stats = nullptr) {
  FormalSum pending = x;
  FormalSum done;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto [w, mult] = pending.pop_front();
    if (is_canonical(w)) {
      done.add(w, mult);
      continue;
    }
    if (++steps > opts.step_budget)
      throw NonTermination("normalize exceeded step budget of " + std::to_string(opts.step_budget));
    pending += detail::rewrite_once(w, opts.strategy).scaled(mult);
  }
  if (stats) stats->steps += steps;
  return done;
}

inline FormalSum normalize(const Word& w, const NormalizeOptions& opts = {},
                           NormalizeStats* stats = nullptr) {
  return normalize(FormalSum(w), opts, stats);
}

}  // namespace qsl2
