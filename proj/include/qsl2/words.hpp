#pragma once

// Weight bookkeeping and the formal 1-morphism language: divided-power
// generators E^(r), F^(r), words anchored at a source weight, formal sums of
// words with graded multiplicities, and adjoints.
//
// Convention: letters[0] is applied first. A word is always labelled by its
// SOURCE weight; the midpoint weight of a letter E^(r) applied at mu is
// mu + r (mu - r for F^(r)).

#include "qsl2/qcoeff.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

enum class Kind : unsigned char { E, F };

inline Kind opposite(Kind k) { return k == Kind::E ? Kind::F : Kind::E; }
inline char kind_char(Kind k) { return k == Kind::E ? 'E' : 'F'; }

/// Highest weight N of the tensor-power string. Weights -N, -N+2, ..., N
/// are inhabited; every other weight category is zero.
struct WeightConfig {
  int n = 0;

  bool inhabited(int weight) const {
    return weight >= -n && weight <= n && ((weight - n) % 2 == 0);
  }
  int parity() const { return ((n % 2) + 2) % 2; }
  /// Number of lowered tensor factors, (N - weight) / 2.
  int lowered(int weight) const { return (n - weight) / 2; }

  std::vector<int> weights() const {
    std::vector<int> out;
    for (int w = -n; w <= n; w += 2) out.push_back(w);
    return out;
  }

  auto operator<=>(const WeightConfig&) const = default;
};

struct Generator {
  Kind kind = Kind::E;
  int power = 1;

  /// Signed weight change, +2r for E and -2r for F.
  int step() const { return kind == Kind::E ? 2 * power : -2 * power; }

  auto operator<=>(const Generator&) const = default;
};

inline Generator E(int r = 1) { return {Kind::E, r}; }
inline Generator F(int r = 1) { return {Kind::F, r}; }

/// A composable sequence of generators anchored at a source weight. A Word
/// may pass through uninhabited weights (then it is zero); make_word filters
/// those out, but the matrix oracle accepts raw words as well.
class Word {
 public:
  Word() = default;
  Word(WeightConfig config, int source, std::vector<Generator> letters)
      : config_(config), source_(source), letters_(std::move(letters)) {
    for (const auto& g : letters_)
      if (g.power < 1) throw std::invalid_argument("generator power must be >= 1");
  }

  static Word identity(WeightConfig config, int weight) { return Word(config, weight, {}); }

  const WeightConfig& config() const { return config_; }
  int source() const { return source_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Weight at which letters[index] is applied; weight_before(length()) is
  /// the target.
  int weight_before(std::size_t index) const {
    int w = source_;
    for (std::size_t k = 0; k < index; ++k) w += letters_[k].step();
    return w;
  }
  int target() const { return weight_before(letters_.size()); }

  /// Midpoint weight of letters[index], the weight the notation
  /// E^(r)(lambda) is indexed by.
  int midpoint(std::size_t index) const { return weight_before(index) + letters_[index].step() / 2; }

  /// True iff some weight along the word is uninhabited.
  bool is_zero() const {
    int w = source_;
    if (!config_.inhabited(w)) return true;
    for (const auto& g : letters_) {
      w += g.step();
      if (!config_.inhabited(w)) return true;
    }
    return false;
  }

  /// Number of maximal runs of equal kind.
  std::size_t blocks() const {
    std::size_t b = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k)
      if (k == 0 || letters_[k].kind != letters_[k - 1].kind) ++b;
    return b;
  }

  /// Word applying `other` after this one.
  Word then(const Word& other) const {
    if (other.source_ != target())
      throw std::invalid_argument("composing words with mismatched weights");
    std::vector<Generator> ls = letters_;
    ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
    return Word(config_, source_, std::move(ls));
  }

  auto operator<=>(const Word&) const = default;

 private:
  WeightConfig config_;
  int source_ = 0;
  std::vector<Generator> letters_;
};

/// Written-order label with midpoint weights, e.g. "E(-1)*F(-1)"; "1_{w}" for
/// an identity.
inline std::string midpoint_label(const Word& w) {
  if (w.is_identity()) return "1_{" + std::to_string(w.source()) + "}";
  std::string s;
  for (std::size_t k = w.length(); k-- > 0;) {
    const Generator& g = w.letters()[k];
    if (!s.empty()) s += "*";
    s += kind_char(g.kind);
    if (g.power != 1) s += "^(" + std::to_string(g.power) + ")";
    s += "(" + std::to_string(w.midpoint(k)) + ")";
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << midpoint_label(w) << " from " << w.source() << " (N=" << w.config().n << ")";
}

/// Word or the distinguished Zero (nullopt).
using MaybeWord = std::optional<Word>;

/// Total: returns Zero for wrong parity or any out-of-range weight.
inline MaybeWord make_word(WeightConfig config, int source, std::vector<Generator> letters) {
  for (const auto& g : letters)
    if (g.power < 1) return std::nullopt;
  Word w(config, source, std::move(letters));
  if (w.is_zero()) return std::nullopt;
  return w;
}

/// Finite linear combination of nonzero words with nonzero multiplicities.
class FormalSum {
 public:
  using Terms = std::map<Word, BigradedLaurent>;

  FormalSum() = default;
  explicit FormalSum(const Word& w, BigradedLaurent mult = 1) { add(w, std::move(mult)); }
  explicit FormalSum(const MaybeWord& w, BigradedLaurent mult = 1) {
    if (w) add(*w, std::move(mult));
  }

  /// Adds mult * w. Zero words and zero multiplicities are dropped.
  void add(const Word& w, const BigradedLaurent& mult) {
    if (mult.is_zero() || w.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  FormalSum scaled(const BigradedLaurent& c) const {
    FormalSum r;
    for (const auto& [w, m] : terms_) r.add(w, m * c);
    return r;
  }

  /// Removes and returns the smallest term; the sum must be nonempty.
  std::pair<Word, BigradedLaurent> pop_front() {
    auto node = terms_.extract(terms_.begin());
    return {std::move(node.key()), std::move(node.mapped())};
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigradedLaurent coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigradedLaurent() : it->second;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

enum class Side { Left, Right };

struct Adjoint {
  Word word;
  BigradedLaurent shift;  ///< a monomial q^k: the adjoint is word<k>
};

/// Left or right adjoint of a nonzero word:
///   (E^(r) at midpoint m)_R = F^(r)<rm>,  (E^(r))_L = F^(r)<-rm>,
///   (F^(r) at midpoint m)_R = E^(r)<-rm>, (F^(r))_L = E^(r)<rm>,
/// and adjoints of composites reverse the order.
inline Adjoint adjoint(const Word& w, Side side) {
  std::vector<Generator> letters;
  letters.reserve(w.length());
  int exponent = 0;
  for (std::size_t k = w.length(); k-- > 0;) {
    const Generator& g = w.letters()[k];
    const int m = w.midpoint(k);
    const int sign = (g.kind == Kind::E) == (side == Side::Right) ? 1 : -1;
    exponent += sign * g.power * m;
    letters.push_back(Generator{opposite(g.kind), g.power});
  }
  return {Word(w.config(), w.target(), std::move(letters)), BigradedLaurent::q_power(exponent)};
}

/// Zero maps to Zero with shift 1.
inline std::pair<MaybeWord, BigradedLaurent> adjoint(const MaybeWord& w, Side side) {
  if (!w) return {std::nullopt, BigradedLaurent(1)};
  auto a = adjoint(*w, side);
  return {std::move(a.word), std::move(a.shift)};
}

}  // namespace qsl2
