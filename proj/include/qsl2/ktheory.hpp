#pragma once

// Decategorified oracle: the U_q(sl2) action on the N-fold tensor power of
// the two-dimensional representation, as exact matrices over Z[q, q^-1].
//
// Basis of the weight-lambda space: v_S for the k-element subsets S of
// {1..N} (k = (N - lambda)/2 lowered factors), in lexicographic order.
// Matrices act on column vectors: rows index the target basis.

#include "qsl2/qcoeff.hpp"
#include "qsl2/report.hpp"
#include "qsl2/words.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qsl2 {

/// Dense matrix over a commutative ring with value semantics.
template <typename Ring>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Ring& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Ring& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const Ring& c) const {
    Matrix r = *this;
    for (auto& x : r.data_)
      if (!x.is_zero()) x = c * x;
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  template <typename Fn>
  void for_each(Fn&& f) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) f(i, j, (*this)(i, j));
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> data_;
};

using KMatrix = Matrix<Laurent>;

/// Ordered basis of one weight space; subsets are bitmasks over positions
/// 0..N-1 (position p is tensor factor p+1).
struct WeightBasis {
  int n = 0;
  int weight = 0;
  std::vector<std::uint32_t> subsets;
  std::map<std::uint32_t, std::size_t> index;

  std::size_t size() const { return subsets.size(); }

  static WeightBasis make(int n, int weight) {
    WeightBasis b;
    b.n = n;
    b.weight = weight;
    if (!WeightConfig{n}.inhabited(weight)) return b;
    const int k = WeightConfig{n}.lowered(weight);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(chosen.size()) == k) {
        std::uint32_t mask = 0;
        for (int p : chosen) mask |= (1u << p);
        b.index.emplace(mask, b.subsets.size());
        b.subsets.push_back(mask);
        return;
      }
      for (int p = start; p < n; ++p) {
        chosen.push_back(p);
        self(self, p + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    return b;
  }

  /// "{1,3}"-style label of basis vector i (1-based positions).
  std::string label(std::size_t i) const {
    std::string s = "{";
    bool first = true;
    for (int p = 0; p < n; ++p)
      if (subsets[i] & (1u << p)) {
        if (!first) s += ",";
        s += std::to_string(p + 1);
        first = false;
      }
    return s + "}";
  }
};

/// Placement of K-factors in the iterated coproduct. E acting on factor p
/// picks up q^(e_sign * sum of weights of the factors on e_side of p);
/// likewise F with f_side and f_sign.
struct Coproduct {
  Side e_side = Side::Left;
  int e_sign = 1;
  Side f_side = Side::Right;
  int f_sign = -1;

  /// Delta(E) = E(x)1 + K(x)E, Delta(F) = F(x)K^-1 + 1(x)F.
  static Coproduct standard() { return {}; }

  static std::vector<Coproduct> variants() {
    std::vector<Coproduct> out;
    for (Side es : {Side::Left, Side::Right})
      for (int esg : {1, -1})
        for (Side fs : {Side::Left, Side::Right})
          for (int fsg : {1, -1}) out.push_back({es, esg, fs, fsg});
    return out;
  }

  std::string name() const {
    auto side = [](Side s) { return s == Side::Left ? "left" : "right"; };
    auto sign = [](int v) { return v > 0 ? "+" : "-"; };
    return std::string("e-") + side(e_side) + sign(e_sign) + ",f-" + side(f_side) + sign(f_sign);
  }

  static Coproduct parse(const std::string& s) {
    for (const auto& c : variants())
      if (c.name() == s) return c;
    throw std::invalid_argument("unknown coproduct convention '" + s + "'");
  }

  auto operator<=>(const Coproduct&) const = default;
};

/// Matrices of generators and words on V^(x)N, with a per-instance cache of
/// generator matrices. Not thread-safe; use one instance per worker.
class TensorPower {
 public:
  explicit TensorPower(int n, Coproduct c = Coproduct::standard()) : n_(n), coproduct_(c) {
    if (n < 0 || n > 16) throw std::invalid_argument("tensor power N must lie in [0, 16]");
  }

  int n() const { return n_; }
  const Coproduct& coproduct() const { return coproduct_; }

  const WeightBasis& basis(int weight) {
    auto it = bases_.find(weight);
    if (it == bases_.end()) it = bases_.emplace(weight, WeightBasis::make(n_, weight)).first;
    return it->second;
  }
  std::size_t dim(int weight) { return basis(weight).size(); }

  /// E^(r) or F^(r) acting from `source`: the r-fold product of the
  /// single-step matrix divided exactly by [r]!.
  const KMatrix& generator(int source, Kind kind, int r) {
    const auto key = std::make_tuple(source, kind, r);
    auto it = generators_.find(key);
    if (it != generators_.end()) return it->second;
    KMatrix m;
    if (r == 1) {
      m = single(source, kind);
    } else {
      const int step = kind == Kind::E ? 2 : -2;
      m = KMatrix::identity(dim(source));
      for (int k = 0; k < r; ++k) m = single(source + k * step, kind) * m;
      const Laurent divisor = decategorify(qfact(r));
      KMatrix q(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).exact_divide(divisor);
      m = std::move(q);
    }
    return generators_.emplace(key, std::move(m)).first->second;
  }

  /// Product of generator matrices in application order.
  KMatrix word(const Word& w) {
    KMatrix m = KMatrix::identity(dim(w.source()));
    for (std::size_t k = 0; k < w.length(); ++k) {
      const auto& g = w.letters()[k];
      m = generator(w.weight_before(k), g.kind, g.power) * m;
    }
    return m;
  }

  /// Sum of decategorified multiplicities times word matrices; every word
  /// must run from `source` to `target`.
  KMatrix formal_sum(const FormalSum& s, int source, int target) {
    KMatrix m(dim(target), dim(source));
    for (const auto& [w, mult] : s.terms()) {
      if (w.source() != source || w.target() != target)
        throw std::invalid_argument("formal sum term with mismatched weights");
      m += word(w).scaled(decategorify(mult));
    }
    return m;
  }

 private:
  KMatrix single(int source, Kind kind) {
    const int target = source + (kind == Kind::E ? 2 : -2);
    const WeightBasis& from = basis(source);
    const WeightBasis& to = basis(target);
    KMatrix m(to.size(), from.size());
    if (from.size() == 0 || to.size() == 0) return m;
    const Side side = kind == Kind::E ? coproduct_.e_side : coproduct_.f_side;
    const int sign = kind == Kind::E ? coproduct_.e_sign : coproduct_.f_sign;
    for (std::size_t col = 0; col < from.size(); ++col) {
      const std::uint32_t s = from.subsets[col];
      for (int p = 0; p < n_; ++p) {
        const bool lowered = (s >> p) & 1u;
        if ((kind == Kind::E) != lowered) continue;
        int wt = 0;
        for (int m2 = 0; m2 < n_; ++m2) {
          if (m2 == p || ((m2 < p) != (side == Side::Left))) continue;
          wt += ((s >> m2) & 1u) ? -1 : 1;
        }
        const std::uint32_t t = s ^ (1u << p);
        m(to.index.at(t), col) += Laurent::monomial(sign * wt);
      }
    }
    return m;
  }

  int n_;
  Coproduct coproduct_;
  std::map<int, WeightBasis> bases_;
  std::map<std::tuple<int, Kind, int>, KMatrix> generators_;
};

inline KMatrix generator_matrix(int n, int source, Kind kind, int r,
                                Coproduct c = Coproduct::standard()) {
  TensorPower tp(n, c);
  return tp.generator(source, kind, r);
}

inline KMatrix word_matrix(const Word& w, Coproduct c = Coproduct::standard()) {
  TensorPower tp(w.config().n, c);
  return tp.word(w);
}

inline KMatrix formalsum_matrix(const WeightConfig& config, const FormalSum& s, int source, int target,
                                Coproduct c = Coproduct::standard()) {
  TensorPower tp(config.n, c);
  return tp.formal_sum(s, source, target);
}

inline std::string matrix_to_string(const KMatrix& m, const WeightBasis& rows, const WeightBasis& cols) {
  std::ostringstream os;
  os << "rows " << rows.size() << " (weight " << rows.weight << "), cols " << cols.size() << " (weight "
     << cols.weight << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        os << "  " << rows.label(i) << " <- " << cols.label(j) << " : " << m(i, j).to_string() << "\n";
  return os.str();
}

enum class Relation { Merge, Commute, Casimir, Dimensions, All };

inline Relation parse_relation(const std::string& s) {
  if (s == "merge") return Relation::Merge;
  if (s == "commute") return Relation::Commute;
  if (s == "casimir") return Relation::Casimir;
  if (s == "dimensions") return Relation::Dimensions;
  if (s == "all") return Relation::All;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

namespace detail {

inline std::string instance_key(const char* rel, std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s = rel;
  for (const auto& [k, v] : kv) s += std::string(" ") + k + "=" + std::to_string(v);
  return s;
}

inline Word raw_word(int n, int source, std::initializer_list<Generator> gs) {
  std::vector<Generator> ls;
  for (const auto& g : gs)
    if (g.power > 0) ls.push_back(g);
  return Word(WeightConfig{n}, source, std::move(ls));
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

/// E^(r2) E^(r1) = [r1+r2 choose r1] E^(r1+r2), same for F, from every
/// inhabited source where the composite is nonzero.
inline void check_merge(TensorPower& tp, Report& rep) {
  const int n = tp.n();
  for (Kind kind : {Kind::E, Kind::F})
    for (int src : WeightConfig{n}.weights())
      for (int r1 = 1; r1 <= n; ++r1)
        for (int r2 = 1; r1 + r2 <= n; ++r2) {
          const int tgt = src + (kind == Kind::E ? 2 : -2) * (r1 + r2);
          if (!WeightConfig{n}.inhabited(tgt)) continue;
          const KMatrix lhs = tp.word(detail::raw_word(n, src, {{kind, r1}, {kind, r2}}));
          const KMatrix rhs = tp.generator(src, kind, r1 + r2).scaled(decategorify(qbinom(r1 + r2, r1)));
          rep.add(detail::instance_key(kind == Kind::E ? "merge E" : "merge F",
                                       {{"N", n}, {"source", src}, {"r1", r1}, {"r2", r2}}),
                  lhs == rhs ? "equal" : "matrices differ", lhs == rhs);
        }
}

/// Both straightening identities wherever their (non-strict) conditions hold.
inline void check_commute(TensorPower& tp, Report& rep, int max_power = 3) {
  const int n = tp.n();
  for (int mu : WeightConfig{n}.weights())
    for (int a = 1; a <= max_power; ++a)
      for (int b = 1; b <= max_power; ++b) {
        if (b - a >= mu) {  // E^(a) first, then F^(b)
          const KMatrix lhs = tp.word(detail::raw_word(n, mu, {E(a), F(b)}));
          KMatrix rhs(lhs.rows(), lhs.cols());
          for (int j = 0; j <= std::min(a, b); ++j)
            rhs += tp.word(detail::raw_word(n, mu, {F(b - j), E(a - j)}))
                       .scaled(decategorify(qbinom(b - a - mu, j)));
          rep.add(detail::instance_key("commute FE", {{"N", n}, {"source", mu}, {"a", a}, {"b", b}}),
                  lhs == rhs ? "equal" : "matrices differ", lhs == rhs);
        }
        if (b - a >= -mu) {  // F^(a) first, then E^(b)
          const KMatrix lhs = tp.word(detail::raw_word(n, mu, {F(a), E(b)}));
          KMatrix rhs(lhs.rows(), lhs.cols());
          for (int j = 0; j <= std::min(a, b); ++j)
            rhs += tp.word(detail::raw_word(n, mu, {E(b - j), F(a - j)}))
                       .scaled(decategorify(qbinom(mu - a + b, j)));
          rep.add(detail::instance_key("commute EF", {{"N", n}, {"source", mu}, {"a", a}, {"b", b}}),
                  lhs == rhs ? "equal" : "matrices differ", lhs == rhs);
        }
      }
}

/// EF - FE = [lambda] id on every weight space.
inline void check_casimir(TensorPower& tp, Report& rep) {
  const int n = tp.n();
  for (int lambda : WeightConfig{n}.weights()) {
    const KMatrix ef = tp.word(detail::raw_word(n, lambda, {F(1), E(1)}));
    const KMatrix fe = tp.word(detail::raw_word(n, lambda, {E(1), F(1)}));
    const KMatrix rhs = KMatrix::identity(tp.dim(lambda)).scaled(decategorify(qint(lambda)));
    const bool ok = (ef - fe) == rhs;
    rep.add(detail::instance_key("casimir", {{"N", n}, {"weight", lambda}}),
            ok ? "EF - FE = [" + std::to_string(lambda) + "] id" : "EF - FE differs from [lambda] id", ok);
  }
}

inline void check_dimensions(TensorPower& tp, Report& rep) {
  const int n = tp.n();
  for (int lambda : WeightConfig{n}.weights()) {
    const int k = WeightConfig{n}.lowered(lambda);
    const auto expected = detail::binomial(n, k);
    const bool ok = tp.dim(lambda) == expected;
    rep.add(detail::instance_key("dimension", {{"N", n}, {"weight", lambda}}),
            "dim " + std::to_string(tp.dim(lambda)) + ", binom(" + std::to_string(n) + "," + std::to_string(k) +
                ") = " + std::to_string(expected),
            ok);
  }
}

/// Every E^(r), F^(r) matrix divides exactly by [r]! and has nonnegative
/// Laurent coefficients.
inline void check_integrality(TensorPower& tp, Report& rep, int max_power = 3) {
  const int n = tp.n();
  for (Kind kind : {Kind::E, Kind::F})
    for (int src : WeightConfig{n}.weights())
      for (int r = 1; r <= max_power; ++r) {
        const std::string key = detail::instance_key(kind == Kind::E ? "integrality E" : "integrality F",
                                                     {{"N", n}, {"source", src}, {"r", r}});
        try {
          const KMatrix& m = tp.generator(src, kind, r);
          bool nonneg = true;
          m.for_each([&](std::size_t, std::size_t, const Laurent& x) {
            nonneg = nonneg && x.has_nonnegative_coefficients();
          });
          rep.add(key, nonneg ? "exact, nonnegative" : "negative coefficient", nonneg);
        } catch (const InexactDivision& e) {
          rep.add(key, e.what(), false);
        }
      }
}

inline Report verify_relations(int n, Relation which, Coproduct c = Coproduct::standard()) {
  Report rep;
  rep.name = "ktheory";
  rep.params = Json{{"N", n}, {"coproduct", c.name()}};
  TensorPower tp(n, c);
  try {
    if (which == Relation::Merge || which == Relation::All) check_merge(tp, rep);
    if (which == Relation::Commute || which == Relation::All) check_commute(tp, rep);
    if (which == Relation::Casimir || which == Relation::All) check_casimir(tp, rep);
    if (which == Relation::Dimensions || which == Relation::All) check_dimensions(tp, rep);
  } catch (const InexactDivision& e) {
    // A wrong convention can break divided-power integrality.
    rep.add("divided powers", e.what(), false);
  }
  return rep;
}

}  // namespace qsl2
