#pragma once

// Exact graded multiplicities: univariate and bigraded Laurent polynomials
// with arbitrary-precision integer coefficients, quantum integers and
// binomials, and Poincare polynomials of projective spaces, Grassmannians and
// complete flag varieties.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an exact division leaves a remainder. Reaching this from a
/// public entry point means an internal convention is wrong.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void append_coefficient(std::ostringstream& os, const Integer& c,
                               bool first, bool unit_monomial) {
  Integer mag = c < 0 ? Integer(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (unit_monomial || mag != 1) os << mag;
}

inline std::string power_string(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Laurent polynomial in one variable, stored densely from its lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Integer c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  Laurent(int c) : Laurent(Integer(c)) {}  // NOLINT

  static Laurent monomial(int exponent, Integer c = 1) {
    Laurent p(std::move(c));
    p.low_ = p.coeffs_.empty() ? 0 : exponent;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(int e) const {
    if (is_zero() || e < low_ || e > high_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Calls f(exponent, coefficient) for each nonzero term in increasing order.
  template <typename Fn>
  void for_each_term(Fn&& f) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) f(low_ + static_cast<int>(k), coeffs_[k]);
  }

  Laurent& operator+=(const Laurent& o) { return accumulate(o, 1); }
  Laurent& operator-=(const Laurent& o) { return accumulate(o, -1); }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// q -> q^-1.
  Laurent bar() const {
    Laurent r;
    if (is_zero()) return r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.low_ = -high_degree();
    return r;
  }

  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Value at q = 1.
  Integer at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Integer& c) { return c >= 0; });
  }

  /// Exact quotient; throws InexactDivision on a nonzero remainder.
  Laurent exact_divide(const Laurent& d) const {
    if (d.is_zero()) throw InexactDivision("Laurent division by zero");
    if (is_zero()) return {};
    // Both sides are units times polynomials with nonzero constant term, so
    // the quotient is a polynomial after removing the low exponents.
    std::vector<Integer> rem = coeffs_;
    const auto& dv = d.coeffs_;
    if (rem.size() < dv.size())
      throw InexactDivision("Laurent division: divisor has larger span");
    std::vector<Integer> quot(rem.size() - dv.size() + 1, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Integer& top = rem[k + dv.size() - 1];
      if (top == 0) continue;
      if (top % dv.back() != 0)
        throw InexactDivision("Laurent division: non-integral quotient");
      Integer t = top / dv.back();
      for (std::size_t j = 0; j < dv.size(); ++j) rem[k + j] -= t * dv[j];
      quot[k] = std::move(t);
    }
    if (std::any_of(rem.begin(), rem.end(),
                    [](const Integer& c) { return c != 0; }))
      throw InexactDivision("Laurent division leaves a remainder");
    Laurent q;
    q.coeffs_ = std::move(quot);
    q.low_ = low_ - d.low_;
    q.trim();
    return q;
  }

  /// Canonical text, highest exponent first, e.g. "q^2 + 1 + q^-2".
  std::string to_string(const char* var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high_degree(); e >= low_; --e) {
      const Integer& c = coeffs_[static_cast<std::size_t>(e - low_)];
      if (c == 0) continue;
      detail::append_coefficient(os, c, first, e == 0);
      if (e != 0) os << detail::power_string(var, e);
      first = false;
    }
    return os.str();
  }

 private:
  Laurent& accumulate(const Laurent& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0)
        for (auto& c : coeffs_) c = -c;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high_degree(), o.high_degree());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      out[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      auto& slot = out[static_cast<std::size_t>(o.low_ - lo) + k];
      if (sign > 0)
        slot += o.coeffs_[k];
      else
        slot -= o.coeffs_[k];
    }
    coeffs_ = std::move(out);
    low_ = lo;
    trim();
    return *this;
  }

  void trim() {
    std::size_t b = 0;
    while (b < coeffs_.size() && coeffs_[b] == 0) ++b;
    if (b == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t e = coeffs_.size();
    while (coeffs_[e - 1] == 0) --e;
    coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(b),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(e));
    low_ += static_cast<int>(b);
  }

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exponent pair (homological i, equivariant j) of the monomial s^i t^j.
struct Bidegree {
  int hom = 0;
  int eq = 0;
  auto operator<=>(const Bidegree&) const = default;
};

/// Laurent polynomial in the homological variable s and the equivariant
/// variable t. The grading shift <k> is the monomial q^k = s^k t^-k.
class BigradedLaurent {
 public:
  using Terms = std::map<Bidegree, Integer>;

  BigradedLaurent() = default;
  BigradedLaurent(Integer c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Bidegree{0, 0}, std::move(c));
  }
  BigradedLaurent(int c) : BigradedLaurent(Integer(c)) {}  // NOLINT

  static BigradedLaurent monomial(int hom, int eq, Integer c = 1) {
    BigradedLaurent r;
    if (c != 0) r.terms_.emplace(Bidegree{hom, eq}, std::move(c));
    return r;
  }
  /// q^k, i.e. the shift <k> = [k]{-k}.
  static BigradedLaurent q_power(int k) { return monomial(k, -k); }

  static BigradedLaurent from_q_line(const Laurent& p) {
    BigradedLaurent r;
    p.for_each_term([&](int e, const Integer& c) {
      r.terms_.emplace(Bidegree{e, -e}, c);
    });
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int hom, int eq) const {
    auto it = terms_.find(Bidegree{hom, eq});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer q_coefficient(int k) const { return coefficient(k, -k); }

  bool in_q_line() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.hom + kv.first.eq == 0; });
  }

  /// Projection to Z[q, q^-1]; throws unless the element lies in the q-line.
  Laurent to_q_line() const {
    if (!in_q_line())
      throw std::invalid_argument("BigradedLaurent is not in the q-line: " + to_string());
    Laurent r;
    for (const auto& [deg, c] : terms_) r += Laurent::monomial(deg.hom, c);
    return r;
  }

  bool is_monomial() const { return terms_.size() == 1; }
  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second >= 0; });
  }

  int min_hom_degree() const {
    int m = terms_.begin()->first.hom;
    for (const auto& kv : terms_) m = std::min(m, kv.first.hom);
    return m;
  }
  int max_hom_degree() const {
    int m = terms_.begin()->first.hom;
    for (const auto& kv : terms_) m = std::max(m, kv.first.hom);
    return m;
  }

  Integer at_one() const {
    Integer s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
  }

  /// Exponent negation (s,t) -> (s^-1, t^-1); on the q-line this is q <-> q^-1.
  BigradedLaurent bar() const {
    BigradedLaurent r;
    for (const auto& [deg, c] : terms_) r.terms_.emplace(Bidegree{-deg.hom, -deg.eq}, c);
    return r;
  }

  /// Inverse of a monomial with coefficient +-1.
  BigradedLaurent monomial_inverse() const {
    if (!is_monomial() || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
      throw std::invalid_argument("not an invertible monomial: " + to_string());
    return bar() * BigradedLaurent(terms_.begin()->second);
  }

  BigradedLaurent& operator+=(const BigradedLaurent& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, c);
    return *this;
  }
  BigradedLaurent& operator-=(const BigradedLaurent& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, -c);
    return *this;
  }
  friend BigradedLaurent operator+(BigradedLaurent a, const BigradedLaurent& b) { return a += b; }
  friend BigradedLaurent operator-(BigradedLaurent a, const BigradedLaurent& b) { return a -= b; }
  friend BigradedLaurent operator-(const BigradedLaurent& a) { return BigradedLaurent() - a; }

  friend BigradedLaurent operator*(const BigradedLaurent& a, const BigradedLaurent& b) {
    BigradedLaurent r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_)
        r.add_term(Bidegree{da.hom + db.hom, da.eq + db.eq}, ca * cb);
    return r;
  }
  BigradedLaurent& operator*=(const BigradedLaurent& o) { return *this = *this * o; }

  friend bool operator==(const BigradedLaurent&, const BigradedLaurent&) = default;

  /// Exact quotient of q-line elements.
  BigradedLaurent exact_divide(const BigradedLaurent& d) const {
    return from_q_line(to_q_line().exact_divide(d.to_q_line()));
  }

  /// Terms ordered by decreasing homological then equivariant degree.
  /// q-line elements print in q, e.g. "(q + q^-1)" prints as "q + q^-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    if (in_q_line()) return to_q_line().to_string("q");
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [deg, c] = *it;
      const bool unit = deg.hom == 0 && deg.eq == 0;
      detail::append_coefficient(os, c, first, unit);
      if (deg.hom != 0) os << detail::power_string("s", deg.hom);
      if (deg.eq != 0) os << detail::power_string("t", deg.eq);
      first = false;
    }
    return os.str();
  }

 private:
  void add_term(Bidegree d, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const BigradedLaurent& x) { return os << x.to_string(); }

/// Grothendieck-group image: [i]{j} -> (-1)^i (-q)^j, so <k> -> q^-k.
inline Laurent decategorify(const BigradedLaurent& x) {
  Laurent r;
  for (const auto& [deg, c] : x.terms()) {
    const bool negative = ((deg.hom + deg.eq) % 2) != 0;
    r += Laurent::monomial(deg.eq, negative ? Integer(-c) : c);
  }
  return r;
}

/// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
inline BigradedLaurent qint(int n) {
  if (n < 0) return -qint(-n);
  BigradedLaurent r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r += BigradedLaurent::q_power(e);
  return r;
}

/// [1][2]...[n]; qfact(0) = 1.
inline BigradedLaurent qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact of a negative integer");
  BigradedLaurent r = 1;
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

/// Gaussian binomial [m]!/([k]![m-k]!), zero outside 0 <= k <= m.
inline BigradedLaurent qbinom(int m, int k) {
  if (m < 0 || k < 0 || k > m) return {};
  return qfact(m).exact_divide(qfact(k) * qfact(m - k));
}

/// Symmetrized Poincare polynomial of P^n; zero for n = -1.
inline BigradedLaurent poincare_proj(int n) { return qint(n + 1); }

/// Symmetrized Poincare polynomial of G(k, n).
inline BigradedLaurent poincare_grassmannian(int k, int n) { return qbinom(n, k); }

/// Symmetrized Poincare polynomial of the complete flag variety of C^n.
inline BigradedLaurent poincare_flag(int n) { return qfact(n); }

}  // namespace qsl2
