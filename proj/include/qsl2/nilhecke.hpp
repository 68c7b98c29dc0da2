#pragma once

// The nil affine Hecke algebra in its polynomial representation: X_i acts by
// multiplication with x_i and T_i by the Demazure operator
//   D_i f = (f - s_i f) / (x_i - x_{i+1}),
// where s_i swaps x_i and x_{i+1}. Variables are 1-based; deg x_i = 2.

#include "qsl2/qcoeff.hpp"
#include "qsl2/report.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

/// Sparse multivariate polynomial over Z in a fixed number of variables.
class MPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, Integer c) {
    return monomial(Exponents(nvars, 0), std::move(c));
  }
  static MPoly monomial(Exponents e, Integer c = 1) {
    MPoly p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }
  static MPoly variable(std::size_t nvars, int i) {
    check_var(nvars, i);
    Exponents e(nvars, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(std::move(e));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total polynomial degree in the x's, or -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool is_homogeneous() const {
    if (is_zero()) return true;
    const int d = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return total(kv.first) == d; });
  }

  MPoly& operator+=(const MPoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly(a.nvars_) - a; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const Integer& c, const MPoly& p) {
    MPoly r(p.nvars_);
    for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly times_variable(int i) const {
    check_var(nvars_, i);
    MPoly r(nvars_);
    for (const auto& [e0, c] : terms_) {
      Exponents e = e0;
      ++e[static_cast<std::size_t>(i - 1)];
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  /// s_i: swaps x_i and x_{i+1}.
  MPoly swapped(int i) const {
    check_var(nvars_, i);
    check_var(nvars_, i + 1);
    MPoly r(nvars_);
    for (const auto& [e0, c] : terms_) {
      Exponents e = e0;
      std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  /// Exact quotient by (x_i - x_{i+1}) via synthetic division in x_i;
  /// throws InexactDivision on a nonzero remainder.
  MPoly divide_by_difference(int i) const {
    check_var(nvars_, i);
    check_var(nvars_, i + 1);
    const std::size_t a = static_cast<std::size_t>(i - 1);
    // f = sum_k c_k x_i^k with c_k free of x_i.
    std::map<int, MPoly> by_power;
    for (const auto& [e0, c] : terms_) {
      Exponents e = e0;
      const int k = e[a];
      e[a] = 0;
      auto it = by_power.try_emplace(k, MPoly(nvars_)).first;
      it->second.add_term(e, c);
    }
    if (by_power.empty()) return MPoly(nvars_);
    const int top = by_power.rbegin()->first;
    auto coeff = [&](int k) {
      auto it = by_power.find(k);
      return it == by_power.end() ? MPoly(nvars_) : it->second;
    };
    // q_{top-1} = c_top, q_{k-1} = c_k + x_{i+1} q_k, remainder c_0 + x_{i+1} q_0.
    std::vector<MPoly> quotient(static_cast<std::size_t>(std::max(top, 0)), MPoly(nvars_));
    MPoly carry(nvars_);
    for (int k = top; k >= 1; --k) {
      carry = coeff(k) + carry.times_variable(i + 1);
      quotient[static_cast<std::size_t>(k - 1)] = carry;
    }
    const MPoly remainder = coeff(0) + carry.times_variable(i + 1);
    if (top == 0 ? !coeff(0).is_zero() : !remainder.is_zero())
      throw InexactDivision("division by (x" + std::to_string(i) + " - x" + std::to_string(i + 1) +
                            ") leaves a remainder");
    MPoly q(nvars_);
    for (std::size_t k = 0; k < quotient.size(); ++k)
      for (const auto& [e0, c] : quotient[k].terms_) {
        Exponents e = e0;
        e[a] += static_cast<int>(k);
        q.add_term(e, c);
      }
    return q;
  }

  /// Terms by decreasing total degree, then decreasing exponent vector,
  /// e.g. "x1^2*x2 - 3*x3 + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& kv : terms_) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](auto* l, auto* r) {
      const int dl = total(l->first), dr = total(r->first);
      if (dl != dr) return dl > dr;
      return l->first > r->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* kv : order) {
      const auto& [e, c] = *kv;
      const bool unit = total(e) == 0;
      Integer mag = c < 0 ? Integer(-c) : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      bool wrote = false;
      if (unit || mag != 1) {
        os << mag;
        wrote = true;
      }
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (wrote) os << "*";
        os << "x" << (k + 1);
        if (e[k] > 1) os << "^" << e[k];
        wrote = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static int total(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }
  static void check_var(std::size_t nvars, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > nvars)
      throw std::out_of_range("variable index x" + std::to_string(i) + " outside 1.." + std::to_string(nvars));
  }
  void adopt_nvars(const MPoly& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    if (o.nvars_ != nvars_ && !o.terms_.empty())
      throw std::invalid_argument("polynomials over different variable sets");
  }
  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

inline MPoly demazure(int i, const MPoly& f) { return (f - f.swapped(i)).divide_by_difference(i); }

struct NHLetter {
  enum class Op : unsigned char { X, D };
  Op op = Op::X;
  int index = 1;

  static NHLetter x(int i) { return {Op::X, i}; }
  static NHLetter d(int i) { return {Op::D, i}; }

  std::string to_string() const { return (op == Op::X ? "X" : "D") + std::to_string(index); }
  auto operator<=>(const NHLetter&) const = default;
};

/// Letters in application order: index 0 acts first.
using NHWord = std::vector<NHLetter>;

inline void validate_nh_word(const NHWord& w, int n) {
  for (const auto& l : w) {
    const int hi = l.op == NHLetter::Op::X ? n : n - 1;
    if (l.index < 1 || l.index > hi)
      throw std::out_of_range("letter " + l.to_string() + " out of range for n = " + std::to_string(n));
  }
}

inline MPoly apply_nh_word(const NHWord& w, MPoly f) {
  validate_nh_word(w, static_cast<int>(f.nvars()));
  for (const auto& l : w) f = l.op == NHLetter::Op::X ? f.times_variable(l.index) : demazure(l.index, f);
  return f;
}

inline std::string nh_word_to_string(const NHWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].to_string();
  return s;
}

/// All monomials in n variables of total degree <= max_degree.
inline std::vector<MPoly> monomials_up_to(int n, int max_degree) {
  std::vector<MPoly> out;
  MPoly::Exponents e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t var, int budget) -> void {
    if (var == e.size()) {
      out.push_back(MPoly::monomial(e));
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[var] = k;
      self(self, var + 1, budget - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// Sparse random polynomial: 1..6 terms of total degree <= max_degree with
/// nonzero coefficients in [-9, 9].
inline MPoly random_poly(int n, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 6), degree(0, max_degree), var(0, n - 1), coef(-9, 8);
  MPoly p(static_cast<std::size_t>(n));
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    MPoly::Exponents e(static_cast<std::size_t>(n), 0);
    const int d = degree(rng);
    for (int u = 0; u < d; ++u) ++e[static_cast<std::size_t>(var(rng))];
    int c = coef(rng);
    if (c >= 0) ++c;
    p += MPoly::monomial(std::move(e), c);
  }
  return p;
}

/// Which variable realizes the left tensor slot of E(l+1)E(l-1).
enum class SlotConvention { LeftSlotLowerIndex, LeftSlotHigherIndex };

inline std::string to_string(SlotConvention c) {
  return c == SlotConvention::LeftSlotLowerIndex ? "left-lower" : "left-higher";
}

namespace detail {

inline std::pair<int, int> slots(SlotConvention c, int i) {
  return c == SlotConvention::LeftSlotLowerIndex ? std::pair{i, i + 1} : std::pair{i + 1, i};
}

/// (X_left o T) - (T o X_right), with o meaning "apply the right factor first".
inline MPoly xt_left_side(SlotConvention c, int i, const MPoly& f) {
  auto [left, right] = slots(c, i);
  return apply_nh_word({NHLetter::d(i), NHLetter::x(left)}, f) - apply_nh_word({NHLetter::x(right), NHLetter::d(i)}, f);
}

/// -(X_right o T) + (T o X_left).
inline MPoly xt_right_side(SlotConvention c, int i, const MPoly& f) {
  auto [left, right] = slots(c, i);
  return apply_nh_word({NHLetter::x(left), NHLetter::d(i)}, f) - apply_nh_word({NHLetter::d(i), NHLetter::x(right)}, f);
}

}  // namespace detail

/// Picks the slot assignment under which X_left T - T X_right = I holds on
/// a probe set; throws if the answer is not unique.
inline SlotConvention select_slot_convention() {
  std::vector<SlotConvention> ok;
  for (auto c : {SlotConvention::LeftSlotLowerIndex, SlotConvention::LeftSlotHigherIndex}) {
    bool holds = true;
    for (const auto& f : monomials_up_to(2, 3))
      holds = holds && detail::xt_left_side(c, 1, f) == f && detail::xt_right_side(c, 1, f) == f;
    if (holds) ok.push_back(c);
  }
  if (ok.size() != 1) throw std::logic_error("slot convention is not uniquely determined");
  return ok.front();
}

/// Checks the nil affine Hecke relations on all monomials up to max_degree
/// and `trials` seeded random polynomials.
inline Report verify_nilhecke(int n, int max_degree, int trials, std::uint64_t seed,
                              SlotConvention conv = SlotConvention::LeftSlotLowerIndex) {
  if (n < 2) throw std::invalid_argument("nilhecke verification needs n >= 2");
  Report rep;
  rep.name = "nilhecke";
  rep.params = Json{{"n", n}, {"max_degree", max_degree}, {"trials", trials}, {"seed", seed},
                    {"slot_convention", to_string(conv)}};
  std::vector<MPoly> tests = monomials_up_to(n, max_degree);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) tests.push_back(random_poly(n, max_degree, rng));

  auto family = [&](const std::string& key, const std::function<bool(const MPoly&)>& holds) {
    for (const auto& f : tests)
      if (!holds(f)) {
        rep.add(key, "fails on f = " + f.to_string(), false);
        return;
      }
    rep.add(key, "holds on " + std::to_string(tests.size()) + " polynomials", true);
  };
  const auto D = [](int i) { return NHLetter::d(i); };
  const auto X = [](int i) { return NHLetter::x(i); };

  for (int i = 1; i < n; ++i) {
    const std::string idx = std::to_string(i);
    family("nil D" + idx + "^2 = 0", [&](const MPoly& f) { return apply_nh_word({D(i), D(i)}, f).is_zero(); });
    family("xt-left i=" + idx, [&](const MPoly& f) { return detail::xt_left_side(conv, i, f) == f; });
    family("xt-right i=" + idx, [&](const MPoly& f) { return detail::xt_right_side(conv, i, f) == f; });
  }
  for (int i = 1; i + 1 < n; ++i)
    family("braid i=" + std::to_string(i), [&](const MPoly& f) {
      return apply_nh_word({D(i), D(i + 1), D(i)}, f) == apply_nh_word({D(i + 1), D(i), D(i + 1)}, f);
    });
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      family("dd-distant " + std::to_string(i) + "," + std::to_string(j), [&](const MPoly& f) {
        return apply_nh_word({D(i), D(j)}, f) == apply_nh_word({D(j), D(i)}, f);
      });
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      family("xx-commute " + std::to_string(i) + "," + std::to_string(j), [&](const MPoly& f) {
        return apply_nh_word({X(i), X(j)}, f) == apply_nh_word({X(j), X(i)}, f);
      });
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      family("dx-distant D" + std::to_string(i) + ",X" + std::to_string(j), [&](const MPoly& f) {
        return apply_nh_word({X(j), D(i)}, f) == apply_nh_word({D(i), X(j)}, f);
      });
    }
  return rep;
}

/// d_{w0} from a reduced word, composed as d_{a_1} o d_{a_2} o ... (rightmost
/// acts first).
inline MPoly longest_demazure(const std::vector<int>& reduced_word, MPoly f) {
  for (auto it = reduced_word.rbegin(); it != reduced_word.rend(); ++it) f = demazure(*it, f);
  return f;
}

/// e_n = x^delta d_{w0}, delta = (n-1, ..., 1, 0).
inline MPoly nil_hecke_idempotent(int n, const MPoly& f) {
  static const std::vector<int> w0_2{1}, w0_3{1, 2, 1};
  if (n != 2 && n != 3) throw std::invalid_argument("idempotent check supports n = 2, 3");
  MPoly::Exponents delta(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) delta[static_cast<std::size_t>(k)] = n - 1 - k;
  return MPoly::monomial(delta) * longest_demazure(n == 2 ? w0_2 : w0_3, f);
}

inline Report idempotent_check(int n, int max_degree = 6) {
  if (n != 2 && n != 3) throw std::invalid_argument("idempotent check supports n = 2, 3");
  Report rep;
  rep.name = "idempotent";
  rep.params = Json{{"n", n}, {"max_degree", max_degree}};
  const auto mons = monomials_up_to(n, max_degree);
  if (n == 3) {
    bool ok = true;
    std::string detail = "d_{121} = d_{212} on " + std::to_string(mons.size()) + " monomials";
    for (const auto& f : mons)
      if (longest_demazure({1, 2, 1}, f) != longest_demazure({2, 1, 2}, f)) {
        ok = false;
        detail = "reduced words disagree on " + f.to_string();
        break;
      }
    rep.add("reduced-word independence n=3", detail, ok);
  }
  bool ok = true;
  std::string detail = "e^2 = e on " + std::to_string(mons.size()) + " monomials";
  for (const auto& f : mons) {
    const MPoly once = nil_hecke_idempotent(n, f);
    if (nil_hecke_idempotent(n, once) != once) {
      ok = false;
      detail = "e^2 != e on " + f.to_string();
      break;
    }
  }
  rep.add("idempotent e_" + std::to_string(n), detail, ok);
  return rep;
}

}  // namespace qsl2
