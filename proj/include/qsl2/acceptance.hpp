#pragma once

// Acceptance sweeps 1-9, shared by the test binary and `selftest`.

#include "qsl2/corpus.hpp"
#include "qsl2/homdim.hpp"
#include "qsl2/ktheory.hpp"
#include "qsl2/nilhecke.hpp"
#include "qsl2/report.hpp"
#include "qsl2/rewrite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace qsl2 {

struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  std::function<Report(bool quick)> run;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Report report;
  double seconds = 0;
  double budget_seconds = 0;

  bool in_budget() const { return seconds < budget_seconds; }
  bool pass() const { return report.pass() && report.checked() > 0 && in_budget(); }

  std::string line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", seconds, budget_seconds);
    std::string s = "criterion " + std::to_string(id) + ": " + (pass() ? "PASS" : "FAIL") + "  " + title + "  (" +
                    std::to_string(report.checked()) + " checks, " + std::to_string(report.failures()) +
                    " failures, " + buf + ")";
    if (report.witness) s += "  witness: " + *report.witness;
    if (!in_budget()) s += "  over time budget";
    return s;
  }

  Json to_json() const {
    return Json{{"id", id},          {"title", title},   {"checked", report.checked()},
                {"failures", report.failures()}, {"seconds", seconds}, {"budget_seconds", budget_seconds},
                {"witness", report.witness ? Json(*report.witness) : Json(nullptr)},
                {"verdict", pass() ? "PASS" : "FAIL"}};
  }
};

namespace acceptance {

inline Report ktheory_sweep(const char* name, int max_n, const std::function<void(TensorPower&, Report&)>& check) {
  Report rep;
  rep.name = name;
  rep.params = Json{{"max_N", max_n}};
  for (int n = 0; n <= max_n; ++n) {
    TensorPower tp(n);
    try {
      check(tp, rep);
    } catch (const InexactDivision& e) {
      rep.add("N=" + std::to_string(n), e.what(), false);
    }
  }
  return rep;
}

inline Report merge(bool quick) { return ktheory_sweep("merge", quick ? 4 : 6, check_merge); }
inline Report commute(bool quick) {
  return ktheory_sweep("commute", quick ? 4 : 6, [](TensorPower& tp, Report& r) { check_commute(tp, r, 3); });
}
inline Report casimir(bool quick) { return ktheory_sweep("casimir", quick ? 5 : 8, check_casimir); }
inline Report dimensions(bool quick) { return ktheory_sweep("dimensions", quick ? 5 : 8, check_dimensions); }
inline Report integrality(bool quick) {
  return ktheory_sweep("integrality", quick ? 4 : 6, [](TensorPower& tp, Report& r) { check_integrality(tp, r, 3); });
}

inline Report soundness_confluence(bool quick) {
  CorpusOptions opt;
  if (quick) opt.count = 100;
  Report rep;
  rep.name = "soundness";
  rep.params = Json{{"words", opt.count}, {"seed", opt.seed}, {"max_length", opt.max_length},
                    {"max_power", opt.max_power}, {"max_N", opt.max_n}};
  std::map<int, TensorPower> oracles;
  std::size_t k = 0;
  for (const Word& w : random_word_corpus(opt)) {
    const std::string key = "word " + std::to_string(k++);
    auto& tp = oracles.try_emplace(w.config().n, w.config().n).first->second;
    try {
      const FormalSum left = normalize(w, {Strategy::Leftmost});
      const FormalSum right = normalize(w, {Strategy::Rightmost});
      const bool sound = tp.formal_sum(left, w.source(), w.target()) == tp.word(w);
      const bool confluent = left == right;
      rep.add(key, sound ? (confluent ? "sound, confluent" : "strategies disagree") : "oracle mismatch",
              sound && confluent);
    } catch (const NonTermination& e) {
      rep.add(key, e.what(), false);
    }
  }
  return rep;
}

inline Report nil_hecke(bool quick) {
  Report rep;
  rep.name = "nilhecke";
  const SlotConvention conv = select_slot_convention();
  rep.add("slot convention", to_string(conv), conv == SlotConvention::LeftSlotLowerIndex);
  for (int n = 2; n <= 4; ++n) rep.append(verify_nilhecke(n, quick ? 3 : 5, quick ? 10 : 50, 7, conv));
  return rep;
}

inline Report idempotents(bool quick) {
  Report rep;
  rep.name = "idempotents";
  for (int n : {2, 3}) rep.append(idempotent_check(n, quick ? 4 : 6));
  return rep;
}

/// (base power, degree, count) triples predicted for the degree-2 inventory.
using InventoryShape = std::multiset<std::tuple<int, int, std::string>>;

inline InventoryShape shape_of(const E2Inventory& inv) {
  InventoryShape s;
  for (const auto& l : inv.lines) s.emplace(l.base.rfind("1_", 0) == 0 ? 0 : 1, l.degree, l.count.str());
  return s;
}

/// Closed-form expectation: the identity summand contributes Hom(1,1) and
/// Hom(1,1<2>) for l < 0 and only Hom(1,1<2>) at l = 0; at l = 0 the
/// middle summand adds one copy of k when weight l - 4 is inhabited.
inline InventoryShape expected_e2_shape(int n, int midpoint) {
  InventoryShape s;
  if (midpoint < 0) s.emplace(0, 0, "1");
  s.emplace(0, 2, "1");
  if (midpoint == 0 && WeightConfig{n}.inhabited(midpoint - 4)) s.emplace(1, 0, "1");
  return s;
}

inline Report hom_certificates(bool quick) {
  Report rep;
  rep.name = "homdim";
  const int max_n = quick ? 4 : 6;
  for (int n = 0; n <= max_n; ++n) {
    const WeightConfig cfg{n};
    for (Kind kind : {Kind::E, Kind::F})
      for (int m = -n; m <= n; ++m)
        for (int r = 0; r <= n; ++r) {
          if (generator_at_midpoint(cfg, kind, m, r).is_zero()) continue;
          const Certificate c = certify_end_simple(n, kind, m, r);
          rep.add(std::string("end-simple ") + kind_char(kind) + " N=" + std::to_string(n) + " mid=" +
                      std::to_string(m) + " r=" + std::to_string(r),
                  c.witness.value_or("PASS"), c.pass());
        }
    for (int l : cfg.weights()) {
      const Certificate c = certify_ef_end(n, l);
      rep.add("ef-end N=" + std::to_string(n) + " weight=" + std::to_string(l), c.witness.value_or("PASS"), c.pass());
    }
    for (int m = -n; m <= 0; ++m) {
      if (generator_at_midpoint(cfg, Kind::E, m, 2).is_zero()) continue;
      const E2Inventory inv = classify_e2_degree2(n, m);
      const bool ok = shape_of(inv) == expected_e2_shape(n, m);
      rep.add("e2-classify N=" + std::to_string(n) + " mid=" + std::to_string(m), inv.summary(), ok);
    }
  }
  return rep;
}

}  // namespace acceptance

inline std::vector<Criterion> acceptance_criteria() {
  using namespace acceptance;
  return {
      {1, "merge relation", 10, merge},
      {2, "commutation relation", 30, commute},
      {3, "Casimir EF - FE = [l] id", 5, casimir},
      {4, "weight-space dimensions", 1, dimensions},
      {5, "oracle soundness and confluence", 60, soundness_confluence},
      {6, "divided-power integrality", 5, integrality},
      {7, "nil affine Hecke relations", 10, nil_hecke},
      {8, "idempotents and reduced words", 5, idempotents},
      {9, "Hom certificates", 10, hom_certificates},
  };
}

inline CriterionResult run_criterion(const Criterion& c, bool quick) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.report = c.run(quick);
  } catch (const std::exception& e) {
    r.report.add("exception", e.what(), false);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qsl2
