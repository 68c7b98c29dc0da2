#pragma once

// Command-line dispatch. Exit codes: 0 success/PASS, 1 verification FAIL,
// 2 usage or parse error.

#include "qsl2/acceptance.hpp"
#include "qsl2/homdim.hpp"
#include "qsl2/ktheory.hpp"
#include "qsl2/nilhecke.hpp"
#include "qsl2/parse.hpp"
#include "qsl2/report.hpp"
#include "qsl2/rewrite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qsl2 {

namespace cli {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Largest N for which normalize also checks itself against the matrices.
constexpr int kOracleMaxN = 8;

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

inline Json ledger_json(const Report& r) { return r.to_json()["ledger"]; }

inline void emit_json(Output& o, const std::string& command, Json params, Json result, Json ledger, bool pass) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  j["ledger"] = std::move(ledger);
  j["verdict"] = pass ? "PASS" : "FAIL";
  o.out << j.dump(2) << "\n";
}

/// Two aligned columns plus a status.
inline void emit_lines(Output& o, const std::vector<ReportLine>& lines) {
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.key.size());
  for (const auto& l : lines)
    o.out << (l.pass ? "  ok    " : "  FAIL  ") << l.key << std::string(width - l.key.size() + 2, ' ') << l.detail
          << "\n";
}

inline void emit_report(Output& o, const std::string& command, const Report& r) {
  if (o.json) {
    Json result{{"checked", r.checked()}, {"failures", r.failures()},
                {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
    emit_json(o, command, r.params, std::move(result), ledger_json(r), r.pass());
    return;
  }
  o.out << command << "  " << r.params.dump() << "\n";
  emit_lines(o, r.lines);
  if (r.witness) o.out << "witness: " << *r.witness << "\n";
  o.out << r.checked() << " checks, " << r.failures() << " failures\n"
        << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

inline Json terms_json(const FormalSum& s) {
  Json a = Json::array();
  for (const auto& [w, m] : ordered_terms(s))
    a.push_back(Json{{"word", print_word(w)}, {"midpoints", midpoint_label(w)}, {"source", w.source()},
                     {"target", w.target()}, {"multiplicity", m.to_string()}});
  return a;
}

inline void parse_error(Output& o, const std::string& field, const std::string& text, const ParseError& e) {
  o.err << "qsl2: " << field << ": " << e.what() << "\n  " << text << "\n  " << std::string(e.offset(), ' ')
        << "^\n";
}

struct NormalizeArgs {
  int n = 0;
  int weight = 0;
  std::string word;
  std::string strategy = "leftmost";
  bool ascii = false;
  bool verbose = false;
};

inline int run_normalize(Output& o, const NormalizeArgs& a) {
  FormalSum input;
  try {
    input = parse_word(a.word, WeightConfig{a.n}, a.weight);
  } catch (const ParseError& e) {
    parse_error(o, "--word", a.word, e);
    return kUsage;
  }
  const Strategy strategy = a.strategy == "rightmost" ? Strategy::Rightmost : Strategy::Leftmost;
  NormalizeStats stats;
  FormalSum output;
  try {
    output = normalize(input, {strategy}, &stats);
  } catch (const NonTermination& e) {
    o.err << "qsl2: " << e.what() << "\n";
    return kFail;
  }
  Report ledger;
  if (input.empty()) {
    ledger.add("zero", "the word passes through an uninhabited weight", true);
  } else if (a.n <= kOracleMaxN) {
    const Word& w = input.terms().begin()->first;
    TensorPower tp(a.n);
    const bool ok = tp.formal_sum(output, w.source(), w.target()) == tp.formal_sum(input, w.source(), w.target());
    ledger.add("oracle", ok ? "matrices agree" : "matrices differ", ok);
  } else {
    ledger.add("oracle", "skipped for N > " + std::to_string(kOracleMaxN), true);
  }
  if (o.json) {
    Json params{{"N", a.n}, {"weight", a.weight}, {"word", a.word}, {"strategy", a.strategy}};
    Json result{{"input", terms_json(input)}, {"output", terms_json(output)}, {"steps", stats.steps},
                {"text", display(output, {a.ascii, a.verbose})}};
    emit_json(o, "normalize", std::move(params), std::move(result), ledger_json(ledger), ledger.pass());
  } else {
    o.out << display(output, {a.ascii, a.verbose}) << "\n";
    if (!ledger.pass()) o.err << "qsl2: " << *ledger.witness << "\n";
  }
  return ledger.pass() ? kOk : kFail;
}

struct KMatrixArgs {
  int n = 0;
  int weight = 0;
  std::string word;
};

inline int run_kmatrix(Output& o, const KMatrixArgs& a) {
  ParsedWord p;
  try {
    p = parse_word_tokens(a.word);
  } catch (const ParseError& e) {
    parse_error(o, "--word", a.word, e);
    return kUsage;
  }
  if (a.n < 0 || a.n > kOracleMaxN) {
    o.err << "qsl2: --N must lie in [0, " << kOracleMaxN << "]\n";
    return kUsage;
  }
  const Word raw(WeightConfig{a.n}, a.weight, std::vector<Generator>(p.written_order.rbegin(), p.written_order.rend()));
  TensorPower tp(a.n);
  const FormalSum s = FormalSum(raw, BigradedLaurent::q_power(p.shift));
  const KMatrix m = tp.formal_sum(s, raw.source(), raw.target());
  const WeightBasis& rows = tp.basis(raw.target());
  const WeightBasis& cols = tp.basis(raw.source());
  if (o.json) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string("q"));
      entries.push_back(std::move(row));
    }
    Json rl = Json::array(), cl = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) rl.push_back(rows.label(i));
    for (std::size_t j = 0; j < cols.size(); ++j) cl.push_back(cols.label(j));
    Json params{{"N", a.n}, {"weight", a.weight}, {"word", a.word}};
    Json result{{"source", raw.source()}, {"target", raw.target()}, {"rows", rl}, {"cols", cl}, {"entries", entries}};
    emit_json(o, "ktheory matrix", std::move(params), std::move(result), Json::array(), true);
  } else {
    o.out << "weight " << raw.source() << " -> " << raw.target() << "  (" << m.rows() << "x" << m.cols() << ")\n"
          << matrix_to_string(m, rows, cols);
  }
  return kOk;
}

struct NilHeckeApplyArgs {
  int n = 2;
  std::string word;
  std::string poly;
};

inline int run_nh_apply(Output& o, const NilHeckeApplyArgs& a) {
  if (a.n < 1) {
    o.err << "qsl2: --n must be >= 1\n";
    return kUsage;
  }
  NHWord w;
  MPoly f;
  try {
    w = parse_nh_word(a.word, a.n);
  } catch (const ParseError& e) {
    parse_error(o, "--word", a.word, e);
    return kUsage;
  }
  try {
    f = parse_poly(a.poly, a.n);
  } catch (const ParseError& e) {
    parse_error(o, "--poly", a.poly, e);
    return kUsage;
  }
  const MPoly g = apply_nh_word(w, f);
  if (o.json) {
    Json params{{"n", a.n}, {"word", nh_word_to_string(w)}, {"poly", f.to_string()}};
    emit_json(o, "nilhecke apply", std::move(params), Json{{"value", g.to_string()}, {"degree", g.degree()}},
              Json::array(), true);
  } else {
    o.out << g.to_string() << "\n";
  }
  return kOk;
}

struct HomdimArgs {
  int n = 0;
  int weight = 0;
  int r = 1;
  bool r_given = false;
  std::string claim = "end-simple";
  std::string kind = "E";
};

inline void emit_certificate(Output& o, const Certificate& c) {
  if (o.json) {
    Json ledger = Json::array();
    for (const auto& l : c.ledger) ledger.push_back(l.to_json());
    Json result{{"claim", c.claim}, {"degenerate", c.degenerate},
                {"witness", c.witness ? Json(*c.witness) : Json(nullptr)}};
    emit_json(o, "homdim certify", c.params, std::move(result), std::move(ledger), c.pass());
  } else {
    o.out << c.to_text();
  }
}

inline int run_homdim(Output& o, const HomdimArgs& a) {
  try {
    if (a.claim == "end-simple") {
      const Certificate c = certify_end_simple(a.n, a.kind == "F" ? Kind::F : Kind::E, a.weight, a.r);
      emit_certificate(o, c);
      return c.pass() ? kOk : kFail;
    }
    if (a.claim == "ef-end") {
      if (a.r_given && a.r != 1) throw std::invalid_argument("ef-end concerns r = 1");
      const Certificate c = certify_ef_end(a.n, a.weight);
      emit_certificate(o, c);
      return c.pass() ? kOk : kFail;
    }
    {
      if (a.r_given && a.r != 2) throw std::invalid_argument("e2-classify concerns r = 2");
      const E2Inventory inv = classify_e2_degree2(a.n, a.weight);
      if (o.json) {
        Json params{{"N", a.n}, {"midpoint", a.weight}, {"source", a.weight - 2}, {"target", a.weight + 2}};
        Json ledger = Json::array();
        for (const auto& l : inv.lines) ledger.push_back(l.to_json());
        emit_json(o, "homdim certify", std::move(params),
                  Json{{"claim", "e2-classify"}, {"zero", inv.zero}, {"summary", inv.summary()},
                       {"vanishing", inv.vanishing}},
                  std::move(ledger), true);
      } else {
        o.out << "claim: e2-classify\n  N = " << a.n << "\n  midpoint = " << a.weight << "\n  source = "
              << a.weight - 2 << "\n";
        if (inv.zero) o.out << "  E^(2) is zero at this N\n";
        for (const auto& l : inv.lines)
          o.out << "  " << l.value << "   from " << l.source << " (x) [" << l.multiplicity.to_string() << "], count "
                << l.count << "\n";
        for (const auto& v : inv.vanishing) o.out << "  " << v << "\n";
        o.out << "Hom(E^(2), E^(2)<2>) = " << inv.summary() << "\n";
      }
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    o.err << "qsl2: " << e.what() << "\n";
    return kUsage;
  }
}

inline int run_selftest(Output& o, bool quick) {
  bool all = true;
  Json results = Json::array();
  for (const auto& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c, quick);
    all = all && r.pass();
    if (o.json)
      results.push_back(r.to_json());
    else
      o.out << r.line() << "\n";
  }
  if (o.json)
    emit_json(o, "selftest", Json{{"quick", quick}}, Json{{"criteria", results.size()}}, std::move(results), all);
  else
    o.out << "selftest: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? kOk : kFail;
}

}  // namespace cli

/// Parses argv and runs one subcommand; never throws.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Categorified quantum sl2 calculus: normalize words, check the K-theory oracle, the nil affine Hecke "
               "relations and Hom certificates.",
               "qsl2"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a single JSON object");

  NormalizeArgs na;
  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a word into canonical form");
  normalize_cmd->add_option("--N", na.n, "Highest weight N")->required()->check(CLI::NonNegativeNumber);
  normalize_cmd->add_option("--weight", na.weight, "Source weight")->required();
  normalize_cmd->add_option("--word", na.word, "Word in written order, e.g. \"F * E\" (E applies first)")->required();
  normalize_cmd->add_option("--strategy", na.strategy, "Rewrite strategy")
      ->check(CLI::IsMember({"leftmost", "rightmost"}));
  normalize_cmd->add_flag("--ascii", na.ascii, "ASCII output");
  normalize_cmd->add_flag("--verbose", na.verbose, "Show midpoint weights");
  normalize_cmd->add_flag("--json", json, "Emit a single JSON object");

  auto* kt = app.add_subcommand("ktheory", "Decategorified matrix oracle");
  kt->require_subcommand(1);
  int kv_n = 0;
  std::string kv_rel = "all", kv_cop = Coproduct::standard().name();
  auto* kverify = kt->add_subcommand("verify", "Check relations on V^(x)N");
  kverify->add_option("--N", kv_n, "Tensor power N")->required()->check(CLI::Range(0, kOracleMaxN));
  kverify->add_option("--relation", kv_rel, "Relation family")
      ->check(CLI::IsMember({"merge", "commute", "casimir", "dimensions", "all"}));
  kverify->add_option("--coproduct", kv_cop, "Coproduct convention, e.g. e-left+,f-right-");
  kverify->add_flag("--json", json, "Emit a single JSON object");
  KMatrixArgs km;
  auto* kmatrix = kt->add_subcommand("matrix", "Print the matrix of a word");
  kmatrix->add_option("--N", km.n, "Tensor power N")->required();
  kmatrix->add_option("--weight", km.weight, "Source weight")->required();
  kmatrix->add_option("--word", km.word, "Word in written order (leftmost applies last)")->required();
  kmatrix->add_flag("--json", json, "Emit a single JSON object");

  auto* nh = app.add_subcommand("nilhecke", "Polynomial representation of the nil affine Hecke algebra");
  nh->require_subcommand(1);
  int nv_n = 2, nv_deg = 5, nv_trials = 50;
  std::uint64_t nv_seed = 7;
  std::string nv_conv = "left-lower";
  auto* nverify = nh->add_subcommand("verify", "Check the relations on monomials and random polynomials");
  nverify->add_option("--n", nv_n, "Number of variables")->required()->check(CLI::Range(2, 8));
  nverify->add_option("--max-degree", nv_deg, "Monomial degree bound")->check(CLI::Range(0, 12));
  nverify->add_option("--trials", nv_trials, "Random polynomials")->check(CLI::Range(0, 100000));
  nverify->add_option("--seed", nv_seed, "Random seed (default 7)");
  nverify->add_option("--convention", nv_conv, "Slot convention")
      ->check(CLI::IsMember({"left-lower", "left-higher"}));
  nverify->add_flag("--json", json, "Emit a single JSON object");
  NilHeckeApplyArgs na2;
  auto* napply = nh->add_subcommand("apply", "Apply a word such as \"X1 D1\" (left to right) to a polynomial");
  napply->add_option("--n", na2.n, "Number of variables")->required();
  napply->add_option("--word", na2.word, "Letters X<i>, D<i>, the first acts first")->required();
  napply->add_option("--poly", na2.poly, "Polynomial, e.g. \"x1^2*x2 - 3*x3 + 1\"")->required();
  napply->add_flag("--json", json, "Emit a single JSON object");

  auto* hd = app.add_subcommand("homdim", "Hom-space certificates");
  hd->require_subcommand(1);
  HomdimArgs ha;
  auto* certify = hd->add_subcommand("certify", "Certify a vanishing/simplicity claim");
  certify->add_option("--N", ha.n, "Highest weight N")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--weight", ha.weight,
                      "Midpoint weight (end-simple, e2-classify) or category weight (ef-end)")
      ->required();
  auto* r_opt = certify->add_option("--r", ha.r, "Divided power")->check(CLI::NonNegativeNumber);
  certify->add_option("--claim", ha.claim, "Claim to certify")
      ->check(CLI::IsMember({"end-simple", "ef-end", "e2-classify"}));
  certify->add_option("--kind", ha.kind, "Generator kind for end-simple")->check(CLI::IsMember({"E", "F"}));
  certify->add_flag("--json", json, "Emit a single JSON object");

  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "Run acceptance criteria 1-9");
  selftest->add_flag("--quick", quick, "Reduced ranges");
  selftest->add_flag("--json", json, "Emit a single JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    (void)e;
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    (void)e;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qsl2: " << e.what() << "\n";
    return kUsage;
  }

  Output o{out, err, json};
  try {
    if (*normalize_cmd) return run_normalize(o, na);
    if (*kverify) {
      Coproduct c;
      try {
        c = Coproduct::parse(kv_cop);
      } catch (const std::invalid_argument& e) {
        err << "qsl2: --coproduct: " << e.what() << "\n";
        return kUsage;
      }
      const Report r = verify_relations(kv_n, parse_relation(kv_rel), c);
      emit_report(o, "ktheory verify", r);
      return r.pass() ? kOk : kFail;
    }
    if (*kmatrix) return run_kmatrix(o, km);
    if (*nverify) {
      const SlotConvention conv =
          nv_conv == "left-higher" ? SlotConvention::LeftSlotHigherIndex : SlotConvention::LeftSlotLowerIndex;
      const Report r = verify_nilhecke(nv_n, nv_deg, nv_trials, nv_seed, conv);
      emit_report(o, "nilhecke verify", r);
      return r.pass() ? kOk : kFail;
    }
    if (*napply) return run_nh_apply(o, na2);
    if (*certify) {
      ha.r_given = r_opt->count() > 0;
      return run_homdim(o, ha);
    }
    if (*selftest) return run_selftest(o, quick);
  } catch (const std::invalid_argument& e) {
    err << "qsl2: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "qsl2: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "qsl2: internal error: " << e.what() << "\n";
    return kFail;
  }
  err << "qsl2: no subcommand\n";
  return kUsage;
}

}  // namespace qsl2
