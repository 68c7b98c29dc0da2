#pragma once

// Verification report shared by the ktheory, nilhecke and homdim sweeps and
// serialized by the CLI.

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

using Json = nlohmann::ordered_json;

struct ReportLine {
  std::string key;
  std::string detail;
  bool pass = true;
};

struct Report {
  std::string name;
  Json params = Json::object();
  std::vector<ReportLine> lines;
  std::optional<std::string> witness;  ///< first counterexample, if any

  bool pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  std::size_t checked() const { return lines.size(); }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : lines) n += l.pass ? 0 : 1;
    return n;
  }

  void add(std::string key, std::string detail, bool ok) {
    if (!ok && !witness) witness = key + ": " + detail;
    lines.push_back({std::move(key), std::move(detail), ok});
  }

  void append(const Report& other) {
    for (const auto& l : other.lines) add(other.name + "/" + l.key, l.detail, l.pass);
  }

  Json to_json() const {
    Json ledger = Json::array();
    for (const auto& l : lines)
      ledger.push_back(Json{{"key", l.key}, {"detail", l.detail}, {"pass", l.pass}});
    Json j;
    j["name"] = name;
    j["params"] = params;
    j["checked"] = checked();
    j["failures"] = failures();
    j["ledger"] = std::move(ledger);
    j["witness"] = witness ? Json(*witness) : Json(nullptr);
    j["verdict"] = pass() ? "PASS" : "FAIL";
    return j;
  }
};

}  // namespace qsl2
