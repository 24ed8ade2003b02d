#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cszidx/bounds.hpp"
#include "cszidx/join_family.hpp"
#include "cszidx/search.hpp"

namespace cszidx {

inline std::string join_k(const std::vector<std::size_t>& ks, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(ks[i]);
  }
  return out;
}

// CSV columns n,k,value; tied maximizers are joined with ';'.
inline std::string k_table_csv(const std::vector<KTableRow>& rows) {
  std::ostringstream out;
  out << "n,k,value\n";
  for (const auto& r : rows) {
    out << r.n << ',' << join_k(r.best_k, ';') << ',' << r.best_value << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const KTableRow& r) {
  return {{"n", r.n}, {"best_k", r.best_k}, {"best_value", r.best_value}};
}

inline nlohmann::json to_json(const std::vector<KTableRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline KTableRow k_table_row_from_json(const nlohmann::json& j) {
  return {j.at("n").get<std::size_t>(), j.at("best_k").get<std::vector<std::size_t>>(),
          j.at("best_value").get<CszValue>()};
}

inline nlohmann::json to_json(const BoundNumber& v) {
  return std::visit([](auto x) { return nlohmann::json(x); }, v);
}

inline nlohmann::json to_json(const BoundReport& r) {
  return {{"name", r.name},     {"instance", r.instance}, {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)}, {"holds", r.holds},      {"strict", r.strict},
          {"equality", r.equality}, {"in_scope", r.in_scope}};
}

inline nlohmann::json to_json(const ExtremalReport& r) {
  return {{"n", r.n},
          {"mode", to_string(r.mode)},
          {"max_value", r.max_value},
          {"witnesses", r.witnesses},
          {"all_witnesses_are_joins", r.all_witnesses_are_joins},
          {"witness_k", r.witness_k},
          {"prop1_holds", r.prop1_holds},
          {"prop2_holds", r.prop2_holds},
          {"prop3_holds", r.prop3_holds},
          {"graphs_scanned", r.graphs_scanned}};
}

inline ExtremalReport extremal_report_from_json(const nlohmann::json& j) {
  ExtremalReport r;
  r.n = j.at("n").get<std::size_t>();
  r.mode = parse_search_mode(j.at("mode").get<std::string>());
  r.max_value = j.at("max_value").get<CszValue>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.all_witnesses_are_joins = j.at("all_witnesses_are_joins").get<bool>();
  r.witness_k = j.at("witness_k").get<std::vector<std::size_t>>();
  r.prop1_holds = j.at("prop1_holds").get<bool>();
  r.prop2_holds = j.at("prop2_holds").get<bool>();
  r.prop3_holds = j.at("prop3_holds").get<bool>();
  r.graphs_scanned = j.at("graphs_scanned").get<std::uint64_t>();
  return r;
}

inline nlohmann::json to_json(const Move& m) {
  nlohmann::json j = {{"u", m.u},
                      {"v", m.v},
                      {"op", m.added ? "add" : "remove"},
                      {"kind", to_string(m.kind)},
                      {"delta", m.delta}};
  if (m.closed_form) j["closed_form"] = *m.closed_form;
  return j;
}

}  // namespace cszidx
