#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "foliakit/classification.hpp"
#include "foliakit/diagram.hpp"
#include "foliakit/dual_graph.hpp"
#include "foliakit/link_invariants.hpp"
#include "foliakit/manifold.hpp"
#include "foliakit/stiefel.hpp"
#include "foliakit/verdict.hpp"

namespace foliakit {

inline constexpr const char* kVersion = "0.1.0";

struct ChainEntry {
  std::string rule_id;
  std::string theorem;
  std::string quote;
  bool operator==(const ChainEntry&) const = default;
};

struct VerdictEntry {
  TriState value = TriState::Unknown;
  std::vector<ChainEntry> chain;
  std::vector<std::string> unresolved;
  bool operator==(const VerdictEntry&) const = default;
};

struct Citation {
  std::string theorem;
  std::string quote;
  bool operator==(const Citation&) const = default;
  auto operator<=>(const Citation&) const = default;
};

struct Report {
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json invariants = nlohmann::json::object();
  std::map<std::string, VerdictEntry> verdicts;
  std::vector<Citation> citations;
  std::string version = kVersion;
  bool operator==(const Report&) const = default;
};

inline void to_json(nlohmann::json& j, const ChainEntry& e) {
  j = nlohmann::json{{"rule_id", e.rule_id}, {"theorem", e.theorem}, {"quote", e.quote}};
}
inline void from_json(const nlohmann::json& j, ChainEntry& e) {
  j.at("rule_id").get_to(e.rule_id);
  j.at("theorem").get_to(e.theorem);
  j.at("quote").get_to(e.quote);
}

inline void to_json(nlohmann::json& j, const VerdictEntry& v) {
  j = nlohmann::json{{"value", to_string(v.value)}, {"chain", v.chain}};
  if (!v.unresolved.empty()) j["unresolved"] = v.unresolved;
}
inline void from_json(const nlohmann::json& j, VerdictEntry& v) {
  v.value = tristate_from_string(j.at("value").get<std::string>());
  j.at("chain").get_to(v.chain);
  v.unresolved.clear();
  if (j.contains("unresolved")) j.at("unresolved").get_to(v.unresolved);
}

inline void to_json(nlohmann::json& j, const Citation& c) {
  j = nlohmann::json{{"theorem", c.theorem}, {"quote", c.quote}};
}
inline void from_json(const nlohmann::json& j, Citation& c) {
  j.at("theorem").get_to(c.theorem);
  j.at("quote").get_to(c.quote);
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"input", r.input},
                     {"invariants", r.invariants},
                     {"verdicts", r.verdicts},
                     {"citations", r.citations},
                     {"version", r.version}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
  r.input = j.at("input");
  r.invariants = j.at("invariants");
  j.at("verdicts").get_to(r.verdicts);
  j.at("citations").get_to(r.citations);
  j.at("version").get_to(r.version);
}

inline VerdictEntry entry_of(const PropertyVerdict& p) {
  VerdictEntry e;
  e.value = p.value;
  for (const RuleApplication& a : p.chain) e.chain.push_back({a.rule_id, a.theorem, a.quote});
  e.unresolved = p.unresolved;
  return e;
}

inline void add_verdicts(Report& r, const Verdict& v) {
  std::set<Citation> cites(r.citations.begin(), r.citations.end());
  for (const auto& [prop, pv] : v.properties) {
    r.verdicts[to_string(prop)] = entry_of(pv);
    for (const RuleApplication& a : pv.chain) cites.insert({a.theorem, a.quote});
  }
  r.citations.assign(cites.begin(), cites.end());
}

inline Report link_report(const LinkDiagram& d, const std::string& source) {
  Report r;
  r.input = {{"command", "link"}, {"source", source}, {"diagram", serialize(d)}};
  LinkingMatrix m = linking_matrix(d);
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    matrix.push_back(row);
  }
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    comps.push_back({{"whitney", m(i, i)},
                     {"curvatura_integra_mod2", curvatura_integra_mod2(d, i).v},
                     {"relative_class", relative_class(d, i)},
                     {"normal_class", seifert_normal_class(d, i).v}});
  }
  r.invariants = {{"components", d.component_count()},
                  {"crossings", d.crossing_count()},
                  {"linking_matrix", matrix},
                  {"per_component", comps},
                  {"seifert_circles", seifert_circles(d).circle_count()}};
  add_verdicts(r, si_link_verdict(d));
  return r;
}

inline Report classify_report(const EmbeddingContext& ctx, const std::string& expr,
                              bool want_semichar) {
  Report r;
  r.input = {{"command", "classify"},
             {"manifold", expr},
             {"canonical", to_string(ctx.manifold)},
             {"n", ctx.n},
             {"open", ctx.open_flag},
             {"nb_trivial", to_string(ctx.normal_bundle_override)}};
  if (ctx.diagram) r.input["diagram"] = serialize(*ctx.diagram);
  if (want_semichar) {
    try {
      (void)semicharacteristic(ctx.manifold);
    } catch (const ManifoldError& e) {
      throw ContextInvalid(std::string("semicharacteristic: ") + e.what());
    }
  }
  Verdict v = classify(ctx);
  const ManifoldExpr& m = ctx.manifold;
  ParallelizableDecision par = parallelizable_decision(m);
  r.invariants = {{"dimension", dim(m)},
                  {"compact", is_compact(m)},
                  {"connected", is_connected(m)},
                  {"open", to_string(ctx.open_manifold())},
                  {"parallelizable", to_string(par.value)},
                  {"parallelizable_reason", par.reason}};
  if (is_compact(m)) {
    r.invariants["z2_betti"] = z2_betti(m);
    r.invariants["euler_characteristic"] = euler_characteristic(m);
    if (dim(m) % 2 == 1) r.invariants["semicharacteristic"] = semicharacteristic(m);
  }
  add_verdicts(r, v);
  return r;
}

inline Report stiefel_report(int k, int n) {
  Report r;
  r.input = {{"command", "table"}, {"table", "stiefel"}, {"k", k}, {"n", n}};
  r.invariants = {{"group", to_string(stiefel_pi(k, n))}};
  return r;
}

inline Report homotopy_report(int r_gen, int k, int n, Frame frame) {
  Report r;
  r.input = {{"command", "table"},
             {"table", "homotopy"},
             {"r", r_gen},
             {"k", k},
             {"n", n},
             {"frame", frame == Frame::Tangent ? "tangent" : "normal"}};
  r.invariants = {{"group", to_string(homotopy_classes(r_gen, k, n, frame))}};
  return r;
}

inline Report orient_report(const DualGraph& g, const std::string& source) {
  Report r;
  r.input = {{"command", "orient"}, {"source", source}, {"vertices", g.vertex_count},
             {"edges", g.edges.size()}};
  OrientationResult res = alternating_orientation(g);
  if (const auto* signs = std::get_if<std::vector<int>>(&res)) {
    r.invariants = {{"orientable", true}, {"signs", *signs}};
  } else {
    r.invariants = {{"orientable", false},
                    {"odd_cycle", std::get<OddCycle>(res).vertices}};
  }
  return r;
}

// Human-readable rendering.
inline std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& [key, val] : r.input.items()) {
    if (key == "command") continue;
    out << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }
  if (!r.invariants.empty()) {
    out << "invariants:\n";
    for (const auto& [key, val] : r.invariants.items()) {
      out << "  " << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
          << "\n";
    }
  }
  if (!r.verdicts.empty()) {
    out << "verdicts:\n";
    for (const auto& [name, v] : r.verdicts) {
      out << "  " << name << ": " << to_string(v.value) << "\n";
      for (const ChainEntry& c : v.chain) {
        out << "    [" << c.rule_id << "] " << c.theorem << ": " << c.quote << "\n";
      }
      if (v.chain.empty()) {
        for (const std::string& u : v.unresolved) out << "    unresolved: " << u << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace foliakit
