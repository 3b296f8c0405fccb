#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foliakit/diagram.hpp"
#include "foliakit/link_invariants.hpp"
#include "foliakit/manifold.hpp"
#include "foliakit/rules.hpp"
#include "foliakit/stiefel.hpp"
#include "foliakit/verdict.hpp"

namespace foliakit {

class MissingDiagram : public ContextInvalid {
 public:
  using ContextInvalid::ContextInvalid;
};

// Raised when two rules decide a property differently.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EmbeddingContext {
  ManifoldExpr manifold;
  int n = 0;
  bool open_flag = false;  // caller asserts that no component is compact
  TriState normal_bundle_override = TriState::Unknown;
  std::optional<LinkDiagram> diagram;

  int k() const { return dim(manifold); }
  bool compact() const { return is_compact(manifold); }
  bool connected() const { return is_connected(manifold); }
  TriState open_manifold() const {
    return open_flag && !compact() ? TriState::True : openness(manifold);
  }
};

inline EmbeddingContext make_context(ManifoldExpr m, int n) {
  EmbeddingContext c;
  c.manifold = std::move(m);
  c.n = n;
  return c;
}

using RuleInputs = std::vector<std::pair<std::string, std::string>>;

struct Facts {
  const EmbeddingContext* ctx = nullptr;
  int k = 0;
  int n = 0;
  int codim = 0;
  bool compact = true;
  bool connected = true;
  TriState open = TriState::False;
  TriState par = TriState::Unknown;
  bool par_from_twi = false;
  std::optional<long long> chi_star;
  PropertyVerdict nb, twi, wi, ci_base, si, ci, leaf, critical;

  const ManifoldExpr& m() const { return ctx->manifold; }
  std::optional<bool> chi_even() const {
    if (!chi_star) return std::nullopt;
    return *chi_star % 2 == 0;
  }
};

// A rule returns nullopt when its premise does not hold, Unknown when it
// applies without deciding, and True/False otherwise.
struct Rule {
  std::string_view id;
  std::function<std::optional<TriState>(const Facts&, RuleInputs&)> eval;
};

namespace detail {

inline bool k37(int k) { return k == 3 || k == 7; }
inline std::string str(TriState t) { return to_string(t); }
inline std::string str(long long v) { return std::to_string(v); }
inline std::string par_str(const Facts& f) {
  return f.par_from_twi ? "true (closed and TWI)" : to_string(f.par);
}

inline PropertyVerdict run_rules(const std::vector<Rule>& rules, const Facts& f,
                                 const char* property) {
  PropertyVerdict out;
  for (const Rule& r : rules) {
    RuleInputs inputs;
    std::optional<TriState> v = r.eval(f, inputs);
    if (!v) continue;
    if (*v == TriState::Unknown) {
      out.unresolved.emplace_back(r.id);
      continue;
    }
    if (out.chain.empty()) {
      out.value = *v;
    } else if (out.value != *v) {
      throw InternalInconsistency(std::string(property) + ": rule " + std::string(r.id) +
                                  " contradicts " + out.chain.front().rule_id);
    }
    out.chain.push_back(cite(r.id, std::move(inputs)));
  }
  if (!out.chain.empty()) out.unresolved.clear();
  return out;
}

inline const std::vector<Rule>& nb_rules() {
  static const std::vector<Rule> rules{
      {"nb.override",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         TriState o = f.ctx->normal_bundle_override;
         if (o == TriState::Unknown) return std::nullopt;
         in.emplace_back("override", str(o));
         return o;
       }},
      {"nb.codim1",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.codim != 1) return std::nullopt;
         in.emplace_back("codim", "1");
         return TriState::True;
       }},
      {"nb.codim2",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.codim != 2) return std::nullopt;
         in.emplace_back("codim", "2");
         return TriState::True;
       }},
      {"nb.sphere7_11",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         const auto* s = f.m().as<Sphere>();
         if (s && s->k == 7 && f.n == 11) return TriState::Unknown;
         return std::nullopt;
       }},
      {"nb.parallelizable",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < 2 * f.k) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         if (f.par == TriState::True) return TriState::True;
         return f.par == TriState::Unknown ? std::optional<TriState>(TriState::Unknown)
                                           : std::nullopt;
       }},
      {"nb.sphere",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         const auto* s = f.m().as<Sphere>();
         if (!s || (!k37(s->k) && s->k != 1)) return std::nullopt;
         if (s->k == 7 && f.n == 11) return std::nullopt;
         in.emplace_back("k", str(s->k));
         return TriState::True;
       }},
  };
  return rules;
}

inline const std::vector<Rule>& twi_rules() {
  static const std::vector<Rule> rules{
      {"twi.not_parallelizable",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.par != TriState::False) return std::nullopt;
         in.emplace_back("parallelizable", "false");
         return TriState::False;
       }},
      {"twi.open",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.open != TriState::True || f.par == TriState::False) return std::nullopt;
         in.emplace_back("open", "true");
         return TriState::True;
       }},
      {"twi.tori",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         if (!f.m().as<Torus>()) return std::nullopt;
         return TriState::True;
       }},
      {"twi.spheres",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         const auto* s = f.m().as<Sphere>();
         if (!s || !k37(s->k)) return std::nullopt;
         in.emplace_back("k", str(s->k));
         return TriState::False;
       }},
      {"twi.sum_parity",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (!f.m().as<ConnectedSum>() || f.k % 2 == 0 || k37(f.k)) return std::nullopt;
         auto pieces = summands(f.m());
         for (const ManifoldExpr* p : pieces) {
           if (parallelizable(*p) != TriState::True) return TriState::Unknown;
         }
         in.emplace_back("r", str(static_cast<long long>(pieces.size())));
         return tri(pieces.size() % 2 == 1);
       }},
      {"twi.sum_semichar",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (!f.m().as<ConnectedSum>() || !k37(f.k)) return std::nullopt;
         auto pieces = summands(f.m());
         long long total = 0;
         for (const ManifoldExpr* p : pieces) {
           if (parallelizable(*p) != TriState::True) return TriState::Unknown;
           total += semicharacteristic(*p);
         }
         long long r = static_cast<long long>(pieces.size());
         in.emplace_back("r", str(r));
         in.emplace_back("sum_chi*", str(total));
         return tri((total - (r - 1)) % 2 == 0);
       }},
      {"twi.classif",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (k37(f.k)) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         if (f.par == TriState::True) return TriState::True;
         return TriState::Unknown;
       }},
      {"twi.caract",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (!k37(f.k) || !f.compact || !f.connected) return std::nullopt;
         if (f.par != TriState::True) return TriState::Unknown;
         in.emplace_back("parallelizable", "true");
         in.emplace_back("chi*", str(*f.chi_star));
         return tri(*f.chi_even());
       }},
  };
  return rules;
}

inline const std::vector<Rule>& wi_rules() {
  static const std::vector<Rule> rules{
      {"wi.codim1",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.codim != 1) return std::nullopt;
         in.emplace_back("open", str(f.open));
         return f.open;
       }},
      {"wi.not_parallelizable",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.par != TriState::False) return std::nullopt;
         in.emplace_back("parallelizable", "false");
         return TriState::False;
       }},
      {"wi.nb_false",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.nb.value != TriState::False) return std::nullopt;
         in.emplace_back("normal_bundle_trivial", "false");
         return TriState::False;
       }},
      {"wi.open",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.open != TriState::True || f.codim < 2) return std::nullopt;
         in.emplace_back("normal_bundle_trivial", str(f.nb.value));
         return f.nb.value;
       }},
      {"wi.large",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < 2 * f.k + 1) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         return f.par;
       }},
      {"wi.middle",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < f.k + 2 || f.n > 2 * f.k) return std::nullopt;
         in.emplace_back("TWI", str(f.twi.value));
         in.emplace_back("normal_bundle_trivial", str(f.nb.value));
         if (f.twi.value == TriState::False) return TriState::False;
         if (f.twi.value == TriState::True && f.nb.value == TriState::True) return TriState::True;
         return TriState::Unknown;
       }},
  };
  return rules;
}

inline const std::vector<Rule>& ci_rules(bool with_si) {
  static const std::vector<Rule> base{
      {"ci.codim1",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         return f.codim == 1 ? std::optional<TriState>(TriState::True) : std::nullopt;
       }},
      {"ci.codim2",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         return f.codim == 2 ? std::optional<TriState>(TriState::True) : std::nullopt;
       }},
      {"ci.codim48",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.codim != 4 && f.codim != 8) return std::nullopt;
         in.emplace_back("normal_bundle_trivial", str(f.nb.value));
         return f.nb.value == TriState::True ? TriState::True : TriState::Unknown;
       }},
      {"ci.sk",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n != 2 * f.k + 1 || !k37(f.k) || !f.compact || !f.connected) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         return f.par == TriState::True ? TriState::True : TriState::Unknown;
       }},
  };
  static const std::vector<Rule> full = [] {
    std::vector<Rule> r = base;
    r.push_back({"ci.si", [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
                   if (f.si.value != TriState::True) return std::nullopt;
                   in.emplace_back("SI", "true");
                   return TriState::True;
                 }});
    return r;
  }();
  return with_si ? full : base;
}

inline const std::vector<Rule>& si_rules() {
  static const std::vector<Rule> rules{
      {"si.codim1",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.codim != 1) return std::nullopt;
         in.emplace_back("open", str(f.open));
         return f.open;
       }},
      {"si.wi_false",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.wi.value != TriState::False) return std::nullopt;
         in.emplace_back("WI", "false");
         return TriState::False;
       }},
      {"si.large",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < 2 * f.k + 2) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         return f.par == TriState::True ? TriState::True : TriState::Unknown;
       }},
      {"si.open_2k1",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n != 2 * f.k + 1 || f.open != TriState::True) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         return f.par == TriState::True ? TriState::True : TriState::Unknown;
       }},
      {"si.sk",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n != 2 * f.k + 1 || !k37(f.k) || !f.compact || !f.connected) return std::nullopt;
         if (f.par != TriState::True) return TriState::Unknown;
         in.emplace_back("chi*", str(*f.chi_star));
         return tri(*f.chi_even());
       }},
      {"si.twi_2k1",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n != 2 * f.k + 1 || f.k < 2 || k37(f.k) || !f.compact || !f.connected) {
           return std::nullopt;
         }
         in.emplace_back("TWI", str(f.twi.value));
         return f.twi.value == TriState::True ? TriState::True : TriState::Unknown;
       }},
      {"si.knot",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         if (f.k != 1 || f.n != 3 || !f.compact || !f.connected) return std::nullopt;
         return TriState::False;
       }},
      {"si.link",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.k != 1 || f.n != 3 || !f.compact) return std::nullopt;
         if (!f.ctx->diagram) {
           if (f.connected) return std::nullopt;
           throw MissingDiagram("a link diagram is needed to decide SI for a link in E^3");
         }
         Verdict v = si_link_verdict(*f.ctx->diagram);
         const PropertyVerdict& si = v.at(Property::SI);
         in = si.chain.front().inputs;
         return si.value;
       }},
      {"si.multi_2k1",
       [](const Facts& f, RuleInputs&) -> std::optional<TriState> {
         if (f.n != 2 * f.k + 1 || !f.compact || f.connected || f.k == 1) return std::nullopt;
         return TriState::Unknown;
       }},
      {"si.lowdim",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < f.k + 2 || f.n > 2 * f.k) return std::nullopt;
         in.emplace_back("WI", str(f.wi.value));
         in.emplace_back("CI", str(f.ci_base.value));
         TriState v = f.wi.value && f.ci_base.value;
         return v;
       }},
  };
  return rules;
}

inline const std::vector<Rule>& leaf_rules() {
  static const std::vector<Rule> rules{
      {"leaf.large",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (f.n < 2 * f.k + 1) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         return f.par;
       }},
      {"leaf.k37",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (!k37(f.k) || f.n > 2 * f.k) return std::nullopt;
         TriState chi = tri(f.chi_even().value_or(false));
         in.emplace_back("parallelizable", par_str(f));
         in.emplace_back("normal_bundle_trivial", str(f.nb.value));
         in.emplace_back("chi*", str(*f.chi_star));
         return f.par && f.nb.value && chi;
       }},
      {"leaf.generic",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         if (k37(f.k)) return std::nullopt;
         in.emplace_back("parallelizable", par_str(f));
         in.emplace_back("normal_bundle_trivial", str(f.nb.value));
         return f.par && f.nb.value;
       }},
  };
  return rules;
}

inline const std::vector<Rule>& critical_rules() {
  static const std::vector<Rule> rules{
      {"crit.si",
       [](const Facts& f, RuleInputs& in) -> std::optional<TriState> {
         in.emplace_back("SI", str(f.si.value));
         return f.si.value == TriState::True ? TriState::True : TriState::Unknown;
       }},
  };
  return rules;
}

inline bool leaf_domain(const Facts& f) { return f.compact && f.connected && f.n >= f.k + 2; }

// Fills every property of f in dependency order.
// TWI needs no other property. A closed TWI manifold embeds WI, so it is
// parallelizable even when the manifold algebra cannot tell.
inline void intrinsic(Facts& f) {
  f.twi = run_rules(twi_rules(), f, "TWI");
  if (f.par == TriState::Unknown && f.compact && f.twi.value == TriState::True) {
    f.par = TriState::True;
    f.par_from_twi = true;
  }
}

inline void evaluate(Facts& f) {
  intrinsic(f);
  f.nb = run_rules(nb_rules(), f, "NormalTrivial");
  f.wi = run_rules(wi_rules(), f, "WI");
  f.ci_base = run_rules(ci_rules(false), f, "CI");
  f.si = run_rules(si_rules(), f, "SI");
  f.ci = run_rules(ci_rules(true), f, "CI");
  if (leaf_domain(f)) {
    f.leaf = run_rules(leaf_rules(), f, "Leaf");
    if (f.leaf.value != TriState::Unknown && f.wi.value != TriState::Unknown &&
        f.leaf.value != f.wi.value) {
      throw InternalInconsistency("Leaf contradicts WI");
    }
  } else {
    f.leaf = PropertyVerdict{};
    if (f.codim >= 2) {
      // Outside the leaf theorem, WI is equivalent to being a union of proper leaves.
      f.leaf.value = f.wi.value;
      f.leaf.chain.push_back(cite("leaf.proper_union", {{"WI", str(f.wi.value)}}));
    } else {
      f.leaf.unresolved.emplace_back("leaf.proper_union");
    }
  }
  f.critical = run_rules(critical_rules(), f, "Critical");
}

inline Facts base_facts(const EmbeddingContext& ctx) {
  Facts f;
  f.ctx = &ctx;
  f.k = ctx.k();
  f.n = ctx.n;
  f.codim = f.n - f.k;
  f.compact = ctx.compact();
  f.connected = ctx.connected();
  f.open = ctx.open_manifold();
  f.par = parallelizable(ctx.manifold);
  if (f.compact && f.k % 2 == 1) f.chi_star = semicharacteristic(ctx.manifold);
  return f;
}

}  // namespace detail

// Rejects contexts the rules cannot meaningfully be applied to.
inline void validate(const EmbeddingContext& ctx) {
  const int k = ctx.k();
  if (ctx.n <= k) {
    throw ContextInvalid("need n > k (k=" + std::to_string(k) + ", n=" + std::to_string(ctx.n) +
                         ")");
  }
  if (ctx.open_flag && ctx.compact()) {
    throw ContextInvalid("an open manifold cannot be given by a compact expression");
  }
  if (ctx.diagram) {
    if (k != 1 || ctx.n != 3) throw ContextInvalid("a diagram only applies to links in E^3");
    if (!ctx.compact()) throw ContextInvalid("a link diagram describes a compact 1-manifold");
    long long r = z2_betti(ctx.manifold).front();
    if (static_cast<std::size_t>(r) != ctx.diagram->component_count()) {
      throw ContextInvalid("diagram has " + std::to_string(ctx.diagram->component_count()) +
                           " components but the manifold has " + std::to_string(r));
    }
  }
  if (!ctx.diagram && k == 1 && ctx.n == 3 && ctx.compact() && !ctx.connected()) {
    throw MissingDiagram("a link diagram is needed to classify a link in E^3");
  }
  if (ctx.normal_bundle_override != TriState::Unknown) {
    EmbeddingContext plain = ctx;
    plain.normal_bundle_override = TriState::Unknown;
    Facts f = detail::base_facts(plain);
    detail::intrinsic(f);
    PropertyVerdict nb = detail::run_rules(detail::nb_rules(), f, "NormalTrivial");
    if (nb.value != TriState::Unknown && nb.value != ctx.normal_bundle_override) {
      throw ContextInvalid("normal bundle override contradicts rule " + nb.chain.front().rule_id);
    }
  }
  Facts f = detail::base_facts(ctx);
  detail::intrinsic(f);
  f.nb = detail::run_rules(detail::nb_rules(), f, "NormalTrivial");
  if (f.open == TriState::True && f.par == TriState::False && f.nb.value == TriState::True) {
    throw ContextInvalid("an open manifold with trivial normal bundle is parallelizable");
  }
}

inline Facts evaluate_all(const EmbeddingContext& ctx) {
  validate(ctx);
  Facts f = detail::base_facts(ctx);
  detail::evaluate(f);
  return f;
}

inline PropertyVerdict normal_bundle_trivial(const EmbeddingContext& ctx) {
  return evaluate_all(ctx).nb;
}

inline PropertyVerdict twi_verdict(const EmbeddingContext& ctx) { return evaluate_all(ctx).twi; }

// TWI is intrinsic; the ambient dimension only matters for validation.
inline PropertyVerdict twi_verdict(const ManifoldExpr& m) {
  EmbeddingContext ctx = make_context(m, 2 * dim(m) + 2);
  return twi_verdict(ctx);
}

inline PropertyVerdict wi_verdict(const EmbeddingContext& ctx) { return evaluate_all(ctx).wi; }
inline PropertyVerdict ci_verdict(const EmbeddingContext& ctx) { return evaluate_all(ctx).ci; }
inline PropertyVerdict si_verdict(const EmbeddingContext& ctx) { return evaluate_all(ctx).si; }
inline PropertyVerdict critical_verdict(const EmbeddingContext& ctx) {
  return evaluate_all(ctx).critical;
}

inline PropertyVerdict leaf_verdict(const EmbeddingContext& ctx) {
  validate(ctx);
  Facts f = detail::base_facts(ctx);
  if (!detail::leaf_domain(f)) {
    throw ContextInvalid(
        "leaf realization needs a compact connected manifold and n >= k+2; for other "
        "contexts WI is equivalent to being a union of proper leaves");
  }
  detail::evaluate(f);
  return f.leaf;
}

inline Verdict classify(const EmbeddingContext& ctx) {
  Facts f = evaluate_all(ctx);
  Verdict v;
  v.properties[Property::NormalTrivial] = f.nb;
  v.properties[Property::TWI] = f.twi;
  v.properties[Property::WI] = f.wi;
  v.properties[Property::CI] = f.ci;
  v.properties[Property::SI] = f.si;
  v.properties[Property::Leaf] = f.leaf;
  v.properties[Property::Critical] = f.critical;
  return v;
}

// Re-evaluates one cited rule on ctx; used to audit verdict chains.
inline std::optional<TriState> replay_rule(const EmbeddingContext& ctx, Property p,
                                           std::string_view rule_id) {
  Facts f = evaluate_all(ctx);
  const std::vector<Rule>* table = nullptr;
  switch (p) {
    case Property::NormalTrivial: table = &detail::nb_rules(); break;
    case Property::TWI: table = &detail::twi_rules(); break;
    case Property::WI: table = &detail::wi_rules(); break;
    case Property::CI: table = &detail::ci_rules(true); break;
    case Property::SI: table = &detail::si_rules(); break;
    case Property::Leaf: table = &detail::leaf_rules(); break;
    case Property::Critical: table = &detail::critical_rules(); break;
  }
  if (p == Property::Leaf && rule_id == "leaf.proper_union") return f.wi.value;
  for (const Rule& r : *table) {
    if (r.id == rule_id) {
      RuleInputs in;
      return r.eval(f, in);
    }
  }
  return std::nullopt;
}

}  // namespace foliakit
