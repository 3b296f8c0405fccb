#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foliakit {

enum class TriState { False, True, Unknown };

inline TriState tri(bool b) { return b ? TriState::True : TriState::False; }

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::ostream& operator<<(std::ostream& os, TriState t) { return os << to_string(t); }

inline TriState tristate_from_string(const std::string& s) {
  if (s == "true" || s == "yes") return TriState::True;
  if (s == "false" || s == "no") return TriState::False;
  if (s == "unknown") return TriState::Unknown;
  throw std::invalid_argument("not a tristate: " + s);
}

// Kleene conjunction.
inline TriState operator&&(TriState a, TriState b) {
  if (a == TriState::False || b == TriState::False) return TriState::False;
  if (a == TriState::True && b == TriState::True) return TriState::True;
  return TriState::Unknown;
}

inline TriState operator!(TriState a) {
  if (a == TriState::Unknown) return a;
  return a == TriState::True ? TriState::False : TriState::True;
}

// One rule application. `theorem` is the result the rule rests on and
// `quote` its statement.
struct RuleApplication {
  std::string rule_id;
  std::string theorem;
  std::string quote;
  std::vector<std::pair<std::string, std::string>> inputs;
  bool operator==(const RuleApplication&) const = default;
};

struct PropertyVerdict {
  TriState value = TriState::Unknown;
  std::vector<RuleApplication> chain;
  // Rules that were consulted without deciding, for Unknown answers.
  std::vector<std::string> unresolved;
  bool operator==(const PropertyVerdict&) const = default;
};

enum class Property { WI, SI, CI, TWI, NormalTrivial, Leaf, Critical };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::WI: return "WI";
    case Property::SI: return "SI";
    case Property::CI: return "CI";
    case Property::TWI: return "TWI";
    case Property::NormalTrivial: return "NormalTrivial";
    case Property::Leaf: return "Leaf";
    case Property::Critical: return "Critical";
  }
  return "?";
}

inline Property property_from_string(const std::string& s) {
  for (Property p : {Property::WI, Property::SI, Property::CI, Property::TWI,
                     Property::NormalTrivial, Property::Leaf, Property::Critical}) {
    if (s == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown property " + s);
}

struct Verdict {
  std::map<Property, PropertyVerdict> properties;

  bool has(Property p) const { return properties.count(p) != 0; }
  const PropertyVerdict& at(Property p) const { return properties.at(p); }
  TriState value(Property p) const {
    auto it = properties.find(p);
    return it == properties.end() ? TriState::Unknown : it->second.value;
  }
  bool operator==(const Verdict&) const = default;
};

}  // namespace foliakit
