#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foliakit {

struct CrossingId {
  std::uint32_t value = 0;
  auto operator<=>(const CrossingId&) const = default;
};

enum class Role : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct Passage {
  CrossingId crossing;
  Role role = Role::Over;
  Sign sign = Sign::Positive;
  bool operator==(const Passage&) const = default;
};

using Component = std::vector<Passage>;

struct PassageRef {
  std::size_t component = 0;
  std::size_t index = 0;
  bool operator==(const PassageRef&) const = default;
};

struct CrossingRecord {
  CrossingId id;
  Sign sign = Sign::Positive;
  PassageRef over;
  PassageRef under;
};

class GaussSyntaxError : public std::runtime_error {
 public:
  GaussSyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable signed Gauss diagram. Every crossing id occurs exactly once as an
// over passage and once as an under passage, with matching signs.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  static LinkDiagram from_components(std::vector<Component> components) {
    LinkDiagram d;
    d.components_ = std::move(components);
    d.index();
    return d;
  }

  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  std::size_t component_count() const { return components_.size(); }
  std::size_t crossing_count() const { return crossings_.size(); }
  const std::map<CrossingId, CrossingRecord>& crossings() const { return crossings_; }

  const CrossingRecord& crossing(CrossingId id) const {
    auto it = crossings_.find(id);
    if (it == crossings_.end()) {
      throw std::out_of_range("no crossing " + std::to_string(id.value));
    }
    return it->second;
  }
  bool has_crossing(CrossingId id) const { return crossings_.count(id) != 0; }

  CrossingId next_free_id() const {
    return crossings_.empty() ? CrossingId{1}
                              : CrossingId{crossings_.rbegin()->first.value + 1};
  }

  const Passage& at(PassageRef r) const { return components_.at(r.component).at(r.index); }

  // The other passage of the same crossing.
  PassageRef partner(PassageRef r) const {
    const Passage& p = at(r);
    const CrossingRecord& c = crossing(p.crossing);
    return p.role == Role::Over ? c.under : c.over;
  }

  bool operator==(const LinkDiagram& o) const { return components_ == o.components_; }

 private:
  void index() {
    struct Seen {
      int over = 0;
      int under = 0;
      CrossingRecord rec;
    };
    std::map<CrossingId, Seen> seen;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      for (std::size_t i = 0; i < components_[c].size(); ++i) {
        const Passage& p = components_[c][i];
        if (p.crossing.value == 0) {
          throw ConsistencyError("crossing ids must be positive");
        }
        Seen& s = seen[p.crossing];
        bool first = s.over + s.under == 0;
        if (p.role == Role::Over) {
          ++s.over;
          s.rec.over = {c, i};
        } else {
          ++s.under;
          s.rec.under = {c, i};
        }
        if (first) {
          s.rec.sign = p.sign;
        } else if (s.rec.sign != p.sign) {
          throw ConsistencyError("crossing " + std::to_string(p.crossing.value) +
                                 " has different signs at its two passages");
        }
      }
    }
    for (auto& [id, s] : seen) {
      if (s.over != 1 || s.under != 1) {
        throw ConsistencyError("crossing " + std::to_string(id.value) +
                               " must appear exactly once as O and once as U (found " +
                               std::to_string(s.over) + " O, " + std::to_string(s.under) +
                               " U)");
      }
      s.rec.id = id;
      crossings_.emplace(id, s.rec);
    }
    // Two closed plane curves cross an even number of times.
    std::vector<int> mixed(components_.size() * components_.size(), 0);
    for (const auto& [id, rec] : crossings_) {
      std::size_t i = rec.over.component, j = rec.under.component;
      if (i != j) ++mixed[std::min(i, j) * components_.size() + std::max(i, j)];
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
      for (std::size_t j = i + 1; j < components_.size(); ++j) {
        if (mixed[i * components_.size() + j] % 2 != 0) {
          throw ConsistencyError("components " + std::to_string(i) + " and " +
                                 std::to_string(j) + " cross an odd number of times");
        }
      }
    }
  }

  std::vector<Component> components_;
  std::map<CrossingId, CrossingRecord> crossings_;
};

inline std::string to_string(const Passage& p) {
  std::string s;
  s += p.role == Role::Over ? 'O' : 'U';
  s += std::to_string(p.crossing.value);
  s += p.sign == Sign::Positive ? '+' : '-';
  return s;
}

inline std::string serialize(const LinkDiagram& d) {
  std::string out;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    if (c) out += ';';
    out += '(';
    const Component& comp = d.component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out += ' ';
      out += to_string(comp[i]);
    }
    out += ')';
  }
  return out;
}

namespace detail {

class GaussLexer {
 public:
  explicit GaussLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  char take() {
    char c = peek();
    advance();
    return c;
  }
  std::uint32_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected crossing id");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffu) fail("crossing id too large");
      advance();
    }
    if (v == 0) fail("crossing ids must be positive");
    return static_cast<std::uint32_t>(v);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw GaussSyntaxError(line_, column_, what);
  }

 private:
  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

// diagram := component (";" component)* | passage+
// component := "(" passage* ")"
// passage := ("O"|"U") integer ("+"|"-")
inline LinkDiagram parse_gauss(std::string_view text) {
  detail::GaussLexer lex(text);
  std::vector<Component> comps;
  if (lex.done()) lex.fail("empty diagram");
  // A single component may be written without parentheses.
  const bool bare = lex.peek() == 'O' || lex.peek() == 'U';
  while (true) {
    if (!bare) lex.expect('(');
    Component comp;
    while (bare ? !lex.done() : lex.peek() != ')') {
      Passage p;
      char r = lex.peek();
      if (r == 'O') {
        p.role = Role::Over;
      } else if (r == 'U') {
        p.role = Role::Under;
      } else {
        lex.fail("expected 'O', 'U' or ')'");
      }
      lex.take();
      p.crossing = CrossingId{lex.integer()};
      char s = lex.peek();
      if (s == '+') {
        p.sign = Sign::Positive;
      } else if (s == '-') {
        p.sign = Sign::Negative;
      } else {
        lex.fail("expected '+' or '-'");
      }
      lex.take();
      comp.push_back(p);
    }
    if (!bare) lex.expect(')');
    comps.push_back(std::move(comp));
    if (lex.done()) break;
    lex.expect(';');
  }
  return LinkDiagram::from_components(std::move(comps));
}

}  // namespace foliakit
