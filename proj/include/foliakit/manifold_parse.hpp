#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "foliakit/manifold.hpp"

namespace foliakit {

namespace detail {

// expr := sum
// sum  := prod ("#" prod)*
// prod := atom ("x" atom)*
// atom := "S" int | "T" int | "L(" int "," int ")" | "Sigma(" int ")"
//       | "custom(" int ";" int ("," int)* ";" flag ";" flag ";" flag ")"
//       | "(" expr ")"
class ManifoldParser {
 public:
  explicit ManifoldParser(std::string_view text) : text_(text) {}

  ManifoldExpr parse() {
    ManifoldExpr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  ManifoldExpr sum() {
    std::vector<ManifoldExpr> parts{prod()};
    while (accept('#')) parts.push_back(prod());
    if (parts.size() == 1) return std::move(parts.front());
    return {ConnectedSum{check_sum(std::move(parts))}};
  }

  ManifoldExpr prod() {
    std::vector<ManifoldExpr> parts{atom()};
    while (accept('x')) parts.push_back(atom());
    if (parts.size() == 1) return std::move(parts.front());
    return {Product{std::move(parts)}};
  }

  std::vector<ManifoldExpr> check_sum(std::vector<ManifoldExpr> parts) {
    // Reuse the validating constructor, keeping the parsed shape.
    ManifoldExpr e = connected_sum(parts);
    (void)e;
    return parts;
  }

  ManifoldExpr atom() {
    skip_ws();
    if (accept('(')) {
      ManifoldExpr e = sum();
      expect(')');
      return e;
    }
    if (keyword("Sigma")) {
      expect('(');
      long long g = integer();
      expect(')');
      return surface(static_cast<int>(g));
    }
    if (keyword("custom")) return custom_atom();
    if (accept('S')) return sphere(static_cast<int>(integer()));
    if (accept('T')) return torus(static_cast<int>(integer()));
    if (accept('L')) {
      expect('(');
      long long p = integer();
      expect(',');
      long long q = integer();
      expect(')');
      return lens_space(p, q);
    }
    fail("expected a manifold");
  }

  ManifoldExpr custom_atom() {
    expect('(');
    long long k = integer();
    expect(';');
    std::vector<long long> betti{integer()};
    while (accept(',')) betti.push_back(integer());
    expect(';');
    TriState compact = flag();
    expect(';');
    TriState connected = flag();
    expect(';');
    TriState par = flag();
    expect(')');
    if (compact == TriState::Unknown || connected == TriState::Unknown) {
      fail("compact and connected flags must be yes or no");
    }
    return custom(static_cast<int>(k), std::move(betti), compact == TriState::True,
                  connected == TriState::True, par);
  }

  TriState flag() {
    skip_ws();
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word += text_[pos_++];
    }
    if (word == "yes" || word == "true") return TriState::True;
    if (word == "no" || word == "false") return TriState::False;
    if (word == "unknown") return TriState::Unknown;
    fail("expected yes, no or unknown");
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000000) fail("integer too large");
    }
    return neg ? -v : v;
  }

  bool keyword(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ManifoldError(ManifoldError::Kind::InvalidExpression,
                        "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ManifoldExpr parse_manifold(std::string_view text) {
  return detail::ManifoldParser(text).parse();
}

}  // namespace foliakit
