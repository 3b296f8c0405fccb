#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "foliakit/diagram.hpp"
#include "foliakit/rules.hpp"
#include "foliakit/verdict.hpp"

namespace foliakit {

struct Z2Class {
  std::uint8_t v = 0;
  Z2Class() = default;
  explicit Z2Class(long long x) : v(static_cast<std::uint8_t>(((x % 2) + 2) % 2)) {}
  bool is_zero() const { return v == 0; }
  friend Z2Class operator+(Z2Class a, Z2Class b) { return Z2Class(a.v + b.v); }
  bool operator==(const Z2Class&) const = default;
};

// Off-diagonal entries are linking numbers; the diagonal holds the Whitney
// number (signed self-crossing count) of each component.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(std::size_t r) : r_(r), m_(r * r, 0) {}

  std::size_t size() const { return r_; }
  long long operator()(std::size_t i, std::size_t j) const { return m_.at(i * r_ + j); }
  long long& operator()(std::size_t i, std::size_t j) { return m_.at(i * r_ + j); }
  bool operator==(const LinkingMatrix&) const = default;

 private:
  std::size_t r_;
  std::vector<long long> m_;
};

inline LinkingMatrix linking_matrix(const LinkDiagram& d) {
  LinkingMatrix m(d.component_count());
  for (const auto& [id, rec] : d.crossings()) {
    std::size_t i = rec.over.component, j = rec.under.component;
    if (i == j) {
      m(i, i) += value(rec.sign);
    } else {
      m(i, j) += value(rec.sign);
      m(j, i) += value(rec.sign);
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j) m(i, j) /= 2;
    }
  }
  return m;
}

inline long long whitney_number(const LinkDiagram& d, std::size_t i) {
  if (i >= d.component_count()) throw std::out_of_range("component index out of range");
  return linking_matrix(d)(i, i);
}

namespace detail {
inline long long off_diagonal_sum(const LinkingMatrix& m, std::size_t i) {
  long long s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j != i) s += m(i, j);
  }
  return s;
}
inline void check_component(const LinkDiagram& d, std::size_t i) {
  if (i >= d.component_count()) throw std::out_of_range("component index out of range");
}
}  // namespace detail

inline Z2Class curvatura_integra_mod2(const LinkDiagram& d, std::size_t i) {
  detail::check_component(d, i);
  return Z2Class(1 + linking_matrix(d)(i, i));
}

inline long long relative_class(const LinkDiagram& d, std::size_t i) {
  detail::check_component(d, i);
  LinkingMatrix m = linking_matrix(d);
  return m(i, i) + detail::off_diagonal_sum(m, i);
}

inline Z2Class seifert_normal_class(const LinkDiagram& d, std::size_t i) {
  detail::check_component(d, i);
  return Z2Class(1 + detail::off_diagonal_sum(linking_matrix(d), i));
}

// An arc runs from passage `start` to the next passage of its component. A
// component without passages is a single arc with start == npos.
struct ArcRef {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t component = 0;
  std::size_t start = 0;
  bool operator==(const ArcRef&) const = default;
};

struct SeifertDecomposition {
  std::vector<std::vector<ArcRef>> circles;
  std::size_t circle_count() const { return circles.size(); }
};

// Oriented smoothing: at each crossing the arc arriving along one strand
// continues along the arc leaving on the other strand.
inline SeifertDecomposition seifert_circles(const LinkDiagram& d) {
  SeifertDecomposition out;
  std::vector<std::size_t> offset(d.component_count() + 1, 0);
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    offset[c + 1] = offset[c] + d.component(c).size();
  }
  std::vector<bool> used(offset.back(), false);
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const Component& comp = d.component(c);
    if (comp.empty()) {
      out.circles.push_back({ArcRef{c, ArcRef::npos}});
      continue;
    }
    for (std::size_t s = 0; s < comp.size(); ++s) {
      if (used[offset[c] + s]) continue;
      std::vector<ArcRef> circle;
      PassageRef cur{c, s};
      while (!used[offset[cur.component] + cur.index]) {
        used[offset[cur.component] + cur.index] = true;
        circle.push_back(ArcRef{cur.component, cur.index});
        std::size_t len = d.component(cur.component).size();
        PassageRef end{cur.component, (cur.index + 1) % len};
        cur = d.partner(end);
      }
      out.circles.push_back(std::move(circle));
    }
  }
  return out;
}

// Link case of the SI criterion: SI iff every component has vanishing
// normal class.
inline Verdict si_link_verdict(const LinkDiagram& d) {
  Verdict v;
  PropertyVerdict wi;
  wi.value = TriState::True;
  wi.chain.push_back(cite("wi.large", {{"k", "1"}, {"n", "3"}, {"parallelizable", "true"}}));
  v.properties[Property::WI] = wi;

  PropertyVerdict si;
  LinkingMatrix m = linking_matrix(d);
  bool all_zero = true;
  std::vector<std::pair<std::string, std::string>> inputs;
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    Z2Class cls(1 + detail::off_diagonal_sum(m, i));
    inputs.emplace_back("normal_class[" + std::to_string(i) + "]", std::to_string(cls.v));
    all_zero = all_zero && cls.is_zero();
  }
  si.value = tri(all_zero);
  si.chain.push_back(cite("si.link", std::move(inputs)));
  if (d.component_count() == 1) si.chain.push_back(cite("si.knot"));
  v.properties[Property::SI] = si;
  return v;
}

}  // namespace foliakit
