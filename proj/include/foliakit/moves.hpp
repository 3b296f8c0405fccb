#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "foliakit/diagram.hpp"

namespace foliakit {

class InvalidLocation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3Slide };

// Gaps are insertion points: gap g of a component sits before passage g,
// and gap == size() appends.
struct R1Insert {
  std::size_t component = 0;
  std::size_t gap = 0;
  Sign sign = Sign::Positive;
  bool over_first = true;
};

struct R1Delete {
  CrossingId crossing;
};

// Pushes a finger of one strand over another, creating crossings x (sign
// first_sign) and y (opposite sign). On the over strand the order is x,y; on
// the under strand it is x,y when the strands run parallel and y,x otherwise.
struct R2Insert {
  std::size_t over_component = 0;
  std::size_t over_gap = 0;
  std::size_t under_component = 0;
  std::size_t under_gap = 0;
  Sign first_sign = Sign::Positive;
  bool parallel = true;
};

struct R2Delete {
  CrossingId first;
  CrossingId second;
};

// The three crossings of a triangle, in any order.
struct R3Slide {
  CrossingId a;
  CrossingId b;
  CrossingId c;
};

using MoveSpec = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Slide>;

inline MoveKind kind(const MoveSpec& m) { return static_cast<MoveKind>(m.index()); }

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1Insert";
    case MoveKind::R1Delete: return "R1Delete";
    case MoveKind::R2Insert: return "R2Insert";
    case MoveKind::R2Delete: return "R2Delete";
    case MoveKind::R3Slide: return "R3Slide";
  }
  return "?";
}

namespace detail {

inline bool cyclically_adjacent(const LinkDiagram& d, PassageRef p, PassageRef q) {
  if (p.component != q.component || p.index == q.index) return false;
  std::size_t n = d.component(p.component).size();
  return (p.index + 1) % n == q.index || (q.index + 1) % n == p.index;
}

// True when q immediately follows p in traversal order.
inline bool follows(const LinkDiagram& d, PassageRef p, PassageRef q) {
  if (p.component != q.component) return false;
  std::size_t n = d.component(p.component).size();
  return (p.index + 1) % n == q.index;
}

inline std::vector<Component> drop(const LinkDiagram& d, const std::vector<CrossingId>& ids) {
  std::vector<Component> out;
  out.reserve(d.component_count());
  for (const Component& comp : d.components()) {
    Component kept;
    for (const Passage& p : comp) {
      if (std::find(ids.begin(), ids.end(), p.crossing) == ids.end()) kept.push_back(p);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

inline void check_gap(const LinkDiagram& d, std::size_t comp, std::size_t gap) {
  if (comp >= d.component_count()) {
    throw InvalidLocation("component " + std::to_string(comp) + " out of range");
  }
  if (gap > d.component(comp).size()) {
    throw InvalidLocation("gap " + std::to_string(gap) + " out of range");
  }
}

}  // namespace detail

// Roles of a triangle: top strand carries over(a), over(b); middle carries
// under(a), over(c); bottom carries under(b), under(c).
struct Triangle {
  CrossingId a;
  CrossingId b;
  CrossingId c;
};

inline std::optional<Triangle> triangle_roles(const LinkDiagram& d, const R3Slide& m) {
  std::array<CrossingId, 3> ids{m.a, m.b, m.c};
  if (m.a == m.b || m.b == m.c || m.a == m.c) return std::nullopt;
  for (CrossingId id : ids) {
    if (!d.has_crossing(id)) return std::nullopt;
  }
  std::sort(ids.begin(), ids.end());
  do {
    const auto& a = d.crossing(ids[0]);
    const auto& b = d.crossing(ids[1]);
    const auto& c = d.crossing(ids[2]);
    if (detail::cyclically_adjacent(d, a.over, b.over) &&
        detail::cyclically_adjacent(d, a.under, c.over) &&
        detail::cyclically_adjacent(d, b.under, c.under)) {
      return Triangle{ids[0], ids[1], ids[2]};
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return std::nullopt;
}

// A triangle is cyclic when its three edges, oriented by the strands, form a
// directed 3-cycle. Otherwise it is braid-like.
inline bool is_cyclic(const LinkDiagram& d, const Triangle& t) {
  const auto& a = d.crossing(t.a);
  const auto& b = d.crossing(t.b);
  const auto& c = d.crossing(t.c);
  // Edge orientations: first-visited vertex -> second-visited vertex.
  int in_a = 0, in_b = 0, in_c = 0;
  (detail::follows(d, a.over, b.over) ? in_b : in_a)++;
  (detail::follows(d, a.under, c.over) ? in_c : in_a)++;
  (detail::follows(d, b.under, c.under) ? in_c : in_b)++;
  return in_a == 1 && in_b == 1 && in_c == 1;
}

namespace detail {

struct MoveApplier {
  const LinkDiagram& d;

  LinkDiagram operator()(const R1Insert& m) const {
    check_gap(d, m.component, m.gap);
    CrossingId x = d.next_free_id();
    std::vector<Component> comps = d.components();
    Passage first{x, m.over_first ? Role::Over : Role::Under, m.sign};
    Passage second{x, m.over_first ? Role::Under : Role::Over, m.sign};
    Component& c = comps[m.component];
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(m.gap), {first, second});
    return LinkDiagram::from_components(std::move(comps));
  }

  LinkDiagram operator()(const R1Delete& m) const {
    if (!d.has_crossing(m.crossing)) {
      throw InvalidLocation("no crossing " + std::to_string(m.crossing.value));
    }
    const auto& rec = d.crossing(m.crossing);
    if (!cyclically_adjacent(d, rec.over, rec.under)) {
      throw InvalidLocation("crossing " + std::to_string(m.crossing.value) + " is not a kink");
    }
    return LinkDiagram::from_components(drop(d, {m.crossing}));
  }

  LinkDiagram operator()(const R2Insert& m) const {
    check_gap(d, m.over_component, m.over_gap);
    check_gap(d, m.under_component, m.under_gap);
    if (m.over_component == m.under_component) {
      std::size_t n = d.component(m.over_component).size();
      bool same = m.over_gap == m.under_gap || (n > 0 && m.over_gap % n == m.under_gap % n);
      if (same) throw InvalidLocation("R2 gaps coincide");
    }
    CrossingId x = d.next_free_id();
    CrossingId y{x.value + 1};
    Sign sx = m.first_sign;
    Sign sy = flip(sx);
    Component over{{x, Role::Over, sx}, {y, Role::Over, sy}};
    Component under = m.parallel ? Component{{x, Role::Under, sx}, {y, Role::Under, sy}}
                                  : Component{{y, Role::Under, sy}, {x, Role::Under, sx}};
    std::vector<Component> comps = d.components();
    struct Ins {
      std::size_t comp, gap;
      Component* what;
    };
    std::array<Ins, 2> ins{Ins{m.over_component, m.over_gap, &over},
                           Ins{m.under_component, m.under_gap, &under}};
    // Insert at the later gap first so earlier gap indices stay valid.
    if (ins[0].comp == ins[1].comp && ins[0].gap < ins[1].gap) std::swap(ins[0], ins[1]);
    for (const Ins& i : ins) {
      Component& c = comps[i.comp];
      c.insert(c.begin() + static_cast<std::ptrdiff_t>(i.gap), i.what->begin(), i.what->end());
    }
    return LinkDiagram::from_components(std::move(comps));
  }

  LinkDiagram operator()(const R2Delete& m) const {
    if (m.first == m.second || !d.has_crossing(m.first) || !d.has_crossing(m.second)) {
      throw InvalidLocation("R2Delete needs two distinct existing crossings");
    }
    const auto& x = d.crossing(m.first);
    const auto& y = d.crossing(m.second);
    if (x.sign == y.sign) throw InvalidLocation("R2 crossings must have opposite signs");
    if (!cyclically_adjacent(d, x.over, y.over) || !cyclically_adjacent(d, x.under, y.under)) {
      throw InvalidLocation("crossings do not form a bigon");
    }
    return LinkDiagram::from_components(drop(d, {m.first, m.second}));
  }

  LinkDiagram operator()(const R3Slide& m) const {
    auto t = triangle_roles(d, m);
    if (!t) throw InvalidLocation("crossings do not form a triangle");
    const auto& a = d.crossing(t->a);
    const auto& b = d.crossing(t->b);
    const auto& c = d.crossing(t->c);
    std::vector<Component> comps = d.components();
    auto swap_pair = [&comps](PassageRef p, PassageRef q) {
      std::swap(comps[p.component][p.index], comps[q.component][q.index]);
    };
    swap_pair(a.over, b.over);
    swap_pair(a.under, c.over);
    swap_pair(b.under, c.under);
    return LinkDiagram::from_components(std::move(comps));
  }
};

}  // namespace detail

inline LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& m) {
  return std::visit(detail::MoveApplier{d}, m);
}

// Every deletion and R3 move available on d.
inline std::vector<MoveSpec> available_reductions(const LinkDiagram& d) {
  std::vector<MoveSpec> out;
  for (const auto& [id, rec] : d.crossings()) {
    if (detail::cyclically_adjacent(d, rec.over, rec.under)) out.push_back(R1Delete{id});
  }
  for (const auto& [id, rec] : d.crossings()) {
    for (const auto& [id2, rec2] : d.crossings()) {
      if (!(id < id2) || rec.sign == rec2.sign) continue;
      if (detail::cyclically_adjacent(d, rec.over, rec2.over) &&
          detail::cyclically_adjacent(d, rec.under, rec2.under)) {
        out.push_back(R2Delete{id, id2});
      }
    }
  }
  // Triangles: a, b with adjacent over passages; c adjacent to under(a) as over.
  std::set<std::array<CrossingId, 3>> triangles;
  for (const auto& [ia, ra] : d.crossings()) {
    for (const auto& [ib, rb] : d.crossings()) {
      if (ia == ib || !detail::cyclically_adjacent(d, ra.over, rb.over)) continue;
      for (const auto& [ic, rc] : d.crossings()) {
        if (ic == ia || ic == ib) continue;
        if (detail::cyclically_adjacent(d, ra.under, rc.over) &&
            detail::cyclically_adjacent(d, rb.under, rc.under)) {
          std::array<CrossingId, 3> key{ia, ib, ic};
          std::sort(key.begin(), key.end());
          if (triangles.insert(key).second) out.push_back(R3Slide{key[0], key[1], key[2]});
        }
      }
    }
  }
  return out;
}

}  // namespace foliakit
