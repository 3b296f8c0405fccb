#pragma once

#include <stdexcept>
#include <string>

namespace foliakit {

class ContextInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfTableRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupDesc {
  enum class Kind { Trivial, Z, Z2, PowerOf, Unknown };
  Kind kind = Kind::Unknown;
  Kind base = Kind::Unknown;  // for PowerOf
  int exponent = 1;           // for PowerOf

  static GroupDesc trivial() { return {Kind::Trivial}; }
  static GroupDesc z() { return {Kind::Z}; }
  static GroupDesc z2() { return {Kind::Z2}; }
  static GroupDesc power(GroupDesc g, int r) {
    if (r == 0 || g.kind == Kind::Trivial) return trivial();
    if (r == 1) return g;
    return {Kind::PowerOf, g.kind, r};
  }
  bool operator==(const GroupDesc&) const = default;
};

inline std::string to_string(GroupDesc::Kind k) {
  switch (k) {
    case GroupDesc::Kind::Trivial: return "trivial";
    case GroupDesc::Kind::Z: return "Z";
    case GroupDesc::Kind::Z2: return "Z2";
    case GroupDesc::Kind::PowerOf: return "power";
    case GroupDesc::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::string to_string(const GroupDesc& g) {
  if (g.kind == GroupDesc::Kind::PowerOf) {
    return to_string(g.base) + "^" + std::to_string(g.exponent);
  }
  return to_string(g.kind);
}

// pi_k of the Stiefel manifold of (n-k)-frames in R^n.
inline GroupDesc stiefel_pi(int k, int n) {
  if (k < 1 || n <= k) {
    throw ContextInvalid("stiefel_pi needs 1 <= k < n (got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  if (k % 2 == 0 || n == k + 1) return GroupDesc::z();
  return GroupDesc::z2();
}

enum class Frame { Tangent, Normal };

// Homotopy classes of framings over an open k-manifold with r generators in
// H^k, embedded in E^n.
inline GroupDesc homotopy_classes(int r, int k, int n, Frame frame) {
  if (r < 0) throw ContextInvalid("r must be >= 0");
  if (k < 1 || n <= k) throw ContextInvalid("homotopy_classes needs 1 <= k < n");
  if (frame == Frame::Tangent) {
    if (n >= 2 * k + 1) return GroupDesc::trivial();
    if (n == 2 * k) return GroupDesc::power(stiefel_pi(k, 2 * k), r);
    throw OutOfTableRange("tangent frame table covers n >= 2k only");
  }
  return GroupDesc::power(stiefel_pi(k, n), r);
}

}  // namespace foliakit
