#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "foliakit/verdict.hpp"

namespace foliakit {

class ManifoldError : public std::runtime_error {
 public:
  enum class Kind { InvalidExpression, NonCompact, DimensionMismatch, EvenDimension, EmptyList };
  ManifoldError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct ManifoldExpr;

struct Sphere {
  int k = 1;
  bool operator==(const Sphere&) const = default;
};
struct Torus {
  int k = 1;
  bool operator==(const Torus&) const = default;
};
struct LensSpace {
  long long p = 1;
  long long q = 0;
  bool operator==(const LensSpace&) const = default;
};
struct OrientedSurface {
  int g = 0;
  bool operator==(const OrientedSurface&) const = default;
};
struct Product {
  std::vector<ManifoldExpr> factors;
  bool operator==(const Product&) const;
};
struct ConnectedSum {
  std::vector<ManifoldExpr> pieces;
  bool operator==(const ConnectedSum&) const;
};
// Closed orientable manifolds are assumed throughout; `compact` false means
// non-compact without boundary.
struct Custom {
  int k = 1;
  std::vector<long long> betti;
  bool compact = true;
  bool connected = true;
  TriState parallelizable = TriState::Unknown;
  bool operator==(const Custom&) const = default;
};

struct ManifoldExpr {
  std::variant<Sphere, Torus, LensSpace, OrientedSurface, Product, ConnectedSum, Custom> node;
  bool operator==(const ManifoldExpr&) const = default;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
};

inline bool Product::operator==(const Product& o) const { return factors == o.factors; }
inline bool ConnectedSum::operator==(const ConnectedSum& o) const { return pieces == o.pieces; }

inline int dim(const ManifoldExpr& m);
inline bool is_compact(const ManifoldExpr& m);
inline bool is_connected(const ManifoldExpr& m);
inline std::vector<long long> z2_betti(const ManifoldExpr& m);
inline TriState parallelizable(const ManifoldExpr& m);

namespace detail {
[[noreturn]] inline void invalid(const std::string& what) {
  throw ManifoldError(ManifoldError::Kind::InvalidExpression, what);
}
inline long long euler_of(const std::vector<long long>& b) {
  long long chi = 0;
  for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * b[i];
  return chi;
}
}  // namespace detail

// Validating constructors.

inline ManifoldExpr sphere(int k) {
  if (k < 1) detail::invalid("sphere dimension must be >= 1");
  return {Sphere{k}};
}

inline ManifoldExpr torus(int k) {
  if (k < 1) detail::invalid("torus dimension must be >= 1");
  return {Torus{k}};
}

inline ManifoldExpr lens_space(long long p, long long q) {
  if (p < 1) detail::invalid("lens space needs p >= 1");
  if (std::gcd(p, q) != 1) detail::invalid("lens space needs gcd(p,q) = 1");
  return {LensSpace{p, q}};
}

inline ManifoldExpr surface(int g) {
  if (g < 0) detail::invalid("genus must be >= 0");
  return {OrientedSurface{g}};
}

inline ManifoldExpr product(std::vector<ManifoldExpr> factors) {
  if (factors.empty()) detail::invalid("empty product");
  if (factors.size() == 1) return std::move(factors.front());
  return {Product{std::move(factors)}};
}

inline ManifoldExpr connected_sum(std::vector<ManifoldExpr> pieces) {
  if (pieces.empty()) detail::invalid("empty connected sum");
  int k = dim(pieces.front());
  if (k < 2) detail::invalid("connected sums need dimension >= 2");
  for (const ManifoldExpr& p : pieces) {
    if (dim(p) != k) {
      throw ManifoldError(ManifoldError::Kind::DimensionMismatch,
                          "connected sum pieces must share one dimension");
    }
    if (!is_compact(p) || !is_connected(p)) {
      detail::invalid("connected sum pieces must be closed and connected");
    }
  }
  if (pieces.size() == 1) return std::move(pieces.front());
  return {ConnectedSum{std::move(pieces)}};
}

inline ManifoldExpr custom(int k, std::vector<long long> betti, bool compact, bool connected,
                           TriState par) {
  if (k < 1) detail::invalid("custom dimension must be >= 1");
  if (betti.size() != static_cast<std::size_t>(k) + 1) {
    throw ManifoldError(ManifoldError::Kind::DimensionMismatch,
                        "custom Betti vector must have k+1 entries");
  }
  for (long long b : betti) {
    if (b < 0) detail::invalid("Betti numbers must be non-negative");
  }
  if (betti[0] < 1) detail::invalid("b0 must be >= 1");
  if (connected && betti[0] != 1) detail::invalid("connected manifold needs b0 = 1");
  if (!connected && compact && betti[0] < 2) detail::invalid("disconnected manifold needs b0 >= 2");
  if (compact) {
    for (std::size_t i = 0; i < betti.size(); ++i) {
      if (betti[i] != betti[betti.size() - 1 - i]) {
        detail::invalid("closed manifold Betti numbers must be palindromic");
      }
    }
    if (par == TriState::True && detail::euler_of(betti) != 0) {
      detail::invalid("non-zero Euler characteristic contradicts parallelizable");
    }
    if (par == TriState::False && k == 2 && connected && betti[1] == 2) {
      detail::invalid("a closed surface of genus one is parallelizable");
    }
    if (par == TriState::True && k == 2 && connected && betti[1] != 2) {
      detail::invalid("only the genus one surface is parallelizable");
    }
  }
  if (par == TriState::False && (k == 1 || k == 3 || (!compact && k <= 3))) {
    detail::invalid("orientable manifolds of this dimension are parallelizable");
  }
  return {Custom{k, std::move(betti), compact, connected, par}};
}

inline int dim(const ManifoldExpr& m) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Sphere> || std::is_same_v<T, Torus> ||
                      std::is_same_v<T, Custom>) {
          return n.k;
        } else if constexpr (std::is_same_v<T, LensSpace>) {
          return 3;
        } else if constexpr (std::is_same_v<T, OrientedSurface>) {
          return 2;
        } else if constexpr (std::is_same_v<T, Product>) {
          int s = 0;
          for (const auto& f : n.factors) s += dim(f);
          return s;
        } else {
          return dim(n.pieces.front());
        }
      },
      m.node);
}

inline bool is_compact(const ManifoldExpr& m) {
  if (const auto* c = m.as<Custom>()) return c->compact;
  if (const auto* p = m.as<Product>()) {
    for (const auto& f : p->factors) {
      if (!is_compact(f)) return false;
    }
  }
  return true;
}

inline bool is_connected(const ManifoldExpr& m) {
  if (const auto* c = m.as<Custom>()) return c->connected;
  if (const auto* p = m.as<Product>()) {
    for (const auto& f : p->factors) {
      if (!is_connected(f)) return false;
    }
  }
  return true;
}

// True when every component is non-compact; Unknown when that cannot be read
// off the expression.
inline TriState openness(const ManifoldExpr& m) {
  if (is_compact(m)) return TriState::False;
  if (is_connected(m)) return TriState::True;
  return TriState::Unknown;
}

namespace detail {
inline long long binomial(int n, int r) {
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

inline std::vector<long long> convolve(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Pieces of nested connected sums, in order.
inline void flatten_sum(const ManifoldExpr& m, std::vector<const ManifoldExpr*>& out) {
  if (const auto* s = m.as<ConnectedSum>()) {
    for (const auto& p : s->pieces) flatten_sum(p, out);
  } else {
    out.push_back(&m);
  }
}

inline void flatten_product(const ManifoldExpr& m, std::vector<const ManifoldExpr*>& out) {
  if (const auto* p = m.as<Product>()) {
    for (const auto& f : p->factors) flatten_product(f, out);
  } else {
    out.push_back(&m);
  }
}
}  // namespace detail

inline std::vector<const ManifoldExpr*> summands(const ManifoldExpr& m) {
  std::vector<const ManifoldExpr*> out;
  detail::flatten_sum(m, out);
  return out;
}

inline std::vector<long long> z2_betti(const ManifoldExpr& m) {
  if (!is_compact(m)) {
    throw ManifoldError(ManifoldError::Kind::NonCompact, "Betti numbers need a compact manifold");
  }
  return std::visit(
      [&m](const auto& n) -> std::vector<long long> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          std::vector<long long> b(static_cast<std::size_t>(n.k) + 1, 0);
          b.front() = b.back() = 1;
          return b;
        } else if constexpr (std::is_same_v<T, Torus>) {
          std::vector<long long> b;
          for (int i = 0; i <= n.k; ++i) b.push_back(detail::binomial(n.k, i));
          return b;
        } else if constexpr (std::is_same_v<T, LensSpace>) {
          return n.p % 2 == 0 ? std::vector<long long>{1, 1, 1, 1}
                              : std::vector<long long>{1, 0, 0, 1};
        } else if constexpr (std::is_same_v<T, OrientedSurface>) {
          return {1, 2LL * n.g, 1};
        } else if constexpr (std::is_same_v<T, Product>) {
          std::vector<long long> b{1};
          for (const auto& f : n.factors) b = detail::convolve(b, z2_betti(f));
          return b;
        } else if constexpr (std::is_same_v<T, ConnectedSum>) {
          int k = dim(m);
          std::vector<long long> b(static_cast<std::size_t>(k) + 1, 0);
          b.front() = b.back() = 1;
          for (const ManifoldExpr* p : summands(m)) {
            std::vector<long long> pb = z2_betti(*p);
            for (int i = 1; i < k; ++i) b[i] += pb[i];
          }
          return b;
        } else {
          return n.betti;
        }
      },
      m.node);
}

inline long long euler_characteristic(const ManifoldExpr& m) {
  return detail::euler_of(z2_betti(m));
}

// chi*(L) = sum of b_i over i <= (k-1)/2, for closed odd-dimensional L.
inline long long semicharacteristic(const ManifoldExpr& m) {
  int k = dim(m);
  if (k % 2 == 0) {
    throw ManifoldError(ManifoldError::Kind::EvenDimension,
                        "semicharacteristic needs odd dimension");
  }
  std::vector<long long> b = z2_betti(m);
  long long s = 0;
  for (int i = 0; i <= (k - 1) / 2; ++i) s += b[static_cast<std::size_t>(i)];
  return s;
}

// Manifolds known to have stably trivial tangent bundle.
inline bool stably_parallelizable(const ManifoldExpr& m) {
  if (m.as<Sphere>() || m.as<Torus>() || m.as<LensSpace>() || m.as<OrientedSurface>()) return true;
  if (const auto* c = m.as<Custom>()) {
    return c->parallelizable == TriState::True || (c->k <= 3 && c->compact);
  }
  if (const auto* p = m.as<Product>()) {
    for (const auto& f : p->factors) {
      if (!stably_parallelizable(f)) return false;
    }
    return true;
  }
  return is_compact(m) && dim(m) == 3;
}

struct ParallelizableDecision {
  TriState value = TriState::Unknown;
  std::string reason;
};

inline ParallelizableDecision parallelizable_decision(const ManifoldExpr& m) {
  const int k = dim(m);
  if (const auto* s = m.as<Sphere>()) {
    return {tri(s->k == 1 || s->k == 3 || s->k == 7), "S^k is parallelizable iff k in {1,3,7}"};
  }
  if (m.as<Torus>()) return {TriState::True, "tori are parallelizable"};
  if (const auto* c = m.as<Custom>()) {
    if (c->parallelizable != TriState::Unknown) return {c->parallelizable, "declared"};
  }
  if (k == 1 || k == 3) {
    return {TriState::True, "orientable manifolds of dimension 1 and 3 are parallelizable"};
  }
  if (!is_compact(m) && is_connected(m) && k <= 3) {
    return {TriState::True, "open orientable manifolds of dimension <= 3 are parallelizable"};
  }
  if (const auto* g = m.as<OrientedSurface>()) {
    return {tri(g->g == 1), "a closed orientable surface is parallelizable iff its genus is 1"};
  }
  if (is_compact(m) && euler_characteristic(m) != 0) {
    return {TriState::False, "non-zero Euler characteristic"};
  }
  if (m.as<Product>()) {
    std::vector<const ManifoldExpr*> fs;
    detail::flatten_product(m, fs);
    bool all_spheres = true, odd_sphere = false, all_par = true, some_par = false,
         all_stable = true;
    for (const ManifoldExpr* f : fs) {
      if (const auto* s = f->as<Sphere>()) {
        odd_sphere = odd_sphere || s->k % 2 == 1;
      } else {
        all_spheres = false;
      }
      TriState p = parallelizable(*f);
      all_par = all_par && p == TriState::True;
      some_par = some_par || p == TriState::True;
      all_stable = all_stable && stably_parallelizable(*f);
    }
    if (all_spheres && odd_sphere) {
      return {TriState::True, "a product of spheres with an odd-dimensional factor"};
    }
    if (all_par) return {TriState::True, "a product of parallelizable manifolds"};
    if (all_stable && some_par) {
      return {TriState::True,
              "a product of stably parallelizable manifolds with a parallelizable factor"};
    }
  }
  return {TriState::Unknown, "no rule decides"};
}

inline TriState parallelizable(const ManifoldExpr& m) { return parallelizable_decision(m).value; }

inline long long milnor_sum(const std::vector<long long>& values) {
  if (values.empty()) throw ManifoldError(ManifoldError::Kind::EmptyList, "empty list");
  long long s = 0;
  for (long long v : values) s += v;
  return s - static_cast<long long>(values.size() - 1);
}

struct CompressionConstraint {
  enum class Kind { ExactlyZero, ZeroModTwo, Unconstrained } kind;
  std::string description;
};

// Constraint on the compression invariant Ci of an embedding of a closed
// parallelizable k-manifold in E^2k with trivial normal bundle.
inline CompressionConstraint bredon_kosinski_ci(int k) {
  if (k < 1) detail::invalid("dimension must be >= 1");
  if (k % 2 == 0) return {CompressionConstraint::Kind::ExactlyZero, "Ci = 0"};
  if (k != 1 && k != 3 && k != 7) return {CompressionConstraint::Kind::ZeroModTwo, "Ci = 0 mod 2"};
  return {CompressionConstraint::Kind::Unconstrained,
          "unconstrained; Ci = chi* mod 2 for compressions of embeddings"};
}

namespace detail {
inline std::string wrap(const ManifoldExpr& m, bool in_product);
}

inline std::string to_string(const ManifoldExpr& m) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return "S" + std::to_string(n.k);
        } else if constexpr (std::is_same_v<T, Torus>) {
          return "T" + std::to_string(n.k);
        } else if constexpr (std::is_same_v<T, LensSpace>) {
          return "L(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")";
        } else if constexpr (std::is_same_v<T, OrientedSurface>) {
          return "Sigma(" + std::to_string(n.g) + ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string s;
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i) s += " x ";
            s += detail::wrap(n.factors[i], true);
          }
          return s;
        } else if constexpr (std::is_same_v<T, ConnectedSum>) {
          std::string s;
          for (std::size_t i = 0; i < n.pieces.size(); ++i) {
            if (i) s += " # ";
            s += detail::wrap(n.pieces[i], false);
          }
          return s;
        } else {
          std::string s = "custom(" + std::to_string(n.k) + ";";
          for (std::size_t i = 0; i < n.betti.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(n.betti[i]);
          }
          s += std::string(";") + (n.compact ? "yes" : "no") + ";" + (n.connected ? "yes" : "no") +
               ";" + (n.parallelizable == TriState::True    ? "yes"
                      : n.parallelizable == TriState::False ? "no"
                                                            : "unknown") +
               ")";
          return s;
        }
      },
      m.node);
}

namespace detail {
inline std::string wrap(const ManifoldExpr& m, bool in_product) {
  bool paren = m.as<ConnectedSum>() != nullptr || (in_product && m.as<Product>() != nullptr) ||
               (!in_product && m.as<ConnectedSum>() != nullptr);
  return paren ? "(" + to_string(m) + ")" : to_string(m);
}
}  // namespace detail

}  // namespace foliakit
