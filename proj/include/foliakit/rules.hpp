#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foliakit/verdict.hpp"

namespace foliakit {

struct RuleInfo {
  std::string_view id;
  std::string_view theorem;
  std::string_view statement;
};

// Every rule the engine can cite. Theorem tags are the labels of the results
// the rules encode; statements are short restatements.
inline constexpr std::array<RuleInfo, 40> kRuleCatalogue{{
    {"nb.override", "input", "Normal bundle triviality supplied with the input."},
    {"nb.codim1", "const.tilings",
     "The normal line bundle of a codimension one submanifold of E^n is orientable, hence trivial."},
    {"nb.codim2", "L:trivnu", "Every codimension two submanifold of E^n has trivial normal bundle."},
    {"nb.parallelizable", "L:trivnu",
     "A parallelizable k-submanifold of E^n with n >= 2k has trivial normal bundle."},
    {"nb.sphere", "appl.caract",
     "Embeddings of S^1, S^3 and S^7 in E^n have trivial normal bundle, S^7 in E^11 excepted."},
    {"nb.sphere7_11", "appl.caract",
     "Whether S^7 admits an embedding in E^11 with non-trivial normal bundle is open."},

    {"twi.open", "S:TWI", "Open manifolds are TWI."},
    {"twi.not_parallelizable", "S:TWI", "Only parallelizable manifolds can be TWI."},
    {"twi.tori", "P:tori", "T^k is TWI."},
    {"twi.spheres", "spheres", "S^3 and S^7 are not TWI."},
    {"twi.classif", "T:classif", "For k not in {3,7}, every parallelizable k-manifold is TWI."},
    {"twi.caract", "thm.caract",
     "For k in {3,7}, a parallelizable closed connected k-manifold is TWI iff chi* is even."},
    {"twi.sum_parity", "C:sums",
     "For odd k not in {3,7}, a connected sum of r parallelizable k-manifolds is TWI iff r is odd."},
    {"twi.sum_semichar", "P:sums",
     "For k in {3,7}, a connected sum of r parallelizable pieces is TWI iff the pieces' chi* sum to "
     "r-1 mod 2."},

    {"wi.codim1", "thm.cod1", "A codimension one submanifold of E^n is WI iff it is open."},
    {"wi.not_parallelizable", "L:easy", "A WI submanifold of E^n is parallelizable."},
    {"wi.nb_false", "L:easy", "A WI submanifold of E^n has trivial normal bundle."},
    {"wi.open", "thm.open",
     "An open submanifold of codimension >= 2 is WI iff its normal bundle is trivial."},
    {"wi.large", "t.aob", "For n >= 2k+1 a k-submanifold of E^n is WI iff it is parallelizable."},
    {"wi.middle", "T:TWI1",
     "For k+2 <= n <= 2k, a TWI submanifold with trivial normal bundle is WI; a manifold that is "
     "not TWI has no WI embedding."},

    {"ci.codim1", "thm.cod1", "Every codimension one submanifold of E^n is a complete intersection."},
    {"ci.codim2", "Euc5", "Every codimension two submanifold of E^n is a complete intersection."},
    {"ci.codim48", "T:lowdim",
     "A submanifold of codimension 4 or 8 with trivial normal bundle is a complete intersection."},
    {"ci.sk", "thm.sk",
     "For k in {3,7}, every embedding of a parallelizable closed connected k-manifold in E^(2k+1) "
     "is WI and CI."},
    {"ci.si", "D:WI", "An SI submanifold is a complete intersection."},

    {"si.codim1", "thm.cod1", "A codimension one submanifold of E^n is SI iff it is open."},
    {"si.wi_false", "D:WI", "SI implies WI."},
    {"si.large", "thm.SIgreat", "For n >= 2k+2 a parallelizable k-submanifold of E^n is SI."},
    {"si.open_2k1", "thm.SIgreat", "An open parallelizable k-submanifold of E^(2k+1) is SI."},
    {"si.twi_2k1", "thm.SIgreat",
     "For k >= 2, a closed connected TWI k-submanifold of E^(2k+1) is SI."},
    {"si.sk", "thm.sk",
     "For k in {3,7}, a parallelizable closed connected k-submanifold of E^(2k+1) is SI iff chi* "
     "is even."},
    {"si.knot", "cor.nosi", "No knot in E^3 is SI."},
    {"si.link", "thm.silink",
     "A link in E^3 is SI iff the normal class (1 + sum of linking numbers) mod 2 vanishes on "
     "every component."},
    {"si.multi_2k1", "conjci",
     "For disconnected closed submanifolds of E^(2k+1) SI is undecided in general."},
    {"si.lowdim", "T:lowdim", "For k+2 <= n <= 2k a submanifold is SI iff it is WI and CI."},

    {"leaf.large", "T:realization",
     "For n >= 2k+1 a closed connected k-submanifold is a leaf iff it is parallelizable."},
    {"leaf.generic", "T:realization",
     "For k not in {3,7} and n >= k+2, a closed connected k-submanifold is a leaf iff it is "
     "parallelizable with trivial normal bundle."},
    {"leaf.k37", "T:realization",
     "For k in {3,7} and k+2 <= n <= 2k, a leaf additionally needs even chi*."},
    {"leaf.proper_union", "P:foliat",
     "In codimension >= 2 a submanifold is WI iff it is a union of proper leaves of a foliation."},

    {"crit.si", "P:critical", "An SI submanifold is critical."},
}};

inline const RuleInfo& rule_info(std::string_view id) {
  auto it = std::find_if(kRuleCatalogue.begin(), kRuleCatalogue.end(),
                         [id](const RuleInfo& r) { return r.id == id; });
  if (it == kRuleCatalogue.end()) throw std::out_of_range("unknown rule " + std::string(id));
  return *it;
}

inline RuleApplication cite(std::string_view id,
                            std::vector<std::pair<std::string, std::string>> inputs = {}) {
  const RuleInfo& r = rule_info(id);
  return RuleApplication{std::string(r.id), std::string(r.theorem), std::string(r.statement),
                         std::move(inputs)};
}

}  // namespace foliakit
