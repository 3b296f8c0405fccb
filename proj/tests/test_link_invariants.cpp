#include <gtest/gtest.h>

#include <map>

#include "foliakit/link_invariants.hpp"
#include "support/corpus.hpp"

using namespace foliakit;
using foliakit::testing::load_corpus;

namespace {

// Brute force from the raw passage list: half the signed count of crossings
// whose over and under strands lie on i and j.
long long naive_lk(const LinkDiagram& d, std::size_t i, std::size_t j) {
  long long s = 0;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    for (const Passage& p : d.component(c)) {
      if (p.role != Role::Over) continue;
      for (std::size_t c2 = 0; c2 < d.component_count(); ++c2) {
        for (const Passage& q : d.component(c2)) {
          if (q.crossing == p.crossing && q.role == Role::Under) {
            if ((c == i && c2 == j) || (c == j && c2 == i)) s += value(p.sign);
          }
        }
      }
    }
  }
  return i == j ? s : s / 2;
}

}  // namespace

TEST(LinkInvariants, LinkingMatrices) {
  LinkingMatrix hopf = linking_matrix(load_corpus("hopf"));
  EXPECT_EQ(hopf(0, 1), 1);
  EXPECT_EQ(hopf(1, 0), 1);
  EXPECT_EQ(hopf(0, 0), 0);
  LinkingMatrix split = linking_matrix(load_corpus("split_unlink"));
  EXPECT_EQ(split(0, 1), 0);
  EXPECT_EQ(linking_matrix(load_corpus("trefoil"))(0, 0), 3);
}

TEST(LinkInvariants, MatchesNaiveCount) {
  for (const auto& name : foliakit::testing::corpus_names()) {
    LinkDiagram d = load_corpus(name);
    LinkingMatrix m = linking_matrix(d);
    for (std::size_t i = 0; i < d.component_count(); ++i) {
      for (std::size_t j = 0; j < d.component_count(); ++j) EXPECT_EQ(m(i, j), naive_lk(d, i, j)) << name;
    }
  }
}

TEST(LinkInvariants, WhiteheadAndBorromeanUnlinked) {
  for (const char* name : {"whitehead", "borromean"}) {
    LinkDiagram d = load_corpus(name);
    LinkingMatrix m = linking_matrix(d);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i != j) {
          EXPECT_EQ(m(i, j), 0) << name;
        }
      }
    }
  }
}

TEST(LinkInvariants, WhitneyNumbers) {
  EXPECT_EQ(whitney_number(load_corpus("unknot"), 0), 0);
  EXPECT_EQ(whitney_number(load_corpus("trefoil"), 0), 3);
  EXPECT_EQ(whitney_number(load_corpus("figure_eight"), 0), 0);
}

TEST(LinkInvariants, CurvaturaIntegra) {
  EXPECT_EQ(curvatura_integra_mod2(load_corpus("unknot"), 0), Z2Class(1));
  EXPECT_EQ(curvatura_integra_mod2(load_corpus("trefoil"), 0), Z2Class(0));
  EXPECT_EQ(curvatura_integra_mod2(load_corpus("figure_eight"), 0), Z2Class(1));
}

TEST(LinkInvariants, RelativeClass) {
  EXPECT_EQ(relative_class(load_corpus("unknot"), 0), 0);
  EXPECT_EQ(relative_class(load_corpus("trefoil"), 0), 3);
  EXPECT_EQ(relative_class(load_corpus("hopf"), 0), 1);
}

TEST(LinkInvariants, NormalClass) {
  for (const char* knot : {"unknot", "trefoil", "figure_eight"}) {
    EXPECT_EQ(seifert_normal_class(load_corpus(knot), 0), Z2Class(1)) << knot;
  }
  EXPECT_EQ(seifert_normal_class(load_corpus("hopf"), 0), Z2Class(0));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(seifert_normal_class(load_corpus("borromean"), i), Z2Class(1));
}

TEST(LinkInvariants, SeifertCircles) {
  EXPECT_EQ(seifert_circles(load_corpus("unknot")).circle_count(), 1u);
  EXPECT_EQ(seifert_circles(load_corpus("trefoil")).circle_count(), 2u);
  EXPECT_EQ(seifert_circles(load_corpus("hopf")).circle_count(), 2u);
  EXPECT_EQ(seifert_circles(load_corpus("split_unlink")).circle_count(), 2u);
}

TEST(LinkInvariants, SeifertCirclesPartitionArcs) {
  for (const auto& name : foliakit::testing::corpus_names()) {
    LinkDiagram d = load_corpus(name);
    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& circle : seifert_circles(d).circles) {
      for (const ArcRef& a : circle) seen[{a.component, a.start}]++;
    }
    std::size_t arcs = 0;
    for (std::size_t c = 0; c < d.component_count(); ++c) arcs += std::max<std::size_t>(d.component(c).size(), 1);
    EXPECT_EQ(seen.size(), arcs) << name;
    for (const auto& [k, v] : seen) EXPECT_EQ(v, 1) << name;
  }
}

TEST(LinkInvariants, SiVerdicts) {
  EXPECT_EQ(si_link_verdict(load_corpus("hopf")).value(Property::SI), TriState::True);
  EXPECT_EQ(si_link_verdict(load_corpus("trefoil")).value(Property::SI), TriState::False);
  EXPECT_EQ(si_link_verdict(load_corpus("borromean")).value(Property::SI), TriState::False);
  EXPECT_FALSE(si_link_verdict(load_corpus("hopf")).at(Property::SI).chain.empty());
}

TEST(LinkInvariants, RelabelingInvariance) {
  LinkDiagram a = parse_gauss("(O1+ U2+ O3+ U1+ O2+ U3+)");
  LinkDiagram b = parse_gauss("(O30+ U5+ O12+ U30+ O5+ U12+)");
  EXPECT_EQ(linking_matrix(a), linking_matrix(b));
  EXPECT_EQ(seifert_circles(a).circle_count(), seifert_circles(b).circle_count());
}
