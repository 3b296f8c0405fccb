// Acceptance gate: one PASS/FAIL line per criterion; non-zero exit on failure.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foliakit/classification.hpp"
#include "foliakit/dual_graph.hpp"
#include "foliakit/link_invariants.hpp"
#include "foliakit/manifold.hpp"
#include "foliakit/moves.hpp"
#include "foliakit/stiefel.hpp"
#include "support/chain_oracle.hpp"
#include "support/corpus.hpp"
#include "support/graph_oracle.hpp"
#include "support/random_manifold.hpp"
#include "support/random_moves.hpp"

using namespace foliakit;
using namespace foliakit::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
};

TriState link_si(const LinkDiagram& d) { return si_link_verdict(d).value(Property::SI); }

TriState classify_link_si(const LinkDiagram& d) {
  EmbeddingContext ctx;
  long long r = static_cast<long long>(d.component_count());
  ctx.manifold = r == 1 ? sphere(1) : custom(1, {r, r}, true, false, TriState::True);
  ctx.n = 3;
  ctx.diagram = d;
  return si_verdict(ctx).value;
}

void knots_not_si(Outcome& o) {
  for (const char* name : {"unknot", "trefoil", "figure_eight"}) {
    LinkDiagram d = load_corpus(name);
    if (link_si(d) != TriState::False || classify_link_si(d) != TriState::False) {
      o.fail(std::string(name) + " reported SI");
    }
  }
}

void links_si(Outcome& o) {
  if (link_si(load_corpus("hopf")) != TriState::True) o.fail("hopf not SI");
  if (classify_link_si(load_corpus("hopf")) != TriState::True) o.fail("hopf classify not SI");
  for (const char* name : {"whitehead", "borromean", "split_unlink"}) {
    LinkDiagram d = load_corpus(name);
    if (link_si(d) != TriState::False || classify_link_si(d) != TriState::False) {
      o.fail(std::string(name) + " reported SI");
    }
  }
}

bool mod2_identity(const LinkDiagram& d) {
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    Z2Class lhs = seifert_normal_class(d, i);
    Z2Class rhs = curvatura_integra_mod2(d, i) + Z2Class(relative_class(d, i));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

void mod2_identity_check(Outcome& o) {
  for (const auto& name : corpus_names()) {
    if (!mod2_identity(load_corpus(name))) o.fail("identity fails on " + name);
  }
  RandomMover mover(0xC0FFEE);
  const auto& names = corpus_names();
  for (int seq = 0; seq < 1000 && o.ok; ++seq) {
    LinkDiagram d = load_corpus(names[static_cast<std::size_t>(seq) % names.size()]);
    MoveTally tally(d.component_count());
    for (int step = 0; step < 12; ++step) {
      d = mover.step(d, tally);
      if (!mod2_identity(d)) {
        o.fail("identity fails after moves: " + serialize(d));
        break;
      }
    }
  }
}

void reidemeister_invariance(Outcome& o) {
  std::size_t r3 = 0;
  for (const auto& name : corpus_names()) {
    LinkDiagram start = load_corpus(name);
    LinkingMatrix lk0 = linking_matrix(start);
    TriState si0 = link_si(start);
    RandomMover mover(std::hash<std::string>{}(name));
    for (int seq = 0; seq < 1000 && o.ok; ++seq) {
      LinkDiagram d = start;
      MoveTally tally(d.component_count());
      for (int step = 0; step < 10; ++step) d = mover.step(d, tally);
      r3 += tally.by_kind[static_cast<std::size_t>(MoveKind::R3Slide)];
      LinkingMatrix lk = linking_matrix(d);
      for (std::size_t i = 0; i < lk.size(); ++i) {
        for (std::size_t j = 0; j < lk.size(); ++j) {
          if (i != j && lk(i, j) != lk0(i, j)) o.fail(name + ": linking number changed");
        }
        if (lk(i, i) - lk0(i, i) != tally.r1_signed[i]) {
          o.fail(name + ": Whitney change differs from signed R1 count");
        }
      }
      if (link_si(d) != si0) o.fail(name + ": SI verdict changed");
    }
  }
  if (r3 == 0) o.fail("no R3 moves were exercised");
}

void lens_twi(Outcome& o) {
  for (long long p = 2; p <= 10; ++p) {
    TriState t = twi_verdict(lens_space(p, 1)).value;
    if (t != tri(p % 2 == 0)) o.fail("L(" + std::to_string(p) + ",1) TWI=" + to_string(t));
  }
}

void sphere_table(Outcome& o) {
  for (int k : {3, 7}) {
    auto at = [&](int n) { return make_context(sphere(k), n); };
    // n = k+2 .. 2k: not WI, not a leaf.
    for (int n = k + 2; n <= 2 * k; ++n) {
      if (wi_verdict(at(n)).value != TriState::False) o.fail("S" + std::to_string(k) + " WI at n=" + std::to_string(n));
      if (leaf_verdict(at(n)).value != TriState::False) o.fail("S" + std::to_string(k) + " Leaf at n=" + std::to_string(n));
    }
    for (int n : {2 * k + 1, 2 * k + 2}) {
      if (wi_verdict(at(n)).value != TriState::True) o.fail("S" + std::to_string(k) + " WI at n=" + std::to_string(n));
    }
    if (si_verdict(at(2 * k + 1)).value != TriState::False) o.fail("S" + std::to_string(k) + " SI at 2k+1");
    if (si_verdict(at(2 * k + 2)).value != TriState::True) o.fail("S" + std::to_string(k) + " SI at 2k+2");
    if (leaf_verdict(at(2 * k + 1)).value != TriState::True) o.fail("S" + std::to_string(k) + " Leaf at 2k+1");
  }
}

void torus_sums(Outcome& o) {
  for (int r = 1; r <= 6; ++r) {
    std::vector<ManifoldExpr> pieces(static_cast<std::size_t>(r), torus(3));
    ManifoldExpr m = connected_sum(pieces);
    if (twi_verdict(m).value != tri(r % 2 == 1)) o.fail("#" + std::to_string(r) + " T3 TWI wrong");
    std::vector<long long> chis(static_cast<std::size_t>(r), semicharacteristic(torus(3)));
    if (semicharacteristic(m) != milnor_sum(chis)) o.fail("chi* mismatch at r=" + std::to_string(r));
  }
}

void kunneth(Outcome& o) {
  ManifoldGen gen(20240501);
  for (int i = 0; i < 20; ++i) {
    ManifoldExpr m = gen.product_expr(8);
    ChainComplex c = cellular_complex(m);
    if (!c.is_complex()) o.fail("oracle complex ill-formed for " + to_string(m));
    if (c.betti() != z2_betti(m)) o.fail("Betti mismatch for " + to_string(m));
  }
}

// H_k of the stunted projective space RP^{n-1}/RP^{k-1}, the bottom of the
// Stiefel manifold, from its cellular chain complex d(e_j) = (1+(-1)^j) e_{j-1}.
GroupDesc stiefel_oracle(int k, int n) {
  long long d_above = (k + 1 <= n - 1) ? (1 + ((k + 1) % 2 == 0 ? 1 : -1)) : 0;
  return d_above == 0 ? GroupDesc::z() : (d_above == 2 ? GroupDesc::z2() : GroupDesc::trivial());
}

void stiefel_table(Outcome& o) {
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      if (!(stiefel_pi(k, n) == stiefel_oracle(k, n))) {
        o.fail("stiefel_pi(" + std::to_string(k) + "," + std::to_string(n) + ")");
      }
    }
  }
  if (!(stiefel_pi(3, 5) == GroupDesc::z2())) o.fail("pi_3(V_5,2)");
  if (!(stiefel_pi(1, 3) == GroupDesc::z2())) o.fail("pi_1(V_3,2)");
}

void orientation(Outcome& o) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const DualGraph& g : connected_graphs(n)) {
      OrientationResult r = alternating_orientation(g);
      bool bip = brute_force_bipartite(g);
      if (const auto* s = std::get_if<std::vector<int>>(&r)) {
        if (!bip || !valid_assignment(g, *s)) o.fail("bad assignment");
      } else if (bip || !valid_odd_cycle(g, std::get<OddCycle>(r).vertices)) {
        o.fail("bad odd cycle witness");
      }
    }
  }
}

void lattice(Outcome& o) {
  ManifoldGen gen(77);
  for (int i = 0; i < 500; ++i) {
    EmbeddingContext ctx = gen.context();
    try {
      Verdict v = classify(ctx);
      TriState si = v.value(Property::SI), wi = v.value(Property::WI), ci = v.value(Property::CI);
      std::string where = to_string(ctx.manifold) + " n=" + std::to_string(ctx.n);
      if (si == TriState::True && (wi != TriState::True || ci != TriState::True)) o.fail("SI without WI and CI: " + where);
      if (wi == TriState::True && parallelizable(ctx.manifold) == TriState::False) o.fail("WI but not parallelizable: " + where);
    } catch (const InternalInconsistency& e) {
      o.fail(std::string("contradiction: ") + e.what());
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"knots are never SI", knots_not_si},
      {"Hopf SI; Whitehead, Borromean, split unlink not SI", links_si},
      {"mod-2 normal class identity on corpus and random move sequences", mod2_identity_check},
      {"Reidemeister invariance and Whitney change by signed R1 count", reidemeister_invariance},
      {"L(p,1) is TWI iff p even, p=2..10", lens_twi},
      {"S3 and S7 WI/SI/Leaf table", sphere_table},
      {"connected sums of T3: TWI iff r odd, chi* two ways", torus_sums},
      {"Z/2 Betti numbers of random products against cellular oracle", kunneth},
      {"Stiefel table for 1 <= k < n <= 20", stiefel_table},
      {"alternating orientation against brute force, graphs up to 6 vertices", orientation},
      {"500 random contexts: SI => WI and CI, WI => parallelizable, no contradictions", lattice},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name;
    if (!o.ok) {
      std::cout << ": " << o.why.str();
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
