#include <doctest.h>

#include "rgcost/farber.hpp"
#include "rgcost/groupoid.hpp"
#include "rgcost/rewire.hpp"

using namespace rgcost;

namespace {

FamilyInstance family(Family f, std::int64_t size, int rank = 2) {
  FamilyParams p;
  p.rank = rank;
  p.sizes = {size};
  return make_family(f, p);
}

// A deliberately sparse connected subgraph of the mod-2 Heisenberg Schreier
// graph: all x-edges plus three bridges. Its shortest walks route the
// omitted y- and z-edges through non-commuting detours, so corrections show
// up as central powers.
struct SparseHeisenberg {
  FamilyInstance fam = family(Family::heisenberg, 2);
  LabeledSchreierGraph g = build_schreier(fam.actions.at(0));
  EdgeSubset kept{8, 3};

  SparseHeisenberg() {
    for (std::uint32_t v = 0; v < 8; ++v) kept.insert(v, 1);  // x-edges
    kept.insert(0, 2);                                        // z at (0,0,0)
    kept.insert(0, 3);                                        // y at (0,0,0)
    kept.insert(4, 3);                                        // y at (0,0,1)
  }
};

}  // namespace

TEST_CASE("labeled rewiring of the torus at R=2") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  const auto rew = build_rewiring(g, t.group, 2);
  const auto lab = label_rewiring(g, rew.kept, t.group);
  CHECK(lab.omitted.size() == 32);  // half of the 64 b-edges
  CHECK(lab.max_walk_length == 3);
  for (const auto& [slot, label] : lab.omitted) {
    (void)slot;
    CHECK(label.walk.size() == 3);
    // abelian group: every walk product equals the omitted generator
    CHECK(label.product.encode() == t.group.generator(2).encode());
  }
  const auto corr = correction_set(g, lab, t.group);
  CHECK(corr.entries.empty());
  CHECK(corr.measure == 0);
}

TEST_CASE("identity rewiring has no walks and no corrections") {
  const auto t = family(Family::torus, 4);
  const auto g = build_schreier(t.actions.at(0));
  const auto lab = label_rewiring(g, EdgeSubset::full(g), t.group);
  CHECK(lab.omitted.empty());
  CHECK(correction_set(g, lab, t.group).entries.empty());
}

TEST_CASE("single cycle minus one edge walks the long way round") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  EdgeSubset kept = EdgeSubset::full(g);
  // custom subgraph: drop one a1-edge, keep everything else
  EdgeSubset missing(g.n_vertices, g.k);
  for (std::uint32_t v = 0; v < 64; ++v) {
    if (v != 0) missing.insert(v, 1);
    missing.insert(v, 2);
  }
  const auto lab = label_rewiring(g, missing, t.group);
  REQUIRE(lab.omitted.size() == 1);
  const auto& label = lab.omitted.begin()->second;
  CHECK(label.product.encode() == t.group.generator(1).encode());
}

TEST_CASE("sparse heisenberg rewiring produces central corrections") {
  SparseHeisenberg s;
  CHECK(s.kept.count() == 11);
  const auto dL = bilipschitz_distance(s.g, s.kept);
  REQUIRE(dL.has_value());

  const auto lab = label_rewiring(s.g, s.kept, s.fam.group);
  CHECK(lab.omitted.size() == 24 - 11);
  CHECK(lab.max_walk_length <= *dL);

  const auto corr = correction_set(s.g, lab, s.fam.group);
  CHECK_FALSE(corr.entries.empty());
  const auto& act = s.fam.actions.at(0);
  for (const auto& entry : corr.entries) {
    // stabilizer membership under the coset action
    CHECK(act.act_element(entry.element, entry.vertex) == entry.vertex);
    // witness word evaluates to the element and respects the length bound
    CHECK(evaluate_word(s.fam.group, entry.witness).encode() == entry.element.encode());
    CHECK(static_cast<std::int64_t>(entry.witness.size()) <= *dL + 1);
    CHECK(static_cast<std::int64_t>(entry.witness.size()) <= (*dL) * (*dL) + 1);
    // corrections in the Heisenberg group are central powers z^m
    const auto& h = entry.element.heis();
    CHECK(h.a == 0);
    CHECK(h.b == 0);
    CHECK(h.c != 0);
  }

  // gamma at d = dL dominates the correction measure
  const Rat gamma = gamma_sum(act, s.fam.group, *dL);
  CHECK(gamma >= corr.measure);
}

TEST_CASE("disconnected kept set is rejected") {
  const auto t = family(Family::torus, 4);
  const auto g = build_schreier(t.actions.at(0));
  EdgeSubset kept(g.n_vertices, g.k);
  for (std::uint32_t v = 0; v < 16; ++v) kept.insert(v, 1);  // a1-cycles only
  CHECK_THROWS(label_rewiring(g, kept, t.group));
}

TEST_CASE("rank upper bounds") {
  CorrectionSet empty;
  empty.n_vertices = 64;
  empty.measure = 0;
  const auto torus_bound = rank_upper_bound(96, 64, empty);
  CHECK(torus_bound.groupoid == make_rat(1, 2));

  // H = G with k generators: the trivial bound k - 1
  const auto trivial = rank_upper_bound(6 * 100, 100, empty);
  CHECK(trivial.groupoid == 5);

  const auto with_gamma = rank_upper_bound(96, 64, empty, make_rat(1, 4));
  REQUIRE(with_gamma.fixed_point_sum.has_value());
  CHECK(*with_gamma.fixed_point_sum == make_rat(3, 4));
}

TEST_CASE("abelian rank lower bound") {
  SnfResult z2;
  z2.betti = 2;
  z2.factors = {1, 1};
  z2.trs = 1;
  CHECK(abelian_rank_lower_bound(z2) == 2);
  SnfResult z2z3;
  z2z3.betti = 2;
  z2z3.factors = {1, 3};
  z2z3.trs = 3;
  CHECK(abelian_rank_lower_bound(z2z3) == 3);
}

TEST_CASE("torus rank bound shrinks with R") {
  Rat prev;
  bool first = true;
  for (const auto [n, R] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {8, 2}, {16, 4}, {32, 8}, {64, 8}}) {
    const auto t = family(Family::torus, n);
    const auto g = build_schreier(t.actions.at(0));
    const auto rew = build_rewiring(g, t.group, R);
    const auto lab = label_rewiring(g, rew.kept, t.group);
    const auto corr = correction_set(g, lab, t.group);
    const auto bound = rank_upper_bound(rew.edges_H, g.n_vertices, corr);
    CHECK(bound.groupoid == make_rat(1, R));
    if (!first) CHECK(bound.groupoid <= prev);
    prev = bound.groupoid;
    first = false;
  }
}
