#include <doctest.h>

#include <cmath>

#include "rgcost/homology.hpp"

using namespace rgcost;

namespace {

FamilyInstance family(Family f, std::int64_t size, int rank = 2) {
  FamilyParams p;
  p.rank = rank;
  p.sizes = {size};
  return make_family(f, p);
}

SnfResult homology_via_schreier(const FamilyInstance& fam, std::uint32_t base = 0) {
  return smith_normal_form(
      abelianized_matrix(schreier_presentation(fam.group, fam.actions.at(0), base)));
}

struct RewiredRoute {
  SubgroupPresentation pres;
  SnfResult snf;
  std::int64_t dL = 0;
};

RewiredRoute homology_via_rewiring(const FamilyInstance& fam, std::int64_t R) {
  const auto g = build_schreier(fam.actions.at(0));
  const auto rew = build_rewiring(g, fam.group, R);
  const auto lab = label_rewiring(g, rew.kept, fam.group);
  RewiredRoute out;
  out.pres = rewired_complex(g, lab, fam.group);
  out.snf = smith_normal_form(abelianized_matrix(out.pres));
  out.dL = *rew.distortion;
  return out;
}

}  // namespace

TEST_CASE("schreier presentation of the index-4 torus subgroup") {
  const auto t = family(Family::torus, 2);
  const auto pres = schreier_presentation(t.group, t.actions.at(0));
  CHECK(pres.n_generators == 5);  // 4(2-1)+1
  CHECK(pres.relator_count() == 4);
  CHECK(pres.max_relator_length <= t.group.max_relator_length);
  const auto snf = smith_normal_form(abelianized_matrix(pres));
  CHECK(snf.betti == 2);
  CHECK(snf.trs == 1);
}

TEST_CASE("index-1 action returns the ambient presentation") {
  const GroupInstance group = make_group(Family::torus, 2);
  PermutationAction trivial;
  trivial.n_vertices = 1;
  trivial.fwd = {{0}, {0}};
  trivial.inv = {{0}, {0}};
  const auto pres = schreier_presentation(group, trivial);
  CHECK(pres.n_generators == 2);
  REQUIRE(pres.relator_count() == 1);
  const auto [begin, end] = pres.relator(0);
  const Word rel(begin, end);
  CHECK(rel == Word{1, 2, -1, -2});
}

TEST_CASE("schreier generator counts") {
  const auto h = family(Family::heisenberg, 2);
  const auto pres = schreier_presentation(h.group, h.actions.at(0));
  CHECK(pres.n_generators == 17);  // 8(3-1)+1
  const auto t = family(Family::torus, 8);
  CHECK(schreier_presentation(t.group, t.actions.at(0)).n_generators == 65);
}

TEST_CASE("non-transitive actions are rejected") {
  const GroupInstance group = make_group(Family::torus, 2);
  PermutationAction split;
  split.n_vertices = 2;
  split.fwd = {{0, 1}, {0, 1}};
  split.inv = {{0, 1}, {0, 1}};
  CHECK_THROWS(schreier_presentation(group, split));
}

TEST_CASE("heisenberg homology: Z^2 + Z/n via both routes") {
  for (const std::int64_t n : {2, 3, 4, 5}) {
    const auto fam = family(Family::heisenberg, n);
    const auto schreier = homology_via_schreier(fam);
    CHECK(schreier.betti == 2);
    CHECK(schreier.trs == n);
    const auto rewired = homology_via_rewiring(fam, 2);
    CHECK(schreier.same_abelian_group(rewired.snf));
  }
}

TEST_CASE("torus rewired complex: 33 generators at n=8, R=2") {
  const auto fam = family(Family::torus, 8);
  const auto route = homology_via_rewiring(fam, 2);
  CHECK(route.pres.n_generators == 33);  // 96 - 64 + 1
  CHECK(route.snf.betti == 2);
  CHECK(route.snf.trs == 1);
  CHECK(homology_via_schreier(fam).same_abelian_group(route.snf));
}

TEST_CASE("identity rewiring reproduces the schreier presentation") {
  const auto fam = family(Family::heisenberg, 2);
  const auto g = build_schreier(fam.actions.at(0));
  const auto lab = label_rewiring(g, EdgeSubset::full(g), fam.group);
  const auto a = schreier_presentation(fam.group, fam.actions.at(0));
  const auto b = rewired_complex(g, lab, fam.group);
  CHECK(a.n_generators == b.n_generators);
  CHECK(a.letters == b.letters);
  CHECK(a.offsets == b.offsets);
}

TEST_CASE("sparse heisenberg subgraph: corrections feed the rewired complex") {
  const auto fam = family(Family::heisenberg, 2);
  const auto g = build_schreier(fam.actions.at(0));
  EdgeSubset kept(8, 3);
  for (std::uint32_t v = 0; v < 8; ++v) kept.insert(v, 1);
  kept.insert(0, 2);
  kept.insert(0, 3);
  kept.insert(4, 3);
  const auto lab = label_rewiring(g, kept, fam.group);
  const auto corr = correction_set(g, lab, fam.group);
  REQUIRE_FALSE(corr.entries.empty());

  const auto pres = rewired_complex(g, lab, fam.group);
  // generators: non-tree kept edges plus one per correction arrow
  CHECK(pres.n_generators ==
        kept.count() - 8 + 1 + static_cast<std::int64_t>(corr.entries.size()));
  const auto snf = smith_normal_form(abelianized_matrix(pres));
  CHECK(homology_via_schreier(fam).same_abelian_group(snf));
}

TEST_CASE("homology is base-vertex independent") {
  const auto fam = family(Family::heisenberg, 3);
  const auto at0 = homology_via_schreier(fam, 0);
  const auto at1 = homology_via_schreier(fam, 1);
  CHECK(at0.same_abelian_group(at1));
}

TEST_CASE("relator length bounds") {
  const auto fam = family(Family::torus, 8);
  const auto pres = schreier_presentation(fam.group, fam.actions.at(0));
  CHECK(pres.max_relator_length <= fam.group.max_relator_length);

  const auto route = homology_via_rewiring(fam, 2);
  const double bound =
      4.0 * fam.group.max_relator_length * std::pow(static_cast<double>(route.dL), 4.0);
  CHECK(static_cast<double>(route.pres.max_relator_length) <= bound);
}

TEST_CASE("relators lift to the identity of the ambient group") {
  const auto fam = family(Family::heisenberg, 2);
  const auto g = build_schreier(fam.actions.at(0));

  const auto check_lifts = [&](const SubgroupPresentation& pres) {
    REQUIRE(static_cast<std::int64_t>(pres.generator_words.size()) == pres.n_generators);
    for (std::int64_t r = 0; r < pres.relator_count(); ++r) {
      const auto [begin, end] = pres.relator(r);
      GroupElement acc = fam.group.identity();
      for (const auto* l = begin; l != end; ++l) {
        const Word& w = pres.generator_words[std::abs(*l) - 1];
        const GroupElement gw = evaluate_word(fam.group, w);
        acc = acc.multiply(*l > 0 ? gw : gw.inverse());
      }
      CHECK(acc.is_identity());
    }
    // every generator word fixes the base coset
    const auto& act = fam.actions.at(0);
    for (const auto& w : pres.generator_words)
      CHECK(act.apply_word(w, 0) == 0);
  };

  check_lifts(schreier_presentation(fam.group, fam.actions.at(0), 0, true));

  EdgeSubset kept(8, 3);
  for (std::uint32_t v = 0; v < 8; ++v) kept.insert(v, 1);
  kept.insert(0, 2);
  kept.insert(0, 3);
  kept.insert(4, 3);
  const auto lab = label_rewiring(g, kept, fam.group);
  check_lifts(rewired_complex(g, lab, fam.group, true));
}

TEST_CASE("abelianized matrix rows") {
  SubgroupPresentation pres;
  pres.n_generators = 3;
  pres.begin_relators();
  for (const auto l : {1, 2, -1, -2}) pres.push_letter(l);
  pres.end_relator();
  for (const auto l : {1, 1, -2, -2, -2}) pres.push_letter(l);
  pres.end_relator();
  for (const auto l : {1, 3, -1, -3, -2}) pres.push_letter(l);
  pres.end_relator();
  const auto m = abelianized_matrix(pres);
  CHECK(m.rows == 3);
  CHECK(m.cols == 3);
  // commutator -> zero row; a^2 b^-3 -> (2, -3); [x,y]z^-1 -> -1 at z
  REQUIRE(m.entries.size() == 3);
  CHECK(m.entries[0].row == 1);
  CHECK(m.entries[0].col == 0);
  CHECK(m.entries[0].value == 2);
  CHECK(m.entries[1].row == 1);
  CHECK(m.entries[1].col == 1);
  CHECK(m.entries[1].value == -3);
  CHECK(m.entries[2].row == 2);
  CHECK(m.entries[2].col == 1);
  CHECK(m.entries[2].value == -1);
}

TEST_CASE("sl3z principal p=2: two routes agree") {
  const auto fam = family(Family::sl3z_principal, 2);
  const auto schreier = homology_via_schreier(fam);
  const auto rewired = homology_via_rewiring(fam, 2);
  CHECK(schreier.same_abelian_group(rewired.snf));
}

TEST_CASE("sl3z projective p=3: two routes agree") {
  const auto fam = family(Family::sl3z_projective, 3);
  const auto schreier = homology_via_schreier(fam);
  const auto rewired = homology_via_rewiring(fam, 2);
  CHECK(schreier.same_abelian_group(rewired.snf));
}
