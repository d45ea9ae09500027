#include <doctest.h>

#include <algorithm>
#include <set>

#include "rgcost/rewire.hpp"

using namespace rgcost;

namespace {

FamilyInstance family(Family f, std::int64_t size, int rank = 2) {
  FamilyParams p;
  p.rank = rank;
  p.sizes = {size};
  return make_family(f, p);
}

// single directed n-cycle as a one-generator graph
LabeledSchreierGraph cycle_graph(std::uint32_t n) {
  LabeledSchreierGraph g;
  g.n_vertices = n;
  g.k = 1;
  g.fwd.assign(1, std::vector<std::uint32_t>(n));
  g.inv.assign(1, std::vector<std::uint32_t>(n));
  for (std::uint32_t v = 0; v < n; ++v) {
    g.fwd[0][v] = (v + 1) % n;
    g.inv[0][v] = (v + n - 1) % n;
  }
  return g;
}

}  // namespace

TEST_CASE("cycle decompositions") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  const auto dec = cycle_decomposition(g, 1);
  CHECK(dec.cycles.size() == 8);
  for (const auto& c : dec.cycles) {
    CHECK(c.size() == 8);
    CHECK(*std::min_element(c.begin(), c.end()) == c.front());
  }

  // free mod-5 action: all cycles of E12 have length 5
  const auto sp = family(Family::sl3z_principal, 5);
  const auto gp = build_schreier(sp.actions.at(0));
  const auto dp = cycle_decomposition(gp, 1);
  CHECK(dp.cycles.size() == 372000 / 5);
  for (const auto& c : dp.cycles) CHECK(c.size() == 5);

  // projective p=5: mixed lengths, six fixed points on the line a=0
  const auto pr = family(Family::sl3z_projective, 5);
  const auto gr = build_schreier(pr.actions.at(0));
  const auto dr = cycle_decomposition(gr, 1);
  int fixed = 0;
  std::int64_t total = 0;
  for (const auto& c : dr.cycles) {
    total += static_cast<std::int64_t>(c.size());
    if (c.size() == 1) ++fixed;
  }
  CHECK(total == 31);
  CHECK(fixed == 6);
}

TEST_CASE("separated positions") {
  CHECK(separated_positions(8, 2) == std::vector<std::int64_t>{0, 2, 4, 6});
  CHECK(separated_positions(5, 2) == std::vector<std::int64_t>{0, 2});
  CHECK(separated_positions(1, 4) == std::vector<std::int64_t>{0});
  CHECK_THROWS(separated_positions(0, 2));

  // R-separation and R-covering along the cycle, for a spread of lengths
  for (std::int64_t L : {1, 2, 3, 5, 7, 8, 12, 17, 31}) {
    for (std::int64_t R : {1, 2, 4, 6}) {
      const auto pos = separated_positions(L, R);
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
          const std::int64_t gap = pos[j] - pos[i];
          CHECK(std::min(gap, L - gap) >= R);
        }
      for (std::int64_t q = 0; q < L; ++q) {
        std::int64_t best = L;
        for (const auto p : pos) {
          const std::int64_t d = std::abs(q - p);
          best = std::min(best, std::min(d, L - d));
        }
        CHECK(best <= R);
      }
      if (L >= R) CHECK(static_cast<std::int64_t>(pos.size()) * R <= L);
    }
  }
}

TEST_CASE("torus rewiring at R=2") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  const auto rew = build_rewiring(g, t.group, 2);
  CHECK(rew.edges_H == 96);
  CHECK(rew.density == make_rat(3, 2));
  CHECK(rew.bad_vertices.empty());
  CHECK_FALSE(rew.degenerate);
  REQUIRE(rew.distortion.has_value());
  CHECK(*rew.distortion == 3);
  CHECK(rew.distortion_budget == 25);
  // X_2 has one position every R along each s_1-cycle
  CHECK(rew.separated[1].size() == 32);
}

TEST_CASE("torus rewiring below the injectivity threshold is degenerate") {
  const auto t = family(Family::torus, 6);
  const auto g = build_schreier(t.actions.at(0));
  const auto rew = build_rewiring(g, t.group, 2);
  CHECK(rew.degenerate);
  CHECK(rew.edges_H == g.edge_count());
  CHECK(rew.density == make_rat(2, 1));
  CHECK(*rew.distortion == 1);
}

TEST_CASE("rewiring rejects bad inputs") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  CHECK_THROWS(build_rewiring(g, t.group, 3));  // odd
  CHECK_THROWS(build_rewiring(g, t.group, 0));
}

TEST_CASE("bilipschitz distance on cycles") {
  const auto g = cycle_graph(8);
  EdgeSubset full = EdgeSubset::full(g);
  CHECK(bilipschitz_distance(g, full) == 1);

  EdgeSubset missing(g.n_vertices, g.k);
  for (std::uint32_t v = 0; v + 1 < 8; ++v) missing.insert(v, 1);  // drop edge (7, 1)
  CHECK(bilipschitz_distance(g, missing) == 7);

  EdgeSubset disconnected(g.n_vertices, g.k);
  for (std::uint32_t v = 0; v < 6; ++v) disconnected.insert(v, 1);
  CHECK_FALSE(bilipschitz_distance(g, disconnected).has_value());
}

TEST_CASE("density bound and coverage invariants") {
  for (const std::int64_t n : {8, 16}) {
    for (const std::int64_t R : {2, 4}) {
      const auto t = family(Family::torus, n);
      const auto g = build_schreier(t.actions.at(0));
      const auto rew = build_rewiring(g, t.group, R);
      const int k = g.k;
      const Rat bound = Rat(1) + make_rat(k - 1, R) + Rat(2 * k) * rew.bad_fraction;
      CHECK(rew.density <= bound);
      CHECK(BigInt(static_cast<long>(*rew.distortion)) <= rew.distortion_budget);
      CHECK(rew.edges_H <= g.edge_count());

      // every vertex of every s_{i-1}-cycle lies within R of X_i on that cycle
      for (int i = 2; i <= k; ++i) {
        const std::set<std::uint32_t> chosen(rew.separated[i - 1].begin(),
                                             rew.separated[i - 1].end());
        const auto dec = cycle_decomposition(g, i - 1);
        for (const auto& cycle : dec.cycles) {
          const std::int64_t L = static_cast<std::int64_t>(cycle.size());
          for (std::int64_t q = 0; q < L; ++q) {
            std::int64_t best = L;
            for (std::int64_t s = 0; s < L; ++s) {
              if (!chosen.count(cycle[s])) continue;
              const std::int64_t d = std::abs(q - s);
              best = std::min(best, std::min(d, L - d));
            }
            CHECK(best <= R);
          }
        }
      }
    }
  }
}

TEST_CASE("edge density") {
  CHECK(edge_density(96, 64) == make_rat(3, 2));
  CHECK(edge_density(64, 64) == 1);
  CHECK_THROWS(edge_density(1, 0));
}

TEST_CASE("torus density is exactly 1 + 1/R when R divides n") {
  for (const std::int64_t n : {8, 16, 32}) {
    for (const std::int64_t R : {2, 4}) {
      const auto t = family(Family::torus, n);
      const auto g = build_schreier(t.actions.at(0));
      const auto rew = build_rewiring(g, t.group, R);
      CHECK(rew.density == Rat(1) + make_rat(1, R));
      CHECK(*rew.distortion == R + 1);
      CHECK(rew.bad_vertices.empty());
    }
  }
}
