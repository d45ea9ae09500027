#include <doctest.h>

#include <sstream>

#include "rgcost/schreier.hpp"

using namespace rgcost;

namespace {

FamilyInstance family(Family f, std::int64_t size, int rank = 2) {
  FamilyParams p;
  p.rank = rank;
  p.sizes = {size};
  return make_family(f, p);
}

}  // namespace

TEST_CASE("build_schreier sizes") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  CHECK(g.n_vertices == 64);
  CHECK(g.edge_count() == 128);

  const auto sp = family(Family::sl3z_principal, 2);
  CHECK(build_schreier(sp.actions.at(0)).edge_count() == 1008);

  const auto pr = family(Family::sl3z_projective, 5);
  CHECK(build_schreier(pr.actions.at(0)).edge_count() == 186);
}

TEST_CASE("cayley ball sizes") {
  const GroupInstance t = make_group(Family::torus, 2);
  CHECK(cayley_ball(t, 0).elements.size() == 1);
  CHECK(cayley_ball(t, 1).elements.size() == 5);
  CHECK(cayley_ball(t, 2).elements.size() == 13);  // 2r^2 + 2r + 1

  const GroupInstance h = make_group(Family::heisenberg);
  const auto ball = cayley_ball(h, 2);
  // strictly below the free-product count 1 + 6 + 6*5: [x,z] = 1 forces merges
  CHECK(ball.elements.size() < 37);
  CHECK(ball.elements.size() > 13);
}

TEST_CASE("ball codes are deterministic and root-sensitive") {
  const auto t = family(Family::torus, 8);
  const auto g = build_schreier(t.actions.at(0));
  const auto a = graph_ball_code(g, 0, 2);
  const auto b = graph_ball_code(g, 0, 2);
  CHECK(a == b);
  // vertex-transitive: every root gives the same code
  const auto c = graph_ball_code(g, 17, 2);
  CHECK(a == c);
  CHECK(a.vertex_count() == 13);
}

TEST_CASE("exceptional vertices: torus") {
  const auto t8 = family(Family::torus, 8);
  const auto g8 = build_schreier(t8.actions.at(0));
  CHECK(exceptional_vertices(g8, t8.group, 2).empty());

  const auto t6 = family(Family::torus, 6);
  const auto g6 = build_schreier(t6.actions.at(0));
  CHECK(exceptional_vertices(g6, t6.group, 2).size() == 36);
}

TEST_CASE("exceptional vertices: sl3z principal p=2 at R=1") {
  const auto f = family(Family::sl3z_principal, 2);
  const auto g = build_schreier(f.actions.at(0));
  // E12(1)^2 = id mod 2 creates a 2-cycle absent in the Cayley graph
  CHECK(exceptional_vertices(g, f.group, 1).size() == 168);
}

TEST_CASE("normality dichotomy for principal congruence actions") {
  for (const std::int64_t p : {2, 3}) {
    const auto f = family(Family::sl3z_principal, p);
    const auto g = build_schreier(f.actions.at(0));
    const auto bad = exceptional_vertices(g, f.group, 2);
    const bool none = bad.empty();
    const bool all = static_cast<std::int64_t>(bad.size()) == g.n_vertices;
    CHECK((none || all));
  }
}

TEST_CASE("graph dump format") {
  const auto t = family(Family::torus, 2);
  const auto g = build_schreier(t.actions.at(0));
  std::ostringstream os;
  dump_graph(g, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "0 1→1 2→2");
  int lines = 1;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 4);
}

TEST_CASE("connectivity check") {
  const auto t = family(Family::torus, 4);
  CHECK(is_connected(build_schreier(t.actions.at(0))));
  LabeledSchreierGraph g;
  g.n_vertices = 4;
  g.k = 1;
  g.fwd = {{1, 0, 3, 2}};  // two disjoint 2-cycles
  g.inv = {{1, 0, 3, 2}};
  CHECK_FALSE(is_connected(g));
}
