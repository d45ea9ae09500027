// Labeled Schreier graphs, canonical rooted-ball codes for labeled graphs
// and Cayley graphs, and the exceptional-vertex scan.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rgcost/group.hpp"

namespace rgcost {

// One out-edge per (vertex, generator); the edge multiset is
// {(v, i) : v vertex, 1 <= i <= k}, traversable in both directions.
struct LabeledSchreierGraph {
  std::int64_t n_vertices = 0;
  int k = 0;
  std::vector<std::vector<std::uint32_t>> fwd;
  std::vector<std::vector<std::uint32_t>> inv;

  std::int64_t edge_count() const { return n_vertices * k; }
  std::int64_t slot(std::uint32_t v, int i) const {  // i is 1-based
    return static_cast<std::int64_t>(i - 1) * n_vertices + v;
  }
};

LabeledSchreierGraph build_schreier(const PermutationAction& action);

bool is_connected(const LabeledSchreierGraph& g);

// Canonical code of a rooted labeled r-ball. Discovery order is breadth
// first with neighbors scanned as s_1, s_1^-1, s_2, s_2^-1, ...; the code
// lists, per discovered vertex, the discovery index of each signed-generator
// neighbor, or -1 when the neighbor falls outside the ball. Labeled Schreier
// graphs are edge-deterministic, so two rooted balls are isomorphic as
// rooted labeled graphs iff their codes are equal.
struct BallCode {
  int radius = 0;
  int k = 0;
  std::vector<std::int32_t> code;

  std::int64_t vertex_count() const { return k ? static_cast<std::int64_t>(code.size()) / (2 * k) : 0; }
  bool operator==(const BallCode& rhs) const = default;
};

BallCode graph_ball_code(const LabeledSchreierGraph& g, std::uint32_t root, int radius);

struct CayleyBall {
  int radius = 0;
  std::vector<GroupElement> elements;  // discovery order; [0] is the identity
  std::vector<int> depth;
  BallCode code;
};

// Exact breadth-first ball of the Cayley graph, deduplicated by canonical
// encodings. Throws when the frontier exceeds kBallElementGuard elements.
CayleyBall cayley_ball(const GroupInstance& group, int radius);

// Vertices whose (R+1)-ball differs from the Cayley (R+1)-ball around the
// identity (the short-injectivity-radius set the rewiring must keep).
std::vector<std::uint32_t> exceptional_vertices(const LabeledSchreierGraph& g,
                                                const GroupInstance& group, int R);

// One line per vertex: "v i→w" triples in stable (v, i) order.
void dump_graph(const LabeledSchreierGraph& g, std::ostream& os);

}  // namespace rgcost
