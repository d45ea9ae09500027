// The explicit rewiring of a labeled Schreier graph: per-generator cycle
// decompositions, maximal R-separated position sets, the kept edge set, its
// density and its exact bi-Lipschitz distance from the full graph.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgcost/numeric.hpp"
#include "rgcost/schreier.hpp"

namespace rgcost {

// Subset of the slots {(v, i)} of a fixed labeled Schreier graph.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(std::int64_t n_vertices, int k)
      : n_vertices_(n_vertices), k_(k), bits_(n_vertices * k, 0) {}

  static EdgeSubset full(const LabeledSchreierGraph& g);

  bool contains(std::uint32_t v, int i) const {  // i is 1-based
    return bits_[static_cast<std::int64_t>(i - 1) * n_vertices_ + v] != 0;
  }
  void insert(std::uint32_t v, int i) {
    auto& b = bits_[static_cast<std::int64_t>(i - 1) * n_vertices_ + v];
    if (!b) {
      b = 1;
      ++count_;
    }
  }
  std::int64_t count() const { return count_; }
  std::int64_t n_vertices() const { return n_vertices_; }
  int k() const { return k_; }

 private:
  std::int64_t n_vertices_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> bits_;
  std::int64_t count_ = 0;
};

struct CycleDecomposition {
  int generator = 0;  // 1-based
  std::vector<std::vector<std::uint32_t>> cycles;
};

// Cycles of the s_i permutation; each cycle starts at its minimum vertex and
// cycles are listed in increasing order of their starting vertex.
CycleDecomposition cycle_decomposition(const LabeledSchreierGraph& g, int i);

// Positions {0, R, 2R, ...} along a cycle of length L: floor(L/R) of them
// (at least one). R-separated in the cycle metric and covering with radius R.
std::vector<std::int64_t> separated_positions(std::int64_t cycle_length, std::int64_t R);

// d_L(G, H) for H a sub-edge-set of G: the maximum over edges of either
// graph of the endpoint distance in the other. nullopt when some pair is
// disconnected in H.
std::optional<std::int64_t> bilipschitz_distance(const LabeledSchreierGraph& g,
                                                 const EdgeSubset& h);

Rat edge_density(std::int64_t edge_count, std::int64_t n_vertices);

struct RewiringResult {
  std::int64_t R = 0;
  EdgeSubset kept;                                     // H
  std::vector<std::vector<std::uint32_t>> separated;   // X_i per generator, X_1 = all
  std::vector<std::uint32_t> bad_vertices;             // X_bad, sorted
  std::int64_t edges_G = 0;
  std::int64_t edges_H = 0;
  Rat density;
  Rat bad_fraction;
  bool degenerate = false;                             // X_bad is everything
  std::optional<std::int64_t> distortion;              // measured d_L
  BigInt distortion_budget;                            // (2R+1)^k
};

// Keeps all s_1-edges, the s_i-edges at a maximal R-separated subset of the
// s_{i-1}-cycles for i >= 2, and every edge at an exceptional vertex.
// Requires an even R >= 2, a connected graph and a valid right-angled
// certificate for the group.
RewiringResult build_rewiring(const LabeledSchreierGraph& g, const GroupInstance& group,
                              std::int64_t R);

}  // namespace rgcost
