// Turning a rewiring into a generating set of the coset-action groupoid:
// group labels for kept edges, shortest walks for omitted ones, the
// correction set of stabilizer elements, and the resulting rank bounds.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rgcost/rewire.hpp"
#include "rgcost/snf.hpp"

namespace rgcost {

// Walks are words of signed 1-based generator indices traversed inside the
// kept edge set; each omitted edge (x, i) stores a shortest walk from x to
// x.s_i together with its exact group-element product.
struct OmittedEdgeLabel {
  Word walk;
  GroupElement product;
};

struct LabeledRewiring {
  EdgeSubset kept;
  std::unordered_map<std::int64_t, OmittedEdgeLabel> omitted;  // key: graph slot id
  std::int64_t max_walk_length = 0;
};

// Breadth-first shortest walks with a deterministic tie-break: from each
// vertex, neighbors are scanned in generator order, forward edge before
// backward, and the first discovery wins. Requires the kept set connected.
LabeledRewiring label_rewiring(const LabeledSchreierGraph& g, const EdgeSubset& kept,
                               const GroupInstance& group);

struct CorrectionEntry {
  std::uint32_t vertex = 0;
  GroupElement element;  // g(e) = s_i . (walk product)^-1, not the identity
  Word witness;          // word of length <= d_L + 1 evaluating to the element
};

struct CorrectionSet {
  std::vector<CorrectionEntry> entries;  // deduplicated, sorted by (vertex, encoding)
  std::int64_t n_vertices = 0;
  Rat measure;                           // |I| / N
};

CorrectionSet correction_set(const LabeledSchreierGraph& g, const LabeledRewiring& labeling,
                             const GroupInstance& group);

struct RankUpperBound {
  Rat groupoid;                        // (|H| + |I|)/N - 1
  std::optional<Rat> fixed_point_sum;  // |H|/N - 1 + gamma, when gamma is supplied
};

RankUpperBound rank_upper_bound(std::int64_t edges_H, std::int64_t n_vertices,
                                const CorrectionSet& correction,
                                const std::optional<Rat>& gamma = std::nullopt);

// d(H) >= betti + #{invariant factors > 1} from the abelianization.
std::int64_t abelian_rank_lower_bound(const SnfResult& snf);

}  // namespace rgcost
