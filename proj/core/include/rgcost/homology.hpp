// First homology of finite-index subgroups by two independent routes: the
// Schreier presentation of the subgroup, and the presentation read off the
// rewired complex (kept edges plus correction arrows, with lifted relators
// rewritten through the stored walks).
#pragma once

#include <cstdint>
#include <vector>

#include "rgcost/groupoid.hpp"
#include "rgcost/schreier.hpp"
#include "rgcost/snf.hpp"

namespace rgcost {

struct SubgroupPresentation {
  std::int64_t n_generators = 0;
  std::vector<std::int32_t> letters;   // relators, concatenated
  std::vector<std::int64_t> offsets;   // relator i occupies [offsets[i], offsets[i+1])
  std::int64_t max_relator_length = 0;
  // Words over the ambient group's generators witnessing each presentation
  // generator (filled only on request; used by validity checks).
  std::vector<Word> generator_words;

  std::int64_t relator_count() const {
    return offsets.empty() ? 0 : static_cast<std::int64_t>(offsets.size()) - 1;
  }
  std::pair<const std::int32_t*, const std::int32_t*> relator(std::int64_t i) const {
    return {letters.data() + offsets[i], letters.data() + offsets[i + 1]};
  }
  void begin_relators() { offsets.assign(1, 0); }
  void push_letter(std::int32_t l) { letters.push_back(l); }
  void end_relator() {
    offsets.push_back(static_cast<std::int64_t>(letters.size()));
    max_relator_length =
        std::max(max_relator_length, offsets.back() - offsets[offsets.size() - 2]);
  }
};

// Reidemeister-Schreier presentation of the point stabilizer: breadth-first
// spanning tree from `base`, one generator per non-tree edge (N(d-1)+1 of
// them), one relator per (vertex, group relator) pair, each of length at
// most the relator's length. Requires a transitive action.
SubgroupPresentation schreier_presentation(const GroupInstance& group,
                                           const PermutationAction& action,
                                           std::uint32_t base = 0,
                                           bool with_witnesses = false);

// Presentation from the rewired complex: generators are the non-tree kept
// edges followed by the deduplicated correction arrows; type I discs are the
// lifted relators rewritten through the stored walks (correction arrow
// first), type II discs are the walk-consistency discs, one per omitted
// edge. Requires the kept set connected. Spanning tree is rooted at 0.
SubgroupPresentation rewired_complex(const LabeledSchreierGraph& g,
                                     const LabeledRewiring& labeling,
                                     const GroupInstance& group,
                                     bool with_witnesses = false);

// One row per relator, one column per generator, entry = signed letter count.
SparseIntegerMatrix abelianized_matrix(const SubgroupPresentation& p);

}  // namespace rgcost
