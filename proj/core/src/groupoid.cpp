#include "rgcost/groupoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rgcost {

namespace {

// Parent links of a breadth-first tree in the kept subgraph rooted at
// `source`: the signed generator used to reach each vertex, 0 at the root,
// INT32_MIN where unreached.
void kept_bfs_tree(const LabeledSchreierGraph& g, const EdgeSubset& kept, std::uint32_t source,
                   std::vector<std::int32_t>& parent_step, std::vector<std::uint32_t>& parent,
                   std::vector<std::uint32_t>& queue) {
  parent_step.assign(g.n_vertices, INT32_MIN);
  parent.assign(g.n_vertices, 0);
  queue.clear();
  queue.push_back(source);
  parent_step[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (int i = 1; i <= g.k; ++i) {
      const std::uint32_t fw = g.fwd[i - 1][v];
      if (kept.contains(v, i) && parent_step[fw] == INT32_MIN) {
        parent_step[fw] = i;
        parent[fw] = v;
        queue.push_back(fw);
      }
      const std::uint32_t bw = g.inv[i - 1][v];
      if (kept.contains(bw, i) && parent_step[bw] == INT32_MIN) {
        parent_step[bw] = -i;
        parent[bw] = v;
        queue.push_back(bw);
      }
    }
  }
}

Word path_from_tree(const std::vector<std::int32_t>& parent_step,
                    const std::vector<std::uint32_t>& parent, std::uint32_t target) {
  Word w;
  std::uint32_t v = target;
  while (parent_step[v] != 0) {
    w.push_back(parent_step[v]);
    v = parent[v];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

LabeledRewiring label_rewiring(const LabeledSchreierGraph& g, const EdgeSubset& kept,
                               const GroupInstance& group) {
  if (kept.n_vertices() != g.n_vertices || kept.k() != g.k)
    throw std::invalid_argument("edge subset does not match the graph");
  LabeledRewiring lab;
  lab.kept = kept;

  std::vector<std::int32_t> parent_step;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> queue;
  bool connectivity_checked = false;

  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    bool any_omitted = false;
    for (int i = 1; i <= g.k; ++i)
      if (!kept.contains(static_cast<std::uint32_t>(v), i)) {
        any_omitted = true;
        break;
      }
    if (!any_omitted) continue;
    kept_bfs_tree(g, kept, static_cast<std::uint32_t>(v), parent_step, parent, queue);
    if (!connectivity_checked) {
      if (static_cast<std::int64_t>(queue.size()) != g.n_vertices)
        throw std::invalid_argument("label_rewiring requires a connected kept edge set");
      connectivity_checked = true;
    }
    for (int i = 1; i <= g.k; ++i) {
      if (kept.contains(static_cast<std::uint32_t>(v), i)) continue;
      const std::uint32_t target = g.fwd[i - 1][v];
      OmittedEdgeLabel label;
      label.walk = path_from_tree(parent_step, parent, target);
      label.product = evaluate_word(group, label.walk);
      lab.max_walk_length =
          std::max(lab.max_walk_length, static_cast<std::int64_t>(label.walk.size()));
      lab.omitted.emplace(g.slot(static_cast<std::uint32_t>(v), i), std::move(label));
    }
  }
  return lab;
}

CorrectionSet correction_set(const LabeledSchreierGraph& g, const LabeledRewiring& labeling,
                             const GroupInstance& group) {
  CorrectionSet out;
  out.n_vertices = g.n_vertices;
  std::map<std::pair<std::uint32_t, std::string>, CorrectionEntry> dedup;
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    for (int i = 1; i <= g.k; ++i) {
      const auto it = labeling.omitted.find(g.slot(static_cast<std::uint32_t>(v), i));
      if (it == labeling.omitted.end()) continue;
      const auto& label = it->second;
      // internal consistency: the stored product must match the stored walk
      if (!(evaluate_word(group, label.walk) == label.product))
        throw std::runtime_error("correction_set: walk product mismatch (labeling bug)");
      std::uint32_t cur = static_cast<std::uint32_t>(v);
      for (const auto step : label.walk)
        cur = step > 0 ? g.fwd[step - 1][cur] : g.inv[-step - 1][cur];
      if (cur != g.fwd[i - 1][v])
        throw std::runtime_error("correction_set: walk endpoint mismatch (labeling bug)");

      const GroupElement corr =
          group.generator(i).multiply(label.product.inverse());
      if (corr.is_identity()) continue;
      CorrectionEntry entry;
      entry.vertex = static_cast<std::uint32_t>(v);
      entry.element = corr;
      entry.witness.push_back(i);
      for (auto jt = label.walk.rbegin(); jt != label.walk.rend(); ++jt)
        entry.witness.push_back(-*jt);
      dedup.emplace(std::make_pair(entry.vertex, corr.encode()), std::move(entry));
    }
  }
  for (auto& [key, entry] : dedup) out.entries.push_back(std::move(entry));
  out.measure = make_rat(static_cast<std::int64_t>(out.entries.size()), g.n_vertices);
  return out;
}

RankUpperBound rank_upper_bound(std::int64_t edges_H, std::int64_t n_vertices,
                                const CorrectionSet& correction,
                                const std::optional<Rat>& gamma) {
  if (n_vertices < 1) throw std::invalid_argument("rank_upper_bound requires N >= 1");
  RankUpperBound out;
  out.groupoid =
      make_rat(edges_H + static_cast<std::int64_t>(correction.entries.size()), n_vertices) - 1;
  if (gamma) out.fixed_point_sum = make_rat(edges_H, n_vertices) - 1 + *gamma;
  return out;
}

std::int64_t abelian_rank_lower_bound(const SnfResult& snf) {
  std::int64_t nontrivial = 0;
  for (const auto& f : snf.factors)
    if (f > 1) ++nontrivial;
  return snf.betti + nontrivial;
}

}  // namespace rgcost
