#include "rgcost/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rgcost {

namespace {

struct SpanningTree {
  std::vector<std::int32_t> parent_step;  // signed generator, 0 at root
  std::vector<std::uint32_t> parent;
  std::vector<char> tree_slot;            // flat (i-1)*N + v
  std::int64_t reached = 0;
};

// Deterministic breadth-first tree over the listed edge subset (or all
// edges when `subset` is null): neighbors scanned in generator order,
// forward before backward.
SpanningTree spanning_tree(const LabeledSchreierGraph& g, const EdgeSubset* subset,
                           std::uint32_t base) {
  SpanningTree t;
  t.parent_step.assign(g.n_vertices, INT32_MIN);
  t.parent.assign(g.n_vertices, 0);
  t.tree_slot.assign(g.n_vertices * g.k, 0);
  std::vector<std::uint32_t> queue{base};
  t.parent_step[base] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (int i = 1; i <= g.k; ++i) {
      const std::uint32_t fw = g.fwd[i - 1][v];
      if ((!subset || subset->contains(v, i)) && t.parent_step[fw] == INT32_MIN) {
        t.parent_step[fw] = i;
        t.parent[fw] = v;
        t.tree_slot[g.slot(v, i)] = 1;
        queue.push_back(fw);
      }
      const std::uint32_t bw = g.inv[i - 1][v];
      if ((!subset || subset->contains(bw, i)) && t.parent_step[bw] == INT32_MIN) {
        t.parent_step[bw] = -i;
        t.parent[bw] = v;
        t.tree_slot[g.slot(bw, i)] = 1;
        queue.push_back(bw);
      }
    }
  }
  t.reached = static_cast<std::int64_t>(queue.size());
  return t;
}

Word tree_path(const SpanningTree& t, std::uint32_t v) {
  Word w;
  while (t.parent_step[v] != 0) {
    w.push_back(t.parent_step[v]);
    v = t.parent[v];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Word inverted(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

}  // namespace

SubgroupPresentation schreier_presentation(const GroupInstance& group,
                                           const PermutationAction& action, std::uint32_t base,
                                           bool with_witnesses) {
  const LabeledSchreierGraph g = build_schreier(action);
  if (base >= g.n_vertices) throw std::out_of_range("base vertex out of range");
  const SpanningTree tree = spanning_tree(g, nullptr, base);
  if (tree.reached != g.n_vertices)
    throw std::invalid_argument("schreier_presentation requires a transitive action");

  // number the non-tree slots in (vertex, generator) scan order
  std::vector<std::int32_t> symbol(g.n_vertices * g.k, 0);
  std::int32_t next = 0;
  for (std::int64_t v = 0; v < g.n_vertices; ++v)
    for (int i = 1; i <= g.k; ++i) {
      const std::int64_t s = g.slot(static_cast<std::uint32_t>(v), i);
      if (!tree.tree_slot[s]) symbol[s] = ++next;
    }

  SubgroupPresentation pres;
  pres.n_generators = next;
  if (pres.n_generators != g.n_vertices * (g.k - 1) + 1)
    throw std::logic_error("schreier generator count mismatch");
  pres.begin_relators();
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    for (const auto& rel : group.relators) {
      std::uint32_t cur = static_cast<std::uint32_t>(v);
      for (const auto letter : rel) {
        if (letter > 0) {
          const std::int64_t s = g.slot(cur, letter);
          if (symbol[s]) pres.push_letter(symbol[s]);
          cur = g.fwd[letter - 1][cur];
        } else {
          const std::uint32_t prev = g.inv[-letter - 1][cur];
          const std::int64_t s = g.slot(prev, -letter);
          if (symbol[s]) pres.push_letter(-symbol[s]);
          cur = prev;
        }
      }
      pres.end_relator();
    }
  }

  if (with_witnesses) {
    pres.generator_words.resize(pres.n_generators);
    for (std::int64_t v = 0; v < g.n_vertices; ++v)
      for (int i = 1; i <= g.k; ++i) {
        const std::int64_t s = g.slot(static_cast<std::uint32_t>(v), i);
        if (!symbol[s]) continue;
        Word w = tree_path(tree, static_cast<std::uint32_t>(v));
        w.push_back(i);
        const Word back = inverted(tree_path(tree, g.fwd[i - 1][v]));
        w.insert(w.end(), back.begin(), back.end());
        pres.generator_words[symbol[s] - 1] = std::move(w);
      }
  }
  return pres;
}

SubgroupPresentation rewired_complex(const LabeledSchreierGraph& g,
                                     const LabeledRewiring& labeling, const GroupInstance& group,
                                     bool with_witnesses) {
  const EdgeSubset& kept = labeling.kept;
  if (kept.n_vertices() != g.n_vertices || kept.k() != g.k)
    throw std::invalid_argument("labeling does not match the graph");
  const SpanningTree tree = spanning_tree(g, &kept, 0);
  if (tree.reached != g.n_vertices)
    throw std::invalid_argument("rewired_complex requires a connected kept edge set");

  std::vector<std::int32_t> symbol(g.n_vertices * g.k, 0);
  std::int32_t next = 0;
  for (std::int64_t v = 0; v < g.n_vertices; ++v)
    for (int i = 1; i <= g.k; ++i) {
      const std::int64_t s = g.slot(static_cast<std::uint32_t>(v), i);
      if (kept.contains(static_cast<std::uint32_t>(v), i) && !tree.tree_slot[s])
        symbol[s] = ++next;
    }
  if (next != kept.count() - (g.n_vertices - 1))
    throw std::logic_error("rewired generator count mismatch");

  // correction arrows become the trailing generators, one per distinct
  // (vertex, element) pair
  const CorrectionSet corrections = correction_set(g, labeling, group);
  std::map<std::pair<std::uint32_t, std::string>, std::int32_t> corr_symbol;
  for (const auto& entry : corrections.entries)
    corr_symbol.emplace(std::make_pair(entry.vertex, entry.element.encode()), ++next);

  // per omitted slot: its correction symbol (0 if the correction is trivial)
  std::vector<std::pair<std::int64_t, std::int32_t>> slot_corr;  // (slot, symbol)
  for (const auto& [slot, label] : labeling.omitted) {
    const std::uint32_t v = static_cast<std::uint32_t>(slot % g.n_vertices);
    const int i = static_cast<int>(slot / g.n_vertices) + 1;
    const GroupElement corr = group.generator(i).multiply(label.product.inverse());
    std::int32_t sym = 0;
    if (!corr.is_identity()) sym = corr_symbol.at(std::make_pair(v, corr.encode()));
    slot_corr.emplace_back(slot, sym);
  }
  std::sort(slot_corr.begin(), slot_corr.end());
  std::vector<std::int32_t> slot_corr_symbol(g.n_vertices * g.k, 0);
  for (const auto& [slot, sym] : slot_corr) slot_corr_symbol[slot] = sym;

  SubgroupPresentation pres;
  pres.n_generators = next;

  // appends the kept-walk image of the omitted edge at `from`, forward or
  // backward; returns the far endpoint
  auto emit_walk = [&](std::uint32_t from, int i, bool forward,
                       SubgroupPresentation& out) -> std::uint32_t {
    const std::int64_t s = g.slot(from, i);
    const auto& label = labeling.omitted.at(s);
    std::vector<std::int32_t> syms;
    std::uint32_t cur = from;
    for (const auto step : label.walk) {
      if (step > 0) {
        const std::int64_t ws = g.slot(cur, step);
        if (symbol[ws]) syms.push_back(symbol[ws]);
        cur = g.fwd[step - 1][cur];
      } else {
        const std::uint32_t prev = g.inv[-step - 1][cur];
        const std::int64_t ws = g.slot(prev, -step);
        if (symbol[ws]) syms.push_back(-symbol[ws]);
        cur = prev;
      }
    }
    const std::int32_t corr = slot_corr_symbol[s];
    if (forward) {
      if (corr) out.push_letter(corr);
      for (const auto sym : syms) out.push_letter(sym);
    } else {
      for (auto it = syms.rbegin(); it != syms.rend(); ++it) out.push_letter(-*it);
      if (corr) out.push_letter(-corr);
    }
    return cur;
  };

  pres.begin_relators();
  // type I: every group relator lifted at every vertex
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    for (const auto& rel : group.relators) {
      std::uint32_t cur = static_cast<std::uint32_t>(v);
      for (const auto letter : rel) {
        if (letter > 0) {
          if (kept.contains(cur, letter)) {
            const std::int64_t s = g.slot(cur, letter);
            if (symbol[s]) pres.push_letter(symbol[s]);
          } else {
            emit_walk(cur, letter, true, pres);
          }
          cur = g.fwd[letter - 1][cur];
        } else {
          const std::uint32_t prev = g.inv[-letter - 1][cur];
          if (kept.contains(prev, -letter)) {
            const std::int64_t s = g.slot(prev, -letter);
            if (symbol[s]) pres.push_letter(-symbol[s]);
          } else {
            emit_walk(prev, -letter, false, pres);
          }
          cur = prev;
        }
      }
      pres.end_relator();
    }
  }
  // type II: walk-consistency disc per omitted edge
  for (const auto& [slot, sym] : slot_corr) {
    (void)sym;
    const std::uint32_t v = static_cast<std::uint32_t>(slot % g.n_vertices);
    const int i = static_cast<int>(slot / g.n_vertices) + 1;
    emit_walk(v, i, true, pres);
    emit_walk(v, i, false, pres);
    pres.end_relator();
  }

  if (with_witnesses) {
    pres.generator_words.resize(pres.n_generators);
    for (std::int64_t v = 0; v < g.n_vertices; ++v)
      for (int i = 1; i <= g.k; ++i) {
        const std::int64_t s = g.slot(static_cast<std::uint32_t>(v), i);
        if (!symbol[s]) continue;
        Word w = tree_path(tree, static_cast<std::uint32_t>(v));
        w.push_back(i);
        const Word back = inverted(tree_path(tree, g.fwd[i - 1][v]));
        w.insert(w.end(), back.begin(), back.end());
        pres.generator_words[symbol[s] - 1] = std::move(w);
      }
    for (const auto& entry : corrections.entries) {
      const std::int32_t sym = corr_symbol.at(std::make_pair(entry.vertex, entry.element.encode()));
      Word w = tree_path(tree, entry.vertex);
      w.insert(w.end(), entry.witness.begin(), entry.witness.end());
      const Word back = inverted(tree_path(tree, entry.vertex));
      w.insert(w.end(), back.begin(), back.end());
      pres.generator_words[sym - 1] = std::move(w);
    }
  }
  return pres;
}

SparseIntegerMatrix abelianized_matrix(const SubgroupPresentation& p) {
  SparseIntegerMatrix m;
  m.rows = p.relator_count();
  m.cols = p.n_generators;
  std::vector<std::pair<std::int32_t, std::int64_t>> counts;
  for (std::int64_t r = 0; r < m.rows; ++r) {
    const auto [begin, end] = p.relator(r);
    counts.clear();
    for (const auto* l = begin; l != end; ++l)
      counts.emplace_back(std::abs(*l) - 1, *l > 0 ? 1 : -1);
    std::sort(counts.begin(), counts.end());
    for (std::size_t j = 0; j < counts.size();) {
      std::int64_t sum = 0;
      const std::int32_t col = counts[j].first;
      for (; j < counts.size() && counts[j].first == col; ++j) sum += counts[j].second;
      if (sum != 0) m.add(static_cast<std::int32_t>(r), col, BigInt(static_cast<long>(sum)));
    }
  }
  return m;
}

}  // namespace rgcost
