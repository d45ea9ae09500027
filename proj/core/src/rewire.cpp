#include "rgcost/rewire.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rgcost {

EdgeSubset EdgeSubset::full(const LabeledSchreierGraph& g) {
  EdgeSubset s(g.n_vertices, g.k);
  for (int i = 1; i <= g.k; ++i)
    for (std::int64_t v = 0; v < g.n_vertices; ++v) s.insert(static_cast<std::uint32_t>(v), i);
  return s;
}

CycleDecomposition cycle_decomposition(const LabeledSchreierGraph& g, int i) {
  if (i < 1 || i > g.k) throw std::out_of_range("generator index out of range");
  CycleDecomposition dec;
  dec.generator = i;
  std::vector<char> seen(g.n_vertices, 0);
  for (std::int64_t start = 0; start < g.n_vertices; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cycle;
    std::uint32_t v = static_cast<std::uint32_t>(start);
    do {
      seen[v] = 1;
      cycle.push_back(v);
      v = g.fwd[i - 1][v];
    } while (v != start);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

std::vector<std::int64_t> separated_positions(std::int64_t cycle_length, std::int64_t R) {
  if (cycle_length < 1 || R < 1) throw std::invalid_argument("separated_positions: L, R >= 1");
  const std::int64_t m = std::max<std::int64_t>(1, cycle_length / R);
  std::vector<std::int64_t> positions(m);
  for (std::int64_t j = 0; j < m; ++j) positions[j] = j * R;
  return positions;
}

namespace {

// Breadth-first distances within the kept subgraph from `source` to the
// vertices listed in `targets`; -1 when unreachable. `dist` must be all -1
// on entry and is restored before returning.
std::vector<std::int64_t> kept_distances(const LabeledSchreierGraph& g, const EdgeSubset& h,
                                         std::uint32_t source,
                                         const std::vector<std::uint32_t>& targets,
                                         std::vector<std::int64_t>& dist,
                                         std::vector<std::uint32_t>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::size_t found = 0;
  for (const auto t : targets)
    if (dist[t] >= 0) ++found;
  auto visit = [&](std::uint32_t from, std::uint32_t w) {
    if (dist[w] >= 0) return;
    dist[w] = dist[from] + 1;
    queue.push_back(w);
    for (const auto t : targets)
      if (t == w) ++found;
  };
  for (std::size_t head = 0; head < queue.size() && found < targets.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (int i = 1; i <= g.k; ++i) {
      if (h.contains(v, i)) visit(v, g.fwd[i - 1][v]);             // along (v, i)
      const std::uint32_t bw = g.inv[i - 1][v];
      if (h.contains(bw, i)) visit(v, bw);                         // along (bw, i) backwards
    }
  }
  std::vector<std::int64_t> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) out[j] = dist[targets[j]];
  for (const auto v : queue) dist[v] = -1;
  return out;
}

}  // namespace

std::optional<std::int64_t> bilipschitz_distance(const LabeledSchreierGraph& g,
                                                 const EdgeSubset& h) {
  if (h.n_vertices() != g.n_vertices || h.k() != g.k)
    throw std::invalid_argument("edge subset does not match the graph");
  std::int64_t best = 0;
  // H-edges are G-edges, so that direction contributes their G-distance,
  // 1 for any non-loop.
  for (int i = 1; i <= g.k && best == 0; ++i)
    for (std::int64_t v = 0; v < g.n_vertices && best == 0; ++v)
      if (h.contains(static_cast<std::uint32_t>(v), i) &&
          g.fwd[i - 1][v] != static_cast<std::uint32_t>(v))
        best = 1;

  std::vector<std::int64_t> dist(g.n_vertices, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.n_vertices);
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    std::vector<std::uint32_t> targets;
    for (int i = 1; i <= g.k; ++i) {
      const std::uint32_t w = g.fwd[i - 1][v];
      if (w == static_cast<std::uint32_t>(v)) continue;  // loops have distance 0
      if (h.contains(static_cast<std::uint32_t>(v), i)) {
        best = std::max<std::int64_t>(best, 1);
        continue;
      }
      targets.push_back(w);
    }
    if (targets.empty()) continue;
    const auto ds = kept_distances(g, h, static_cast<std::uint32_t>(v), targets, dist, queue);
    for (const auto d : ds) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Rat edge_density(std::int64_t edge_count, std::int64_t n_vertices) {
  if (n_vertices < 1) throw std::invalid_argument("edge_density requires N >= 1");
  return make_rat(edge_count, n_vertices);
}

RewiringResult build_rewiring(const LabeledSchreierGraph& g, const GroupInstance& group,
                              std::int64_t R) {
  if (R < 2 || R % 2 != 0) throw std::invalid_argument("build_rewiring requires an even R >= 2");
  if (!is_connected(g)) throw std::invalid_argument("build_rewiring requires a connected graph");
  const auto cert = verify_right_angled(group);
  if (!cert.ok())
    throw std::invalid_argument(
        "build_rewiring: right-angled certificate failed (pair " +
        std::to_string(cert.first_failing_pair) + ", generator " +
        std::to_string(cert.first_failing_generator) + ")");

  RewiringResult res;
  res.R = R;
  res.edges_G = g.edge_count();
  res.kept = EdgeSubset(g.n_vertices, g.k);
  res.separated.resize(g.k);

  res.separated[0].resize(g.n_vertices);
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    res.separated[0][v] = static_cast<std::uint32_t>(v);
    res.kept.insert(static_cast<std::uint32_t>(v), 1);
  }
  for (int i = 2; i <= g.k; ++i) {
    const auto cycles = cycle_decomposition(g, i - 1);
    for (const auto& cycle : cycles.cycles) {
      for (const auto pos : separated_positions(static_cast<std::int64_t>(cycle.size()), R)) {
        res.separated[i - 1].push_back(cycle[pos]);
        res.kept.insert(cycle[pos], i);
      }
    }
    std::sort(res.separated[i - 1].begin(), res.separated[i - 1].end());
  }

  res.bad_vertices = exceptional_vertices(g, group, static_cast<int>(R));
  for (const auto v : res.bad_vertices)
    for (int i = 1; i <= g.k; ++i) res.kept.insert(v, i);

  res.edges_H = res.kept.count();
  res.density = edge_density(res.edges_H, g.n_vertices);
  res.bad_fraction = make_rat(static_cast<std::int64_t>(res.bad_vertices.size()), g.n_vertices);
  res.degenerate = static_cast<std::int64_t>(res.bad_vertices.size()) == g.n_vertices;
  res.distortion = bilipschitz_distance(g, res.kept);
  res.distortion_budget = bigint_pow(BigInt(2 * R + 1), static_cast<unsigned long>(g.k));
  return res;
}

}  // namespace rgcost
