#include "rgcost/schreier.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rgcost {

LabeledSchreierGraph build_schreier(const PermutationAction& action) {
  LabeledSchreierGraph g;
  g.n_vertices = action.n_vertices;
  g.k = action.generator_count();
  g.fwd = action.fwd;
  g.inv = action.inv;
  for (int i = 0; i < g.k; ++i)
    if (static_cast<std::int64_t>(g.fwd[i].size()) != g.n_vertices ||
        static_cast<std::int64_t>(g.inv[i].size()) != g.n_vertices)
      throw std::invalid_argument("permutation arrays do not match the vertex count");
  return g;
}

bool is_connected(const LabeledSchreierGraph& g) {
  if (g.n_vertices == 0) return true;
  std::vector<char> seen(g.n_vertices, 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (int i = 0; i < g.k; ++i) {
      for (const std::uint32_t w : {g.fwd[i][v], g.inv[i][v]}) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return static_cast<std::int64_t>(queue.size()) == g.n_vertices;
}

namespace {

// Reusable scratch for repeated ball scans over one graph; discovery indices
// are reset in O(1) via stamping.
struct BallScanner {
  std::vector<std::int64_t> stamp;
  std::vector<std::int32_t> index;
  std::vector<std::uint32_t> order;
  std::vector<int> depth;
  std::int64_t current_stamp = 0;

  explicit BallScanner(std::int64_t n) : stamp(n, -1), index(n, 0) {}

  // Emits the code of the radius-r ball rooted at `root` entry by entry.
  // When `reference` is non-null, aborts early on the first mismatch and
  // returns false; otherwise fills `out`.
  bool scan(const LabeledSchreierGraph& g, std::uint32_t root, int radius,
            const std::vector<std::int32_t>* reference, std::vector<std::int32_t>* out) {
    ++current_stamp;
    order.clear();
    depth.clear();
    std::size_t emitted = 0;
    auto emit = [&](std::int32_t value) {
      if (reference) {
        if (emitted >= reference->size() || (*reference)[emitted] != value) return false;
      } else {
        out->push_back(value);
      }
      ++emitted;
      return true;
    };
    auto discover = [&](std::uint32_t v, int d) {
      stamp[v] = current_stamp;
      index[v] = static_cast<std::int32_t>(order.size());
      order.push_back(v);
      depth.push_back(d);
    };
    discover(root, 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::uint32_t v = order[head];
      const int d = depth[head];
      for (int i = 0; i < g.k; ++i) {
        for (const std::uint32_t w : {g.fwd[i][v], g.inv[i][v]}) {
          std::int32_t value;
          if (stamp[w] == current_stamp) {
            value = index[w];
          } else if (d < radius) {
            discover(w, d + 1);
            value = index[w];
          } else {
            value = -1;
          }
          if (!emit(value)) return false;
        }
      }
    }
    return !reference || emitted == reference->size();
  }
};

}  // namespace

BallCode graph_ball_code(const LabeledSchreierGraph& g, std::uint32_t root, int radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  BallScanner scanner(g.n_vertices);
  BallCode code;
  code.radius = radius;
  code.k = g.k;
  scanner.scan(g, root, radius, nullptr, &code.code);
  return code;
}

CayleyBall cayley_ball(const GroupInstance& group, int radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const int k = group.generator_count();
  CayleyBall ball;
  ball.radius = radius;
  ball.code.radius = radius;
  ball.code.k = k;

  std::unordered_map<std::string, std::int32_t> index_of;
  ball.elements.push_back(group.identity());
  ball.depth.push_back(0);
  index_of.emplace(group.identity().encode(), 0);

  std::vector<GroupElement> signed_gens;
  for (int i = 1; i <= k; ++i) {
    signed_gens.push_back(group.generator(i));
    signed_gens.push_back(group.generator(i).inverse());
  }

  for (std::size_t head = 0; head < ball.elements.size(); ++head) {
    const int d = ball.depth[head];
    const GroupElement cur = ball.elements[head];
    for (int s = 0; s < 2 * k; ++s) {
      const GroupElement next = cur.multiply(signed_gens[s]);
      const std::string enc = next.encode();
      const auto it = index_of.find(enc);
      std::int32_t value;
      if (it != index_of.end()) {
        value = it->second;
      } else if (d < radius) {
        value = static_cast<std::int32_t>(ball.elements.size());
        if (value >= kBallElementGuard)
          throw std::runtime_error("cayley_ball: frontier guard of 10^7 elements exceeded");
        index_of.emplace(enc, value);
        ball.elements.push_back(next);
        ball.depth.push_back(d + 1);
      } else {
        value = -1;
      }
      ball.code.code.push_back(value);
    }
  }
  return ball;
}

std::vector<std::uint32_t> exceptional_vertices(const LabeledSchreierGraph& g,
                                                const GroupInstance& group, int R) {
  if (R < 0) throw std::invalid_argument("exceptional_vertices requires R >= 0");
  if (group.generator_count() != g.k)
    throw std::invalid_argument("graph and group have different generator counts");
  const BallCode reference = cayley_ball(group, R + 1).code;
  std::vector<std::uint32_t> bad;
  BallScanner scanner(g.n_vertices);
  for (std::int64_t v = 0; v < g.n_vertices; ++v)
    if (!scanner.scan(g, static_cast<std::uint32_t>(v), R + 1, &reference.code, nullptr))
      bad.push_back(static_cast<std::uint32_t>(v));
  return bad;
}

void dump_graph(const LabeledSchreierGraph& g, std::ostream& os) {
  for (std::int64_t v = 0; v < g.n_vertices; ++v) {
    os << v;
    for (int i = 1; i <= g.k; ++i) os << ' ' << i << "→" << g.fwd[i - 1][v];
    os << '\n';
  }
}

}  // namespace rgcost
