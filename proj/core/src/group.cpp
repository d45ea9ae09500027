#include "rgcost/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace rgcost {

namespace {

constexpr std::int64_t kPrincipalOrderGuard = kBallElementGuard;

bool is_allowed_prime(std::int64_t p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

std::int64_t sl3_order(std::int64_t q) {
  return q * q * q * (q * q * q - 1) * (q * q - 1);
}

Word commutator_word(int i, int j) { return Word{i, j, -i, -j}; }

std::int64_t mod_pos(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// --- torus -----------------------------------------------------------------

std::uint32_t torus_index(const std::vector<std::int64_t>& coords, std::int64_t n) {
  std::uint64_t idx = 0;
  for (std::size_t j = coords.size(); j-- > 0;) idx = idx * n + static_cast<std::uint64_t>(coords[j]);
  return static_cast<std::uint32_t>(idx);
}

PermutationAction torus_action(int k, std::int64_t n) {
  std::int64_t vertex_count = 1;
  for (int j = 0; j < k; ++j) {
    vertex_count *= n;
    if (vertex_count > kBallElementGuard)
      throw std::invalid_argument("torus action too large: n^k exceeds the vertex guard");
  }
  PermutationAction act;
  act.n_vertices = vertex_count;
  act.size_param = n;
  act.label = "n=" + std::to_string(n);
  act.fwd.assign(k, std::vector<std::uint32_t>(vertex_count));
  act.inv.assign(k, std::vector<std::uint32_t>(vertex_count));
  std::vector<std::int64_t> coords(k, 0);
  for (std::int64_t v = 0; v < vertex_count; ++v) {
    for (int i = 0; i < k; ++i) {
      const std::int64_t c = coords[i];
      std::int64_t stride = 1;
      for (int j = 0; j < i; ++j) stride *= n;
      act.fwd[i][v] = static_cast<std::uint32_t>(v - c * stride + ((c + 1) % n) * stride);
      act.inv[i][v] = static_cast<std::uint32_t>(v - c * stride + mod_pos(c - 1, n) * stride);
    }
    for (int j = 0; j < k; ++j) {
      if (++coords[j] < n) break;
      coords[j] = 0;
    }
  }
  act.act_element = [k, n](const GroupElement& g, std::uint32_t v) {
    const auto& shift = g.torus().shift;
    std::vector<std::int64_t> c(k);
    std::uint64_t rem = v;
    for (int j = 0; j < k; ++j) {
      c[j] = mod_pos(static_cast<std::int64_t>(rem % n) + shift[j], n);
      rem /= n;
    }
    return torus_index(c, n);
  };
  return act;
}

// --- heisenberg --------------------------------------------------------------

struct HeisTriple {
  std::int64_t a, b, c;
};

HeisTriple heis_mod_mult(const HeisTriple& x, const HeisTriple& y, std::int64_t n) {
  return HeisTriple{(x.a + y.a) % n, (x.b + y.b) % n, (x.c + y.c + x.a * y.b) % n};
}

std::uint32_t heis_index(const HeisTriple& t, std::int64_t n) {
  return static_cast<std::uint32_t>(t.a + n * (t.b + n * t.c));
}

HeisTriple heis_unindex(std::uint32_t v, std::int64_t n) {
  return HeisTriple{static_cast<std::int64_t>(v % n), static_cast<std::int64_t>((v / n) % n),
                    static_cast<std::int64_t>(v / (n * n))};
}

PermutationAction heisenberg_action(std::int64_t n) {
  const std::int64_t vertex_count = n * n * n;
  if (vertex_count > kBallElementGuard)
    throw std::invalid_argument("heisenberg action too large: n^3 exceeds the vertex guard");
  PermutationAction act;
  act.n_vertices = vertex_count;
  act.size_param = n;
  act.label = "n=" + std::to_string(n);
  // chain order x, z, y
  const HeisTriple gens[3] = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  act.fwd.assign(3, std::vector<std::uint32_t>(vertex_count));
  act.inv.assign(3, std::vector<std::uint32_t>(vertex_count));
  for (std::int64_t v = 0; v < vertex_count; ++v) {
    const HeisTriple t = heis_unindex(static_cast<std::uint32_t>(v), n);
    for (int i = 0; i < 3; ++i)
      act.fwd[i][v] = heis_index(heis_mod_mult(t, gens[i], n), n);
  }
  for (int i = 0; i < 3; ++i)
    for (std::int64_t v = 0; v < vertex_count; ++v) act.inv[i][act.fwd[i][v]] = static_cast<std::uint32_t>(v);
  act.act_element = [n](const GroupElement& g, std::uint32_t v) {
    const auto& h = g.heis();
    const HeisTriple gm{mod_pos(h.a, n), mod_pos(h.b, n), mod_pos(h.c, n)};
    return heis_index(heis_mod_mult(heis_unindex(v, n), gm, n), n);
  };
  return act;
}

// --- SL(3,Z) families --------------------------------------------------------

using ModMat = std::array<std::int64_t, 9>;

ModMat mod_mat_mult(const ModMat& x, const ModMat& y, std::int64_t p) {
  ModMat out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t acc = 0;
      for (int l = 0; l < 3; ++l) acc += x[3 * i + l] * y[3 * l + j];
      out[3 * i + j] = acc % p;
    }
  return out;
}

std::uint64_t mod_mat_key(const ModMat& m) {
  std::uint64_t key = 0;
  for (int i = 0; i < 9; ++i) key |= static_cast<std::uint64_t>(m[i]) << (4 * i);
  return key;
}

ModMat reduce_mat(const MatElem& e, std::int64_t p) {
  ModMat out{};
  for (int i = 0; i < 9; ++i)
    out[i] = static_cast<std::int64_t>(mpz_fdiv_ui(e.m[i].get_mpz_t(), static_cast<unsigned long>(p)));
  return out;
}

std::vector<MatElem> sl3_chain_generators() {
  // chain order (1,2),(1,3),(2,3),(2,1),(3,1),(3,2); consecutive pairs commute
  return {mat_elementary(1, 2), mat_elementary(1, 3), mat_elementary(2, 3),
          mat_elementary(2, 1), mat_elementary(3, 1), mat_elementary(3, 2)};
}

PermutationAction sl3_principal_action(std::int64_t p) {
  const std::int64_t order = sl3_order(p);
  if (order > kPrincipalOrderGuard)
    throw std::invalid_argument("sl3z-principal: |SL(3," + std::to_string(p) +
                                ")| exceeds the vertex guard");
  const auto gens = sl3_chain_generators();
  std::vector<ModMat> mod_gens(6);
  for (int i = 0; i < 6; ++i) mod_gens[i] = reduce_mat(gens[i], p);

  auto mats = std::make_shared<std::vector<ModMat>>();
  auto index_of = std::make_shared<std::unordered_map<std::uint64_t, std::uint32_t>>();
  mats->reserve(order);
  index_of->reserve(order * 2);

  ModMat id{};
  for (int i = 0; i < 3; ++i) id[4 * i] = 1;
  mats->push_back(id);
  (*index_of)[mod_mat_key(id)] = 0;

  PermutationAction act;
  act.size_param = p;
  act.label = "p=" + std::to_string(p);
  act.fwd.assign(6, {});
  act.inv.assign(6, {});
  for (int i = 0; i < 6; ++i) act.fwd[i].reserve(order);

  // breadth-first closure of the identity under right multiplication
  for (std::size_t v = 0; v < mats->size(); ++v) {
    const ModMat cur = (*mats)[v];
    for (int i = 0; i < 6; ++i) {
      const ModMat next = mod_mat_mult(cur, mod_gens[i], p);
      const std::uint64_t key = mod_mat_key(next);
      auto [it, inserted] = index_of->emplace(key, static_cast<std::uint32_t>(mats->size()));
      if (inserted) mats->push_back(next);
      act.fwd[i].push_back(it->second);
    }
  }
  if (static_cast<std::int64_t>(mats->size()) != order)
    throw std::runtime_error("sl3z-principal closure size mismatch");
  act.n_vertices = order;
  for (int i = 0; i < 6; ++i) {
    act.inv[i].assign(order, 0);
    for (std::int64_t v = 0; v < order; ++v) act.inv[i][act.fwd[i][v]] = static_cast<std::uint32_t>(v);
  }
  act.act_element = [p, mats, index_of](const GroupElement& g, std::uint32_t v) {
    const ModMat gm = reduce_mat(g.mat(), p);
    const ModMat prod = mod_mat_mult((*mats)[v], gm, p);
    return index_of->at(mod_mat_key(prod));
  };
  return act;
}

using ProjPoint = std::array<std::int64_t, 3>;

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod_pos(a, p), e = p - 2;  // Fermat
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ProjPoint proj_normalize(ProjPoint v, std::int64_t p) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      const std::int64_t s = mod_inverse(v[i], p);
      for (int j = 0; j < 3; ++j) v[j] = v[j] * s % p;
      return v;
    }
  }
  throw std::runtime_error("zero vector has no projective class");
}

std::uint32_t proj_index(const ProjPoint& v, std::int64_t p) {
  if (v[0] == 1) return static_cast<std::uint32_t>(v[1] * p + v[2]);
  if (v[1] == 1) return static_cast<std::uint32_t>(p * p + v[2]);
  return static_cast<std::uint32_t>(p * p + p);
}

ProjPoint proj_unindex(std::uint32_t idx, std::int64_t p) {
  if (idx < p * p) return ProjPoint{1, static_cast<std::int64_t>(idx / p), static_cast<std::int64_t>(idx % p)};
  if (idx < p * p + p) return ProjPoint{0, 1, static_cast<std::int64_t>(idx - p * p)};
  return ProjPoint{0, 0, 1};
}

ProjPoint proj_apply(const ProjPoint& v, const ModMat& m, std::int64_t p) {
  ProjPoint out{};
  for (int j = 0; j < 3; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i < 3; ++i) acc += v[i] * m[3 * i + j];
    out[j] = acc % p;
  }
  return proj_normalize(out, p);
}

PermutationAction sl3_projective_action(std::int64_t p) {
  const std::int64_t vertex_count = p * p + p + 1;
  const auto gens = sl3_chain_generators();
  PermutationAction act;
  act.n_vertices = vertex_count;
  act.size_param = p;
  act.label = "p=" + std::to_string(p);
  act.fwd.assign(6, std::vector<std::uint32_t>(vertex_count));
  act.inv.assign(6, std::vector<std::uint32_t>(vertex_count));
  for (int i = 0; i < 6; ++i) {
    const ModMat gm = reduce_mat(gens[i], p);
    for (std::int64_t v = 0; v < vertex_count; ++v)
      act.fwd[i][v] = proj_index(proj_apply(proj_unindex(static_cast<std::uint32_t>(v), p), gm, p), p);
    for (std::int64_t v = 0; v < vertex_count; ++v) act.inv[i][act.fwd[i][v]] = static_cast<std::uint32_t>(v);
  }
  act.act_element = [p](const GroupElement& g, std::uint32_t v) {
    const ModMat gm = reduce_mat(g.mat(), p);
    return proj_index(proj_apply(proj_unindex(v, p), gm, p), p);
  };
  return act;
}

GroupInstance sl3_group(Family tag) {
  GroupInstance g;
  g.family = tag;
  g.name = tag == Family::sl3z_principal ? "sl3z-principal" : "sl3z-projective";
  g.chain.labels = {"E12", "E13", "E23", "E21", "E31", "E32"};
  for (const auto& m : sl3_chain_generators()) g.generators_.emplace_back(m);
  g.identity_ = GroupElement(mat_identity());
  // Steinberg/Milnor presentation of SL(3,Z): commuting elementary pairs,
  // [E_ij, E_jk] = E_ik, and (E12 E21^-1 E12)^4 = 1.
  g.relators = {
      commutator_word(1, 2), commutator_word(1, 6), commutator_word(2, 3),
      commutator_word(3, 4), commutator_word(4, 5), commutator_word(5, 6),
      Word{1, 3, -1, -3, -2},  // [E12,E23] = E13
      Word{2, 6, -2, -6, -1},  // [E13,E32] = E12
      Word{4, 2, -4, -2, -3},  // [E21,E13] = E23
      Word{3, 5, -3, -5, -4},  // [E23,E31] = E21
      Word{5, 1, -5, -1, -6},  // [E31,E12] = E32
      Word{6, 4, -6, -4, -5},  // [E32,E21] = E31
      Word{1, -4, 1, 1, -4, 1, 1, -4, 1, 1, -4, 1},  // (E12 E21^-1 E12)^4
  };
  return g;
}

void check_relators(const GroupInstance& g, const std::vector<PermutationAction>& actions) {
  for (const auto& act : actions)
    for (const auto& r : g.relators)
      for (std::int64_t v = 0; v < act.n_vertices; ++v)
        if (act.apply_word(r, static_cast<std::uint32_t>(v)) != v)
          throw std::runtime_error(g.name + ": relator does not act as the identity permutation");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::torus: return "torus";
    case Family::heisenberg: return "heisenberg";
    case Family::sl3z_principal: return "sl3z-principal";
    case Family::sl3z_projective: return "sl3z-projective";
  }
  throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& name) {
  if (name == "torus") return Family::torus;
  if (name == "heisenberg") return Family::heisenberg;
  if (name == "sl3z-principal") return Family::sl3z_principal;
  if (name == "sl3z-projective") return Family::sl3z_projective;
  throw std::invalid_argument("unknown family tag: " + name);
}

const GroupElement& GroupInstance::generator(int i) const {
  if (i < 1 || i > generator_count()) throw std::out_of_range("generator index out of range");
  return generators_[i - 1];
}

GroupElement GroupInstance::identity() const { return identity_; }

std::uint32_t PermutationAction::apply_word(const Word& w, std::uint32_t v) const {
  for (const auto letter : w) {
    if (letter == 0 || std::abs(letter) > generator_count())
      throw std::out_of_range("word letter out of range");
    v = letter > 0 ? fwd[letter - 1][v] : inv[-letter - 1][v];
  }
  return v;
}

GroupInstance make_group(Family tag, int rank) {
  GroupInstance g;
  switch (tag) {
    case Family::torus: {
      const int k = rank;
      if (k < 2) throw std::invalid_argument("torus requires rank k >= 2");
      g.family = tag;
      g.name = "torus(k=" + std::to_string(k) + ")";
      for (int i = 1; i <= k; ++i) g.chain.labels.push_back("a" + std::to_string(i));
      for (int i = 0; i < k; ++i) {
        TorusElem e;
        e.shift.assign(k, 0);
        e.shift[i] = 1;
        g.generators_.emplace_back(std::move(e));
      }
      TorusElem id;
      id.shift.assign(k, 0);
      g.identity_ = GroupElement(std::move(id));
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.relators.push_back(commutator_word(i, j));
      break;
    }
    case Family::heisenberg: {
      g.family = tag;
      g.name = "heisenberg";
      g.chain.labels = {"x", "z", "y"};
      g.generators_ = {GroupElement(HeisElem{1, 0, 0}), GroupElement(HeisElem{0, 0, 1}),
                       GroupElement(HeisElem{0, 1, 0})};
      g.identity_ = GroupElement(HeisElem{});
      // relators over the chain order x, z, y
      g.relators = {
          commutator_word(1, 2),   // [x,z]
          commutator_word(3, 2),   // [y,z]
          Word{1, 3, -1, -3, -2},  // [x,y] z^-1
      };
      break;
    }
    case Family::sl3z_principal:
    case Family::sl3z_projective:
      g = sl3_group(tag);
      break;
  }
  for (auto& r : g.relators)
    g.max_relator_length = std::max(g.max_relator_length, static_cast<int>(r.size()));
  for (const auto& r : g.relators)
    if (!evaluate_word(g, r).is_identity())
      throw std::runtime_error(g.name + ": relator does not evaluate to the identity");
  return g;
}

FamilyInstance make_family(Family tag, const FamilyParams& params) {
  if (params.sizes.empty()) throw std::invalid_argument("family parameter list is empty");
  FamilyInstance out;
  out.group = make_group(tag, params.rank);
  switch (tag) {
    case Family::torus:
      for (const auto n : params.sizes) {
        if (n < 2) throw std::invalid_argument("torus requires side length n >= 2");
        out.actions.push_back(torus_action(params.rank, n));
      }
      break;
    case Family::heisenberg:
      for (const auto n : params.sizes) {
        if (n < 2) throw std::invalid_argument("heisenberg requires modulus n >= 2");
        out.actions.push_back(heisenberg_action(n));
      }
      break;
    case Family::sl3z_principal:
    case Family::sl3z_projective:
      for (const auto p : params.sizes) {
        if (!is_allowed_prime(p))
          throw std::invalid_argument("sl3z families require a prime p in {2,3,5,7,11,13}");
        out.actions.push_back(tag == Family::sl3z_principal ? sl3_principal_action(p)
                                                            : sl3_projective_action(p));
      }
      break;
  }
  check_relators(out.group, out.actions);
  return out;
}

GroupElement evaluate_word(const GroupInstance& group, const Word& word) {
  GroupElement acc = group.identity();
  for (const auto letter : word) {
    if (letter == 0 || std::abs(letter) > group.generator_count())
      throw std::out_of_range("word letter out of range");
    const GroupElement& gen = group.generator(std::abs(letter));
    acc = acc.multiply(letter > 0 ? gen : gen.inverse());
  }
  return acc;
}

namespace {

RightAngledCertificate::OrderCheck order_check(const GroupInstance& g, int idx) {
  RightAngledCertificate::OrderCheck chk;
  chk.generator = idx;
  const GroupElement& gen = g.generator(idx);
  if (g.family == Family::torus || g.family == Family::heisenberg) {
    chk.evidence = RightAngledCertificate::OrderEvidence::translation;
    chk.infinite = !gen.is_identity();
  } else {
    chk.evidence = RightAngledCertificate::OrderEvidence::unipotent;
    chk.infinite = mat_is_unipotent(gen.mat()) && !gen.is_identity();
  }
  return chk;
}

}  // namespace

RightAngledCertificate verify_right_angled(const GroupInstance& group) {
  std::vector<int> order(group.generator_count());
  for (int i = 0; i < group.generator_count(); ++i) order[i] = i + 1;
  return verify_chain_order(group, order);
}

RightAngledCertificate verify_chain_order(const GroupInstance& group,
                                          const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != group.generator_count())
    throw std::invalid_argument("chain order must list every generator once");
  RightAngledCertificate cert;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const Word comm{order[j], order[j + 1], -order[j], -order[j + 1]};
    RightAngledCertificate::PairCheck pc;
    pc.index = static_cast<int>(j + 1);
    pc.commutes = evaluate_word(group, comm).is_identity();
    if (!pc.commutes && cert.first_failing_pair == 0) cert.first_failing_pair = pc.index;
    cert.pairs.push_back(pc);
  }
  for (const auto idx : order) {
    const auto chk = order_check(group, idx);
    if (!chk.infinite && cert.first_failing_generator == 0) cert.first_failing_generator = idx;
    cert.orders.push_back(chk);
  }
  return cert;
}

}  // namespace rgcost
