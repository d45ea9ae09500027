// Built-in right-angled group families with exact element arithmetic,
// their finite-index coset actions, and the right-angled chain certificate.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rgcost/element.hpp"

namespace rgcost {

// Signed 1-based generator indices; -i denotes the inverse of generator i.
using Word = std::vector<std::int32_t>;

enum class Family { torus, heisenberg, sl3z_principal, sl3z_projective };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct GeneratorChain {
  std::vector<std::string> labels;
  int count() const { return static_cast<int>(labels.size()); }
};

struct FamilyParams {
  int rank = 0;                      // torus only
  std::vector<std::int64_t> sizes;   // torus/heisenberg: n values; sl3z: primes p
};

class GroupInstance {
 public:
  Family family;
  std::string name;
  GeneratorChain chain;
  std::vector<Word> relators;
  int max_relator_length = 0;

  int generator_count() const { return chain.count(); }
  const GroupElement& generator(int i) const;  // 1-based chain index
  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    return a.multiply(b);
  }

  std::vector<GroupElement> generators_;  // chain order
  GroupElement identity_;
};

// Right coset action of the chain generators on a finite index set.
struct PermutationAction {
  std::int64_t n_vertices = 0;
  // fwd[i][v] = v . s_{i+1}, inv[i][v] = v . s_{i+1}^{-1}
  std::vector<std::vector<std::uint32_t>> fwd;
  std::vector<std::vector<std::uint32_t>> inv;
  std::int64_t size_param = 0;  // the family's index parameter (n or p)
  std::string label;
  // Applies an arbitrary exact group element to a vertex, consistent with
  // composing generator permutations along any word for the element.
  std::function<std::uint32_t(const GroupElement&, std::uint32_t)> act_element;

  int generator_count() const { return static_cast<int>(fwd.size()); }
  std::uint32_t apply_word(const Word& w, std::uint32_t v) const;
};

struct FamilyInstance {
  GroupInstance group;
  std::vector<PermutationAction> actions;  // one per entry of params.sizes
};

// The ambient group alone (chain, relators, element arithmetic), without
// any coset action. `rank` is used by the torus family only.
GroupInstance make_group(Family tag, int rank = 2);

// Families:
//   torus:            Z^k, chain a_1..a_k, subgroup (nZ)^k, n^k vertices
//   heisenberg:       <x,y,z | [x,z],[y,z],[x,y]z^-1>, chain x,z,y,
//                     kernel of reduction mod n, n^3 vertices
//   sl3z_principal:   SL(3,Z) with the six elementary generators, kernel of
//                     reduction mod p, |SL(3,p)| vertices
//   sl3z_projective:  same group, stabilizer of [1:0:0], p^2+p+1 vertices
FamilyInstance make_family(Family tag, const FamilyParams& params);

GroupElement evaluate_word(const GroupInstance& group, const Word& word);

struct RightAngledCertificate {
  struct PairCheck {
    int index = 0;  // pair (index, index+1), 1-based
    bool commutes = false;
  };
  enum class OrderEvidence { translation, unipotent };
  struct OrderCheck {
    int generator = 0;  // 1-based
    OrderEvidence evidence = OrderEvidence::translation;
    bool infinite = false;
  };
  std::vector<PairCheck> pairs;
  std::vector<OrderCheck> orders;
  int first_failing_pair = 0;       // 0 = none
  int first_failing_generator = 0;  // 0 = none
  bool ok() const { return first_failing_pair == 0 && first_failing_generator == 0; }
};

RightAngledCertificate verify_right_angled(const GroupInstance& group);

// Certificate for an arbitrary chain reordering (used to demonstrate that
// mis-ordered chains are rejected with the failing pair identified).
RightAngledCertificate verify_chain_order(const GroupInstance& group,
                                          const std::vector<int>& order);

// Frontier guards, shared by every exact-element breadth-first search.
constexpr std::int64_t kBallElementGuard = 10'000'000;

}  // namespace rgcost
