// Empirical sofic/Farber diagnostics: exact fixed-point fractions of words
// under the coset action and the gamma correction sums over exact Cayley
// balls.
#pragma once

#include <cstdint>

#include "rgcost/group.hpp"
#include "rgcost/numeric.hpp"

namespace rgcost {

struct FixedPointReport {
  Word word;
  std::int64_t fixed_vertices = 0;
  Rat fraction;
};

FixedPointReport fixed_point_fraction(const PermutationAction& action, const Word& word);

// gamma = sum over the exact Cayley ball S^{d^2+1} \ {1} of the fixed-point
// fractions. Ball membership and identity detection use the exact group
// representation; the fraction sum is an exact rational.
Rat gamma_sum(const PermutationAction& action, const GroupInstance& group, std::int64_t d);

}  // namespace rgcost
