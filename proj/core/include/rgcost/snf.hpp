// Sparse integer matrices over arbitrary-precision integers, exact Smith
// normal form, and the torsion bounds derived from it.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rgcost/numeric.hpp"

namespace rgcost {

struct SparseIntegerMatrix {
  struct Entry {
    std::int32_t row = 0;
    std::int32_t col = 0;
    BigInt value;
  };
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Entry> entries;  // no duplicate (row, col), no zero values

  void add(std::int32_t r, std::int32_t c, BigInt v);
};

struct SnfResult {
  // Nonzero invariant factors d_1 | d_2 | ... (1s included), so
  // coker = Z^betti + sum Z/d_i with betti = cols - factors.size().
  std::vector<BigInt> factors;
  std::int64_t betti = 0;
  BigInt trs = 1;  // product of the factors > 1

  std::vector<BigInt> nontrivial_factors() const;
  // (betti, factors > 1): the isomorphism invariants of the cokernel,
  // independent of the presentation size.
  bool same_abelian_group(const SnfResult& rhs) const;
};

// Exact invariant factors of the cokernel Z^cols / rowspace. Deterministic;
// sparse unit-pivot elimination first, then a dense smallest-pivot endgame
// with the divisibility chain enforced.
SnfResult smith_normal_form(const SparseIntegerMatrix& m);

// b^m with b the largest row sum of absolute values (1 when there is none)
// and m the column count; an upper bound for trs of the cokernel.
BigInt hadamard_bound(const SparseIntegerMatrix& m);

// ln(trs)/index without overflow; exact to ~1e-15 relative error.
double torsion_growth_stat(const BigInt& trs, std::int64_t index);

// Header "rows cols nnz", then one "r c value" line per entry, decimal,
// sorted by (r, c), 0-based indices.
void dump_matrix(const SparseIntegerMatrix& m, std::ostream& os);

}  // namespace rgcost
