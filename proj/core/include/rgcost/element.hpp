// Exact group elements for the built-in families: integer translation
// vectors, Heisenberg triples and 3x3 integer matrices of determinant 1.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rgcost/numeric.hpp"

namespace rgcost {

// Translation by an integer vector (element of Z^k).
struct TorusElem {
  std::vector<std::int64_t> shift;
};

// Upper unitriangular 3x3 integer matrix [[1,a,c],[0,1,b],[0,0,1]],
// stored as the triple (a, b, c).
struct HeisElem {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

// Row-major 3x3 integer matrix with determinant 1.
struct MatElem {
  std::array<BigInt, 9> m;
};

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(TorusElem e) : payload_(std::move(e)) {}
  explicit GroupElement(HeisElem e) : payload_(e) {}
  explicit GroupElement(MatElem e) : payload_(std::move(e)) {}

  const TorusElem& torus() const { return std::get<TorusElem>(payload_); }
  const HeisElem& heis() const { return std::get<HeisElem>(payload_); }
  const MatElem& mat() const { return std::get<MatElem>(payload_); }

  GroupElement multiply(const GroupElement& rhs) const;
  GroupElement inverse() const;
  bool is_identity() const;

  // Canonical byte encoding; injective on each family's element set.
  // Torus/Heisenberg: fixed-width little-endian coordinate tuples.
  // Matrices: '|'-separated decimal entries in row-major order.
  std::string encode() const;

  bool operator==(const GroupElement& rhs) const { return encode() == rhs.encode(); }

 private:
  std::variant<TorusElem, HeisElem, MatElem> payload_;
};

MatElem mat_identity();
MatElem mat_multiply(const MatElem& x, const MatElem& y);
MatElem mat_inverse(const MatElem& x);  // adjugate; requires det = 1
BigInt mat_det(const MatElem& x);
// Elementary matrix I + e_{rc} (1-based indices, r != c).
MatElem mat_elementary(int r, int c);
bool mat_is_unipotent(const MatElem& x);  // (x - I)^3 = 0

}  // namespace rgcost
