#include "rgcost/element.hpp"

#include <cstring>
#include <stdexcept>

namespace rgcost {

namespace {

void append_le64(std::string& out, std::int64_t v) {
  const auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

}  // namespace

GroupElement GroupElement::multiply(const GroupElement& rhs) const {
  if (std::holds_alternative<TorusElem>(payload_)) {
    const auto& a = std::get<TorusElem>(payload_);
    const auto& b = rhs.torus();
    if (a.shift.size() != b.shift.size())
      throw std::invalid_argument("torus elements of different rank");
    TorusElem out;
    out.shift.resize(a.shift.size());
    for (std::size_t i = 0; i < a.shift.size(); ++i) out.shift[i] = a.shift[i] + b.shift[i];
    return GroupElement(std::move(out));
  }
  if (std::holds_alternative<HeisElem>(payload_)) {
    const auto& x = std::get<HeisElem>(payload_);
    const auto& y = rhs.heis();
    // [[1,a,c],[0,1,b],[0,0,1]] * [[1,a',c'],[0,1,b'],[0,0,1]]
    return GroupElement(HeisElem{x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b});
  }
  return GroupElement(mat_multiply(mat(), rhs.mat()));
}

GroupElement GroupElement::inverse() const {
  if (std::holds_alternative<TorusElem>(payload_)) {
    TorusElem out = std::get<TorusElem>(payload_);
    for (auto& v : out.shift) v = -v;
    return GroupElement(std::move(out));
  }
  if (std::holds_alternative<HeisElem>(payload_)) {
    const auto& x = std::get<HeisElem>(payload_);
    return GroupElement(HeisElem{-x.a, -x.b, x.a * x.b - x.c});
  }
  return GroupElement(mat_inverse(mat()));
}

bool GroupElement::is_identity() const {
  if (std::holds_alternative<TorusElem>(payload_)) {
    for (auto v : std::get<TorusElem>(payload_).shift)
      if (v != 0) return false;
    return true;
  }
  if (std::holds_alternative<HeisElem>(payload_)) {
    const auto& x = std::get<HeisElem>(payload_);
    return x.a == 0 && x.b == 0 && x.c == 0;
  }
  const auto& m = mat().m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[3 * i + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string GroupElement::encode() const {
  std::string out;
  if (std::holds_alternative<TorusElem>(payload_)) {
    const auto& e = std::get<TorusElem>(payload_);
    out.reserve(8 * e.shift.size());
    for (auto v : e.shift) append_le64(out, v);
    return out;
  }
  if (std::holds_alternative<HeisElem>(payload_)) {
    const auto& e = std::get<HeisElem>(payload_);
    out.reserve(24);
    append_le64(out, e.a);
    append_le64(out, e.b);
    append_le64(out, e.c);
    return out;
  }
  const auto& m = mat().m;
  for (int i = 0; i < 9; ++i) {
    if (i) out.push_back('|');
    out += m[i].get_str();
  }
  return out;
}

MatElem mat_identity() {
  MatElem e;
  for (int i = 0; i < 9; ++i) e.m[i] = (i % 4 == 0) ? 1 : 0;
  return e;
}

MatElem mat_multiply(const MatElem& x, const MatElem& y) {
  MatElem out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BigInt acc = 0;
      for (int l = 0; l < 3; ++l) acc += x.m[3 * i + l] * y.m[3 * l + j];
      out.m[3 * i + j] = acc;
    }
  return out;
}

BigInt mat_det(const MatElem& x) {
  const auto& m = x.m;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

MatElem mat_inverse(const MatElem& x) {
  if (mat_det(x) != 1) throw std::invalid_argument("matrix inverse requires determinant 1");
  const auto& m = x.m;
  MatElem out;
  // adjugate transpose; det = 1 so this is the exact integer inverse
  out.m[0] = m[4] * m[8] - m[5] * m[7];
  out.m[1] = m[2] * m[7] - m[1] * m[8];
  out.m[2] = m[1] * m[5] - m[2] * m[4];
  out.m[3] = m[5] * m[6] - m[3] * m[8];
  out.m[4] = m[0] * m[8] - m[2] * m[6];
  out.m[5] = m[2] * m[3] - m[0] * m[5];
  out.m[6] = m[3] * m[7] - m[4] * m[6];
  out.m[7] = m[1] * m[6] - m[0] * m[7];
  out.m[8] = m[0] * m[4] - m[1] * m[3];
  return out;
}

MatElem mat_elementary(int r, int c) {
  if (r < 1 || r > 3 || c < 1 || c > 3 || r == c)
    throw std::invalid_argument("elementary matrix needs distinct 1-based indices");
  MatElem e = mat_identity();
  e.m[3 * (r - 1) + (c - 1)] = 1;
  return e;
}

bool mat_is_unipotent(const MatElem& x) {
  MatElem n = x;
  for (int i = 0; i < 3; ++i) n.m[4 * i] -= 1;
  const MatElem n2 = mat_multiply(n, n);
  const MatElem n3 = mat_multiply(n2, n);
  for (const auto& v : n3.m)
    if (v != 0) return false;
  return true;
}

}  // namespace rgcost
