#include "rgcost/farber.hpp"

#include <stdexcept>
#include <string>

#include "rgcost/schreier.hpp"

namespace rgcost {

FixedPointReport fixed_point_fraction(const PermutationAction& action, const Word& word) {
  FixedPointReport rep;
  rep.word = word;
  for (std::int64_t v = 0; v < action.n_vertices; ++v)
    if (action.apply_word(word, static_cast<std::uint32_t>(v)) == v) ++rep.fixed_vertices;
  rep.fraction = make_rat(rep.fixed_vertices, action.n_vertices);
  return rep;
}

Rat gamma_sum(const PermutationAction& action, const GroupInstance& group, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("gamma_sum requires d >= 0");
  if (!action.act_element)
    throw std::invalid_argument("gamma_sum requires an action with element application");
  const std::int64_t radius = d * d + 1;
  CayleyBall ball;
  try {
    ball = cayley_ball(group, static_cast<int>(radius));
  } catch (const std::runtime_error&) {
    throw std::runtime_error("gamma_sum: ball guard exceeded at radius d^2+1 = " +
                             std::to_string(radius));
  }
  std::int64_t fixed_total = 0;
  for (std::size_t idx = 1; idx < ball.elements.size(); ++idx) {
    const GroupElement& g = ball.elements[idx];
    for (std::int64_t v = 0; v < action.n_vertices; ++v)
      if (action.act_element(g, static_cast<std::uint32_t>(v)) == v) ++fixed_total;
  }
  return make_rat(fixed_total, action.n_vertices);
}

}  // namespace rgcost
