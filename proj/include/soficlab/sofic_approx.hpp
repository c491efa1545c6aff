#ifndef SOFICLAB_SOFIC_APPROX_HPP_
#define SOFICLAB_SOFIC_APPROX_HPP_

#include <functional>
#include <string>
#include <vector>

#include "soficlab/folner.hpp"
#include "soficlab/group.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/witness.hpp"

namespace soficlab {

// A finite approximate action of a group, with the (K, delta) target it was
// built for. `act` is total for every group element, not just K, so callers
// can drive points by arbitrary units. 1 fixes every point exactly in all
// constructions.
struct GroupActionWitness {
  GroupPtr                 group;
  size_t                   point_count = 0;
  std::vector<std::string> point_labels;
  std::function<std::uint32_t(Elem const&, std::uint32_t)> act;
  Rational    declared_delta = 0;
  std::string kind;  // "left-regular" | "folner-sink" | "quotient-regular"

  // Tables for {1} u K u K^2 through `act`, measurable by check_witness.
  ActionWitness as_action_witness(std::vector<Elem> const& k_set) const;
};

// Dispatch by group kind:
//  (a) finite: left translation on the whole group — genuine and free, both
//      defects exactly 0;
//  (b) Folner-capable (f.g. abelian or a capable quotient image): points
//      are a Folner set for K u K*K plus a sink; g.f = gf when gf stays in
//      the set, otherwise the sink — measured defects are at most delta;
//  (c) residually finite: the first supplied finite quotient injective on K,
//      acting by left translation on the image subgroup — genuine, free.
//
// Throws NoSeparatingQuotient when no supplied quotient separates K, and
// propagates SearchBudgetExceeded from the Folner search.
GroupActionWitness sofic_group_action(
    GroupPtr const& group, std::vector<Elem> const& k_set,
    Rational const& delta, size_t folner_budget = limits::kFolnerBudget);

}  // namespace soficlab
#endif  // SOFICLAB_SOFIC_APPROX_HPP_
