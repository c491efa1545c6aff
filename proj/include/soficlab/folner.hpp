#ifndef SOFICLAB_FOLNER_HPP_
#define SOFICLAB_FOLNER_HPP_

#include <vector>

#include "soficlab/group.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

namespace limits {
// Candidates are walked in order (smallest first), so the budget bounds the
// box side; 4096 covers deltas down to about 1/1000 on Z before the
// enumeration cap kicks in anyway.
constexpr size_t kFolnerBudget = 4096;
}

// A finite subset of a group with measured quality: quality_for(K) is the
// exact proportion of f in F with Kf contained in F.
struct FolnerSet {
  GroupPtr          group;
  std::vector<Elem> elements;  // sorted by encoding, duplicate-free

  Rational quality_for(std::vector<Elem> const& k_set) const;
};

// |{f in F : kf in F for all k in K}| / |F|, exact. K and F must be
// nonempty (throws EmptySet).
Rational folner_quality(GroupPtr const& group, std::vector<Elem> const& k_set,
                        std::vector<Elem> const& f_set);

// Walks the group's candidate sets and returns the first whose measured
// quality strictly exceeds 1 - delta. Quality is always re-measured with
// folner_quality, never assumed from the construction. Throws
// NotAmenableCapable when the group has no provider, SearchBudgetExceeded
// (carrying the best quality found) when the budget runs out.
FolnerSet find_folner(GroupPtr const& group, std::vector<Elem> const& k_set,
                      Rational const& delta,
                      size_t          budget = limits::kFolnerBudget);

}  // namespace soficlab
#endif  // SOFICLAB_FOLNER_HPP_
