#include "soficlab/folner.hpp"

#include <algorithm>

#include "soficlab/errors.hpp"

namespace soficlab {

Rational FolnerSet::quality_for(std::vector<Elem> const& k_set) const {
  return folner_quality(group, k_set, elements);
}

Rational folner_quality(GroupPtr const& group, std::vector<Elem> const& k_set,
                        std::vector<Elem> const& f_set) {
  if (k_set.empty() || f_set.empty()) {
    throw EmptySet("folner_quality requires nonempty K and F");
  }
  std::vector<Elem> sorted = f_set;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto in_f = [&](Elem const& e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
  };
  std::uint64_t good = 0;
  for (auto const& f : sorted) {
    bool inside = true;
    for (auto const& k : k_set) {
      if (!in_f(group->mul(k, f))) {
        inside = false;
        break;
      }
    }
    good += inside;
  }
  return Rational(Int(good), Int(sorted.size()));
}

FolnerSet find_folner(GroupPtr const& group, std::vector<Elem> const& k_set,
                      Rational const& delta, size_t budget) {
  if (k_set.empty()) {
    throw EmptySet("find_folner requires nonempty K");
  }
  if (delta <= 0 || delta >= 1) {
    throw EmptySet("delta must lie in (0,1)");
  }
  if (!group->folner_capable()) {
    throw NotAmenableCapable("no Folner provider for "
                             + group->description());
  }
  Rational const target = Rational(1) - delta;
  Rational       best(0);
  size_t         best_size = 0;
  for (size_t step = 0; step < budget; ++step) {
    std::vector<Elem> candidate;
    try {
      candidate = group->folner_candidate(step);
    } catch (CapExceeded const&) {
      break;  // candidates grew past the enumeration cap
    }
    if (candidate.empty()) {
      continue;
    }
    Rational const quality = folner_quality(group, k_set, candidate);
    if (quality > best) {
      best      = quality;
      best_size = candidate.size();
    }
    if (quality > target) {
      FolnerSet out;
      out.group    = group;
      out.elements = std::move(candidate);
      return out;
    }
    if (group->is_finite()) {
      break;  // the whole group is the only candidate
    }
  }
  throw SearchBudgetExceeded(
      "Folner search for " + group->description() + " gave up (best |F|="
          + std::to_string(best_size) + ")",
      rational_str(best));
}

}  // namespace soficlab
