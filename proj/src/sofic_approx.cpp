#include "soficlab/sofic_approx.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "soficlab/errors.hpp"

namespace soficlab {

ActionWitness GroupActionWitness::as_action_witness(
    std::vector<Elem> const& k_set) const {
  std::vector<Elem> acting{group->one()};
  auto push_unique = [&](Elem const& e) {
    auto it = std::find(acting.begin(), acting.end(), e);
    if (it == acting.end()) {
      acting.push_back(e);
      return static_cast<std::uint32_t>(acting.size() - 1);
    }
    return static_cast<std::uint32_t>(it - acting.begin());
  };
  std::vector<Elem> k;
  for (auto const& e : k_set) {
    if (std::find(k.begin(), k.end(), e) == k.end()) {
      k.push_back(e);
      push_unique(e);
    }
  }
  ActionWitness w;
  for (auto const& g : k) {
    for (auto const& h : k) {
      std::uint32_t const gi = push_unique(g);
      std::uint32_t const hj = push_unique(h);
      std::uint32_t const gh = push_unique(group->mul(g, h));
      w.products.push_back({gi, hj, gh});
    }
  }
  w.ground_size  = point_count;
  w.point_labels = point_labels;
  for (auto const& e : acting) {
    w.acting.push_back({e, group->label(e)});
    std::vector<std::uint32_t> table(point_count);
    for (std::uint32_t p = 0; p < point_count; ++p) {
      table[p] = act(e, p);
    }
    w.tables.push_back(std::move(table));
  }
  return w;
}

namespace {

// (a) finite groups: left translation on the group itself
GroupActionWitness regular_action(GroupPtr const& group,
                                  Rational const& delta) {
  auto points = std::make_shared<std::vector<Elem>>(group->elements());
  auto index  = std::make_shared<std::unordered_map<Elem, std::uint32_t>>();
  for (std::uint32_t i = 0; i < points->size(); ++i) {
    (*index)[(*points)[i]] = i;
  }
  GroupActionWitness out;
  out.group       = group;
  out.point_count = points->size();
  for (auto const& p : *points) {
    out.point_labels.push_back(group->label(p));
  }
  out.declared_delta = delta;
  out.kind           = "left-regular";
  out.act = [group, points, index](Elem const& g, std::uint32_t p) {
    return index->at(group->mul(g, (*points)[p]));
  };
  return out;
}

// (b) amenable-capable groups: Folner set for K u K*K with a sink point.
// A sink (rather than acting as the identity off the set) keeps separation
// controlled: two distinct group elements can only collide on points that
// fall to the sink.
GroupActionWitness folner_sink_action(GroupPtr const&          group,
                                      std::vector<Elem> const& k_set,
                                      Rational const&          delta,
                                      size_t                   budget) {
  std::vector<Elem> enlarged = k_set;
  for (auto const& g : k_set) {
    for (auto const& h : k_set) {
      enlarged.push_back(group->mul(g, h));
    }
  }
  std::sort(enlarged.begin(), enlarged.end());
  enlarged.erase(std::unique(enlarged.begin(), enlarged.end()),
                 enlarged.end());

  std::vector<Elem> f_points;
  if (enlarged.empty()) {
    f_points.push_back(group->one());
  } else {
    f_points = find_folner(group, enlarged, delta, budget).elements;
  }
  auto points = std::make_shared<std::vector<Elem>>(std::move(f_points));
  auto index  = std::make_shared<std::unordered_map<Elem, std::uint32_t>>();
  for (std::uint32_t i = 0; i < points->size(); ++i) {
    (*index)[(*points)[i]] = i;
  }
  std::uint32_t const sink = static_cast<std::uint32_t>(points->size());

  GroupActionWitness out;
  out.group       = group;
  out.point_count = points->size() + 1;
  for (auto const& p : *points) {
    out.point_labels.push_back(group->label(p));
  }
  out.point_labels.push_back("sink");
  out.declared_delta = delta;
  out.kind           = "folner-sink";
  out.act = [group, points, index, sink](Elem const& g, std::uint32_t p) {
    if (p == sink) {
      return sink;
    }
    Elem const gf = group->mul(g, (*points)[p]);
    auto       it = index->find(gf);
    return it == index->end() ? sink : it->second;
  };
  return out;
}

// (c) residually finite groups: the first supplied quotient injective on K,
// by left translation on the image subgroup
GroupActionWitness quotient_regular_action(
    std::shared_ptr<FreeGroup const> const& group,
    std::vector<Elem> const& k_set, Rational const& delta) {
  for (size_t q = 0; q < group->quotients().size(); ++q) {
    auto const& target = group->quotients()[q].target;
    bool        injective = true;
    std::vector<Elem> images;
    for (auto const& k : k_set) {
      images.push_back(group->apply_quotient(q, k));
    }
    for (size_t a = 0; a < images.size() && injective; ++a) {
      for (size_t b = a + 1; b < images.size() && injective; ++b) {
        injective = images[a] != images[b];
      }
    }
    if (!injective) {
      continue;
    }
    // image subgroup = closure of the generator images
    auto table = std::dynamic_pointer_cast<TableGroup const>(target);
    std::vector<Elem> points;
    if (table) {
      std::vector<std::uint32_t> gen_idx;
      for (auto const& g : group->quotients()[q].gen_images) {
        gen_idx.push_back(table->index(g));
      }
      for (auto i : table->subgroup_closure(gen_idx)) {
        points.push_back(enc::u32(i));
      }
    } else {
      points = target->elements();
    }
    auto point_list = std::make_shared<std::vector<Elem>>(std::move(points));
    auto index = std::make_shared<std::unordered_map<Elem, std::uint32_t>>();
    for (std::uint32_t i = 0; i < point_list->size(); ++i) {
      (*index)[(*point_list)[i]] = i;
    }
    GroupActionWitness out;
    out.group       = group;
    out.point_count = point_list->size();
    for (auto const& p : *point_list) {
      out.point_labels.push_back(target->label(p));
    }
    out.declared_delta = delta;
    out.kind           = "quotient-regular";
    out.act = [group, q, target, point_list, index](Elem const&   g,
                                                    std::uint32_t p) {
      Elem const img = group->apply_quotient(q, g);
      return index->at(target->mul(img, (*point_list)[p]));
    };
    return out;
  }
  throw NoSeparatingQuotient(
      "no supplied finite quotient separates the requested K ("
      + std::to_string(group->quotients().size()) + " quotients available)");
}

}  // namespace

GroupActionWitness sofic_group_action(GroupPtr const&          group,
                                      std::vector<Elem> const& k_set,
                                      Rational const&          delta,
                                      size_t folner_budget) {
  if (delta <= 0) {
    throw EmptySet("delta must be positive");
  }
  std::vector<Elem> k;
  for (auto const& e : k_set) {
    if (std::find(k.begin(), k.end(), e) == k.end()) {
      k.push_back(e);
    }
  }
  if (group->is_finite()) {
    return regular_action(group, delta);
  }
  if (group->folner_capable()) {
    return folner_sink_action(group, k, delta, folner_budget);
  }
  auto free = std::dynamic_pointer_cast<FreeGroup const>(group);
  if (free) {
    return quotient_regular_action(free, k, delta);
  }
  throw NotAmenableCapable("no sofic approximation strategy for "
                           + group->description());
}

}  // namespace soficlab
