#include "soficlab/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <unordered_map>

#include "soficlab/errors.hpp"

namespace soficlab {

Elem MonoidOracle::word_product(std::vector<Elem> const& word) const {
  Elem acc = one();
  for (auto const& w : word) {
    acc = mul(acc, w);
  }
  return acc;
}

Elem finite_elem(std::uint32_t index) {
  return enc::u32(index);
}

std::uint32_t finite_index(Elem const& e) {
  size_t              pos = 0;
  std::uint32_t const i   = enc::get_u32(e, pos);
  if (pos != e.size()) {
    throw BadIndex("bad finite monoid element encoding");
  }
  return i;
}

namespace {

class FiniteMonoidOracle final : public MonoidOracle {
 public:
  FiniteMonoidOracle(FiniteMonoid m, std::string name)
      : m_(std::move(m)), name_(std::move(name)) {
    unit_group_ = TableGroup::units_of(m_, &unit_monoid_index_);
    for (std::uint32_t g = 0; g < unit_monoid_index_.size(); ++g) {
      group_index_of_[unit_monoid_index_[g]] = g;
    }
  }

  std::string name() const override { return name_; }

  Elem one() const override { return finite_elem(m_.identity()); }

  Elem mul(Elem const& a, Elem const& b) const override {
    return finite_elem(m_.product(check(a), check(b)));
  }

  bool is_unit(Elem const& a) const override {
    return group_index_of_.count(check(a)) > 0;
  }

  Elem unit_inverse(Elem const& a) const override {
    auto it = group_index_of_.find(check(a));
    if (it == group_index_of_.end()) {
      throw BadIndex("unit_inverse of a non-unit");
    }
    return finite_elem(
        unit_monoid_index_[unit_group_->inverse_index(it->second)]);
  }

  GroupPtr unit_group() const override { return unit_group_; }

  Elem unit_to_group(Elem const& monoid_unit) const override {
    auto it = group_index_of_.find(check(monoid_unit));
    if (it == group_index_of_.end()) {
      throw BadIndex("not a unit");
    }
    return enc::u32(it->second);
  }

  Elem group_to_unit(Elem const& group_elem) const override {
    return finite_elem(unit_monoid_index_[unit_group_->index(group_elem)]);
  }

  StabiliserQuotient orbit_data(Elem const& nonunit) const override {
    std::uint32_t const s = check(nonunit);
    if (group_index_of_.count(s) > 0) {
      throw BadIndex("orbit_data of a unit");
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    // orbit of s under right translation by units
    std::vector<std::uint32_t> orbit;
    {
      std::vector<bool>         seen(m_.size(), false);
      std::queue<std::uint32_t> work;
      seen[s] = true;
      work.push(s);
      while (!work.empty()) {
        std::uint32_t const cur = work.front();
        work.pop();
        orbit.push_back(cur);
        for (auto u : unit_monoid_index_) {
          std::uint32_t const next = m_.product(cur, u);
          if (!seen[next]) {
            seen[next] = true;
            work.push(next);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
    }
    std::string orbit_id = "orbit:";
    for (auto x : orbit) {
      orbit_id += std::to_string(x) + ",";
    }
    auto cached = cache_.find(orbit_id);
    if (cached != cache_.end()) {
      return cached->second;
    }

    // exact pointwise stabiliser of the orbit inside the unit group
    std::vector<std::uint32_t> stab;
    for (std::uint32_t g = 0; g < unit_monoid_index_.size(); ++g) {
      bool fixes = true;
      for (auto y : orbit) {
        if (m_.product(y, unit_monoid_index_[g]) != y) {
          fixes = false;
          break;
        }
      }
      if (fixes) {
        stab.push_back(g);
      }
    }
    auto quotient = unit_group_->quotient_by(stab);

    StabiliserQuotient out;
    out.orbit_id = orbit_id;
    out.quotient = quotient.group;
    auto coset_of       = quotient.coset_of;
    auto representative = quotient.representative;
    auto units          = unit_monoid_index_;
    auto unit_group     = unit_group_;
    FiniteMonoid const* table = &m_;
    out.hom = [unit_group, coset_of](Elem const& g) {
      return enc::u32(coset_of[unit_group->index(g)]);
    };
    out.translate = [quotient_group = quotient.group, representative, units,
                     table](Elem const& s_elem, Elem const& q_elem) {
      std::uint32_t const c = quotient_group->index(q_elem);
      return finite_elem(
          table->product(finite_index(s_elem), units[representative[c]]));
    };
    cache_.emplace(orbit_id, out);
    return out;
  }

  TriState units_equal_identity_j_class() const override {
    // J-class of 1 = { x : 1 is reachable from x in the two-sided Cayley
    // graph }; compare with the unit set.
    size_t const n = m_.size();
    std::vector<std::vector<std::uint32_t>> rev(n);
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t g = 0; g < n; ++g) {
        rev[m_.product(g, y)].push_back(y);
        rev[m_.product(y, g)].push_back(y);
      }
    }
    std::vector<bool>         reaches_one(n, false);
    std::queue<std::uint32_t> work;
    reaches_one[m_.identity()] = true;
    work.push(m_.identity());
    while (!work.empty()) {
      std::uint32_t const cur = work.front();
      work.pop();
      for (auto y : rev[cur]) {
        if (!reaches_one[y]) {
          reaches_one[y] = true;
          work.push(y);
        }
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      bool const is_u = group_index_of_.count(x) > 0;
      if (reaches_one[x] != is_u) {
        return TriState::False;
      }
    }
    return TriState::True;
  }

  std::string label(Elem const& a) const override {
    return m_.name(check(a));
  }

  Elem parse(std::string const& text) const override {
    return finite_elem(m_.index_of(text));
  }

  std::string element_grammar() const override {
    return "element names from the multiplication table";
  }

  FiniteMonoid const* as_finite() const override { return &m_; }

 private:
  std::uint32_t check(Elem const& a) const {
    std::uint32_t const i = finite_index(a);
    if (i >= m_.size()) {
      throw BadIndex("element index out of range");
    }
    return i;
  }

  FiniteMonoid                      m_;
  std::string                       name_;
  std::shared_ptr<TableGroup const> unit_group_;
  std::vector<std::uint32_t>        unit_monoid_index_;
  std::unordered_map<std::uint32_t, std::uint32_t> group_index_of_;
  mutable std::mutex                                cache_mutex_;
  mutable std::map<std::string, StabiliserQuotient> cache_;
};

}  // namespace

MonoidPtr wrap_finite(FiniteMonoid m, std::string name) {
  return std::make_shared<FiniteMonoidOracle>(std::move(m), std::move(name));
}

}  // namespace soficlab
