#include "soficlab/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "soficlab/errors.hpp"

namespace soficlab {

// ---------------------------------------------------------------------
// bicyclic
// ---------------------------------------------------------------------

namespace {

struct BicyclicPair {
  std::int64_t a, b;  // the element q^a p^b
};

Elem bicyclic_elem(std::int64_t a, std::int64_t b) {
  Elem out;
  enc::put_i64(out, a);
  enc::put_i64(out, b);
  return out;
}

BicyclicPair bicyclic_pair(Elem const& e) {
  size_t       pos = 0;
  BicyclicPair p;
  p.a = enc::get_i64(e, pos);
  p.b = enc::get_i64(e, pos);
  if (pos != e.size() || p.a < 0 || p.b < 0) {
    throw BadIndex("bad bicyclic element encoding");
  }
  return p;
}

class BicyclicMonoid final : public MonoidOracle {
 public:
  BicyclicMonoid() : unit_group_(TableGroup::trivial()) {}

  std::string name() const override { return "bicyclic"; }

  Elem one() const override { return bicyclic_elem(0, 0); }

  Elem mul(Elem const& x, Elem const& y) const override {
    auto const u = bicyclic_pair(x);
    auto const v = bicyclic_pair(y);
    std::int64_t const m = std::min(u.b, v.a);
    return bicyclic_elem(u.a + v.a - m, u.b + v.b - m);
  }

  bool is_unit(Elem const& x) const override {
    auto const p = bicyclic_pair(x);
    return p.a == 0 && p.b == 0;
  }

  Elem unit_inverse(Elem const& x) const override {
    if (!is_unit(x)) {
      throw BadIndex("unit_inverse of a non-unit");
    }
    return one();
  }

  GroupPtr unit_group() const override { return unit_group_; }

  Elem unit_to_group(Elem const& x) const override {
    if (!is_unit(x)) {
      throw BadIndex("not a unit");
    }
    return unit_group_->one();
  }

  Elem group_to_unit(Elem const&) const override { return one(); }

  StabiliserQuotient orbit_data(Elem const& s) const override {
    if (is_unit(s)) {
      throw BadIndex("orbit_data of a unit");
    }
    // the unit group is trivial, so every non-unit is its own orbit with
    // trivial (hence amenable) stabiliser quotient
    StabiliserQuotient out;
    out.orbit_id  = "self:" + s;
    out.quotient  = unit_group_;
    out.hom       = [g = unit_group_](Elem const&) { return g->one(); };
    out.translate = [](Elem const& elem, Elem const&) { return elem; };
    return out;
  }

  TriState units_equal_identity_j_class() const override {
    return TriState::False;  // 1 = pq with p a non-unit
  }

  std::string label(Elem const& x) const override {
    auto const p = bicyclic_pair(x);
    if (p.a == 0 && p.b == 0) {
      return "1";
    }
    std::string out;
    if (p.a == 1) {
      out += "q";
    } else if (p.a > 1) {
      out += "q^" + std::to_string(p.a);
    }
    if (p.b == 1) {
      out += "p";
    } else if (p.b > 1) {
      out += "p^" + std::to_string(p.b);
    }
    return out;
  }

  Elem parse(std::string const& text) const override {
    if (text == "1") {
      return one();
    }
    size_t       pos = 0;
    auto read_power = [&](char letter) -> std::int64_t {
      if (pos >= text.size() || text[pos] != letter) {
        return 0;
      }
      ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(text[pos])) {
          ++pos;
        }
        if (start == pos) {
          throw BadIndex("bad bicyclic exponent in \"" + text + "\"");
        }
        return std::stoll(text.substr(start, pos - start));
      }
      return 1;
    };
    std::int64_t const a = read_power('q');
    std::int64_t const b = read_power('p');
    if (pos != text.size() || (a == 0 && b == 0)) {
      throw BadIndex("cannot parse bicyclic element \"" + text + "\"");
    }
    return bicyclic_elem(a, b);
  }

  std::string element_grammar() const override {
    return "\"1\", \"p\", \"q\", or normal forms \"q^a p^b\" written "
           "q[^a][p[^b]], e.g. \"qp\", \"q^2p^3\"";
  }

  DeclaredFlags declared() const override {
    DeclaredFlags f;
    f.nonunits_finite             = TriState::False;
    f.nonunit_r_classes_finite    = TriState::False;
    f.left_cancellative           = TriState::False;
    f.right_cancellative          = TriState::False;
    f.all_orbits_amenable_capable = TriState::True;  // trivial quotients
    // single bisimple D-class: infinitely many L-classes, but trivial
    // Schutzenberger groups and a trivial circle action
    f.finitely_many_l_amenable_schutz = TriState::False;
    f.schutz_finite_or_abelian_local  = TriState::True;
    f.regular                         = TriState::True;
    return f;
  }

 private:
  GroupPtr unit_group_;
};

}  // namespace

MonoidPtr make_bicyclic() {
  return std::make_shared<BicyclicMonoid>();
}

// ---------------------------------------------------------------------
// coset monoid over Z
// ---------------------------------------------------------------------

namespace {

// element: coset a + mZ encoded (m, a) with a canonical (0 <= a < m when
// m >= 1); m = 0 is the trivial subgroup, i.e. the singleton {a}
Elem coset_elem(std::int64_t m, std::int64_t a) {
  if (m > 0) {
    a %= m;
    if (a < 0) a += m;
  }
  Elem out;
  enc::put_i64(out, m);
  enc::put_i64(out, a);
  return out;
}

class CosetZMonoid final : public MonoidOracle {
 public:
  explicit CosetZMonoid(std::vector<std::uint64_t> moduli)
      : unit_group_(std::make_shared<FgAbelianGroup>(
            1, std::vector<std::uint64_t>{})) {
    // join-closure of the given subgroups (plus trivial); joins of
    // subgroups of Z are gcds of their moduli
    std::set<std::int64_t> lattice{0};
    for (auto m : moduli) {
      lattice.insert(static_cast<std::int64_t>(m));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::int64_t> current(lattice.begin(), lattice.end());
      for (auto x : current) {
        for (auto y : current) {
          if (lattice.insert(std::gcd(x, y)).second) {
            grew = true;
          }
        }
      }
    }
    lattice_.assign(lattice.begin(), lattice.end());
  }

  std::string name() const override {
    std::string out = "cosetZ:";
    bool        first = true;
    for (auto m : lattice_) {
      if (m == 0) continue;
      if (!first) out += ",";
      out += std::to_string(m);
      first = false;
    }
    return out;
  }

  Elem one() const override { return coset_elem(0, 0); }

  Elem mul(Elem const& x, Elem const& y) const override {
    auto const [mx, ax] = decode(x);
    auto const [my, ay] = decode(y);
    return coset_elem(std::gcd(mx, my), ax + ay);
  }

  bool is_unit(Elem const& x) const override { return decode(x).first == 0; }

  Elem unit_inverse(Elem const& x) const override {
    auto const [m, a] = decode(x);
    if (m != 0) {
      throw BadIndex("unit_inverse of a non-unit");
    }
    return coset_elem(0, -a);
  }

  GroupPtr unit_group() const override { return unit_group_; }

  Elem unit_to_group(Elem const& x) const override {
    auto const [m, a] = decode(x);
    if (m != 0) {
      throw BadIndex("not a unit");
    }
    return unit_group_->make({a});
  }

  Elem group_to_unit(Elem const& g) const override {
    return coset_elem(0, unit_group_->coords(g)[0]);
  }

  StabiliserQuotient orbit_data(Elem const& s) const override {
    auto const [m, a] = decode(s);
    if (m == 0) {
      throw BadIndex("orbit_data of a unit");
    }
    // the orbit of a+mZ is the set of all cosets of mZ; its pointwise
    // stabiliser is mZ itself, so the quotient is Z/m
    StabiliserQuotient out;
    out.orbit_id = "mod:" + std::to_string(m);
    auto quotient = TableGroup::cyclic(static_cast<size_t>(m));
    out.quotient  = quotient;
    auto z        = unit_group_;
    out.hom       = [m = m, z](Elem const& g) {
      std::int64_t r = z->coords(g)[0] % m;
      if (r < 0) r += m;
      return enc::u32(static_cast<std::uint32_t>(r));
    };
    out.translate = [m = m, quotient](Elem const& s_elem, Elem const& q) {
      size_t             pos = 0;
      std::int64_t const sm  = enc::get_i64(s_elem, pos);
      std::int64_t const sa  = enc::get_i64(s_elem, pos);
      return coset_elem(sm, sa + quotient->index(q));
    };
    return out;
  }

  TriState units_equal_identity_j_class() const override {
    // documented property: the only left or right units are the singletons
    return TriState::True;
  }

  std::string label(Elem const& x) const override {
    auto const [m, a] = decode(x);
    if (m == 0) {
      return "{" + std::to_string(a) + "}";
    }
    if (m == 1) {
      return "Z";
    }
    return std::to_string(a) + "+" + std::to_string(m) + "Z";
  }

  Elem parse(std::string const& text) const override {
    if (text.empty()) {
      throw BadIndex("empty coset label");
    }
    if (text == "Z") {
      return require_in_lattice(coset_elem(1, 0), text);
    }
    if (text.front() == '{' && text.back() == '}') {
      return coset_elem(0, std::stoll(text.substr(1, text.size() - 2)));
    }
    auto const plus = text.rfind('+');
    if (plus == std::string::npos || text.back() != 'Z') {
      throw BadIndex("cannot parse coset \"" + text
                     + "\" (expected {a}, a+mZ or Z)");
    }
    std::int64_t const a = std::stoll(text.substr(0, plus));
    std::int64_t const m
        = std::stoll(text.substr(plus + 1, text.size() - plus - 2));
    if (m <= 0) {
      throw BadIndex("coset modulus must be positive");
    }
    return require_in_lattice(coset_elem(m, a), text);
  }

  std::string element_grammar() const override {
    return "units \"{a}\"; cosets \"a+mZ\" for lattice moduli m; \"Z\" for "
           "the whole group";
  }

  DeclaredFlags declared() const override {
    DeclaredFlags f;
    f.nonunits_finite             = TriState::True;  // sum of lattice indices
    f.left_cancellative           = TriState::False;
    f.right_cancellative          = TriState::False;
    f.all_orbits_amenable_capable = TriState::True;  // finite cyclic quotients
    // each non-unit D-class is the coset space of one subgroup: a single
    // H-class with finite cyclic Schutzenberger group
    f.finitely_many_l_amenable_schutz = TriState::True;
    f.schutz_finite_or_abelian_local  = TriState::True;
    f.regular                         = TriState::True;
    return f;
  }

 private:
  std::pair<std::int64_t, std::int64_t> decode(Elem const& x) const {
    size_t             pos = 0;
    std::int64_t const m   = enc::get_i64(x, pos);
    std::int64_t const a   = enc::get_i64(x, pos);
    if (pos != x.size() || m < 0) {
      throw BadIndex("bad coset element encoding");
    }
    return {m, a};
  }

  Elem require_in_lattice(Elem const& e, std::string const& text) const {
    auto const m = decode(e).first;
    if (!std::binary_search(lattice_.begin(), lattice_.end(), m)) {
      throw BadIndex("modulus of \"" + text
                     + "\" is not in the subgroup lattice");
    }
    return e;
  }

  std::shared_ptr<FgAbelianGroup const> unit_group_;
  std::vector<std::int64_t>             lattice_;  // sorted; 0 = trivial
};

}  // namespace

MonoidPtr make_coset_monoid(std::vector<std::uint64_t> subgroup_moduli) {
  return std::make_shared<CosetZMonoid>(std::move(subgroup_moduli));
}

// ---------------------------------------------------------------------
// coset monoid over a finite group
// ---------------------------------------------------------------------

namespace {

class CosetFiniteMonoid final : public MonoidOracle {
 public:
  CosetFiniteMonoid(std::shared_ptr<TableGroup const>              group,
                    std::vector<std::vector<std::uint32_t>> const& gens)
      : group_(std::move(group)) {
    std::set<std::vector<std::uint32_t>> lattice;
    lattice.insert({group_->identity_index()});
    for (auto const& g : gens) {
      lattice.insert(group_->subgroup_closure(g));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<std::uint32_t>> current(lattice.begin(),
                                                      lattice.end());
      for (auto const& x : current) {
        for (auto const& y : current) {
          std::vector<std::uint32_t> both = x;
          both.insert(both.end(), y.begin(), y.end());
          if (lattice.insert(group_->subgroup_closure(both)).second) {
            grew = true;
          }
        }
      }
    }
    subgroups_.assign(lattice.begin(), lattice.end());
    std::sort(subgroups_.begin(), subgroups_.end(),
              [](auto const& a, auto const& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    for (auto const& h : subgroups_) {
      if (!group_->is_normal_subgroup(h)) {
        throw UnsupportedGroup(
            "coset monoid requires normal subgroups (a generated join is "
            "not normal)");
      }
    }
  }

  std::string name() const override {
    return "coset monoid over " + group_->description();
  }

  Elem one() const override {
    return elem(0, group_->identity_index());
  }

  Elem mul(Elem const& x, Elem const& y) const override {
    auto const [hx, ax] = decode(x);
    auto const [hy, ay] = decode(y);
    std::vector<std::uint32_t> both = subgroups_[hx];
    both.insert(both.end(), subgroups_[hy].begin(), subgroups_[hy].end());
    auto const join = group_->subgroup_closure(both);
    return elem(subgroup_index(join), group_->product_index(ax, ay));
  }

  bool is_unit(Elem const& x) const override { return decode(x).first == 0; }

  Elem unit_inverse(Elem const& x) const override {
    auto const [h, a] = decode(x);
    if (h != 0) {
      throw BadIndex("unit_inverse of a non-unit");
    }
    return elem(0, group_->inverse_index(a));
  }

  GroupPtr unit_group() const override { return group_; }

  Elem unit_to_group(Elem const& x) const override {
    auto const [h, a] = decode(x);
    if (h != 0) {
      throw BadIndex("not a unit");
    }
    return enc::u32(a);
  }

  Elem group_to_unit(Elem const& g) const override {
    return elem(0, group_->index(g));
  }

  StabiliserQuotient orbit_data(Elem const& s) const override {
    auto const [h, a] = decode(s);
    if (h == 0) {
      throw BadIndex("orbit_data of a unit");
    }
    auto const quotient = group_->quotient_by(subgroups_[h]);
    StabiliserQuotient out;
    out.orbit_id = "sub:" + std::to_string(h);
    out.quotient = quotient.group;
    out.hom = [coset_of = quotient.coset_of, g = group_](Elem const& u) {
      return enc::u32(coset_of[g->index(u)]);
    };
    out.translate = [this, h = h, quotient](Elem const& s_elem,
                                            Elem const& q) {
      auto const [sh, sa] = decode(s_elem);
      std::uint32_t const rep
          = quotient.representative[quotient.group->index(q)];
      return elem(sh, group_->product_index(sa, rep));
    };
    return out;
  }

  TriState units_equal_identity_j_class() const override {
    return TriState::True;
  }

  std::string label(Elem const& x) const override {
    auto const [h, a] = decode(x);
    if (h == 0) {
      return "{" + group_->name(a) + "}";
    }
    return group_->name(canonical_rep(h, a)) + "+S" + std::to_string(h);
  }

  Elem parse(std::string const& text) const override {
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
      std::string const inner = text.substr(1, text.size() - 2);
      for (std::uint32_t i = 0; i < group_->size(); ++i) {
        if (group_->name(i) == inner) {
          return elem(0, i);
        }
      }
      throw BadIndex("unknown unit \"" + text + "\"");
    }
    auto const sep = text.rfind("+S");
    if (sep == std::string::npos) {
      throw BadIndex("cannot parse coset \"" + text + "\"");
    }
    std::string const rep = text.substr(0, sep);
    size_t const      h   = std::stoul(text.substr(sep + 2));
    if (h >= subgroups_.size()) {
      throw BadIndex("unknown subgroup index in \"" + text + "\"");
    }
    for (std::uint32_t i = 0; i < group_->size(); ++i) {
      if (group_->name(i) == rep) {
        return elem(static_cast<std::uint32_t>(h), i);
      }
    }
    throw BadIndex("unknown representative in \"" + text + "\"");
  }

  std::string element_grammar() const override {
    return "units \"{name}\"; cosets \"name+Sk\" for the k-th lattice "
           "subgroup";
  }

  DeclaredFlags declared() const override {
    DeclaredFlags f;
    f.nonunits_finite             = TriState::True;
    f.all_orbits_amenable_capable = TriState::True;
    f.regular                     = TriState::True;
    return f;
  }

  size_t subgroup_count() const { return subgroups_.size(); }

 private:
  Elem elem(std::uint32_t h, std::uint32_t a) const {
    Elem out;
    enc::put_u32(out, h);
    enc::put_u32(out, canonical_rep(h, a));
    return out;
  }

  std::uint32_t canonical_rep(std::uint32_t h, std::uint32_t a) const {
    std::uint32_t best = UINT32_MAX;
    for (auto x : subgroups_[h]) {
      best = std::min(best, group_->product_index(x, a));
    }
    return best;
  }

  std::pair<std::uint32_t, std::uint32_t> decode(Elem const& x) const {
    size_t              pos = 0;
    std::uint32_t const h   = enc::get_u32(x, pos);
    std::uint32_t const a   = enc::get_u32(x, pos);
    if (pos != x.size() || h >= subgroups_.size() || a >= group_->size()) {
      throw BadIndex("bad coset element encoding");
    }
    return {h, a};
  }

  std::uint32_t subgroup_index(std::vector<std::uint32_t> const& h) const {
    auto it = std::find(subgroups_.begin(), subgroups_.end(), h);
    if (it == subgroups_.end()) {
      throw BadIndex("subgroup join escaped the lattice");
    }
    return static_cast<std::uint32_t>(it - subgroups_.begin());
  }

  std::shared_ptr<TableGroup const>       group_;
  std::vector<std::vector<std::uint32_t>> subgroups_;
};

}  // namespace

MonoidPtr make_coset_monoid(
    std::shared_ptr<TableGroup const>              group,
    std::vector<std::vector<std::uint32_t>> const& subgroup_generators) {
  return std::make_shared<CosetFiniteMonoid>(std::move(group),
                                             subgroup_generators);
}

// ---------------------------------------------------------------------
// F x S
// ---------------------------------------------------------------------

namespace {

class FreeTimesSemilattice final : public MonoidOracle {
 public:
  FreeTimesSemilattice(size_t rank,
                       std::vector<FreeGroup::FiniteQuotient> quotients)
      : free_(std::make_shared<FreeGroup>(rank, std::move(quotients))) {}

  std::string name() const override {
    return "F" + std::to_string(free_->rank()) + "xS";
  }

  Elem one() const override { return elem(Elem(), true); }

  Elem mul(Elem const& x, Elem const& y) const override {
    auto const [wx, bx] = decode(x);
    auto const [wy, by] = decode(y);
    return elem(free_->mul(wx, wy), bx && by);
  }

  bool is_unit(Elem const& x) const override { return decode(x).second; }

  Elem unit_inverse(Elem const& x) const override {
    auto const [w, b] = decode(x);
    if (!b) {
      throw BadIndex("unit_inverse of a non-unit");
    }
    return elem(free_->inv(w), true);
  }

  GroupPtr unit_group() const override { return free_; }

  Elem unit_to_group(Elem const& x) const override {
    auto const [w, b] = decode(x);
    if (!b) {
      throw BadIndex("not a unit");
    }
    return w;
  }

  Elem group_to_unit(Elem const& g) const override { return elem(g, true); }

  StabiliserQuotient orbit_data(Elem const& s) const override {
    if (is_unit(s)) {
      throw BadIndex("orbit_data of a unit");
    }
    // F x {0} is a single orbit with trivial pointwise stabiliser: the
    // quotient is F itself, which this family declares non-amenable
    StabiliserQuotient out;
    out.orbit_id             = "free-orbit";
    out.quotient             = free_;
    out.declared_nonamenable = true;
    out.hom = [](Elem const& g) { return g; };
    out.translate = [this](Elem const& s_elem, Elem const& v) {
      auto const [w, b] = decode(s_elem);
      return elem(free_->mul(w, v), b);
    };
    return out;
  }

  TriState units_equal_identity_j_class() const override {
    return TriState::True;  // products never return to F x {1}
  }

  std::string label(Elem const& x) const override {
    auto const [w, b] = decode(x);
    if (b) {
      return free_->label(w);
    }
    return "(" + free_->label(w) + ",0)";
  }

  Elem parse(std::string const& text) const override {
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
      auto const comma = text.rfind(',');
      if (comma == std::string::npos) {
        throw BadIndex("cannot parse \"" + text + "\"");
      }
      std::string const word = text.substr(1, comma - 1);
      std::string const bit  = text.substr(comma + 1,
                                           text.size() - comma - 2);
      if (bit != "0" && bit != "1") {
        throw BadIndex("bit component must be 0 or 1 in \"" + text + "\"");
      }
      return elem(free_->parse_word(word), bit == "1");
    }
    return elem(free_->parse_word(text), true);
  }

  std::string element_grammar() const override {
    return "units as reduced words (\"x\", \"xY\", \"1\"); pairs "
           "\"(word,bit)\", e.g. \"(y,0)\"";
  }

  DeclaredFlags declared() const override {
    DeclaredFlags f;
    f.nonunits_finite             = TriState::False;
    f.nonunit_r_classes_finite    = TriState::False;
    f.left_cancellative           = TriState::False;
    f.right_cancellative          = TriState::False;
    f.all_orbits_amenable_capable = TriState::False;
    // F x {0} is one H-class whose Schutzenberger group is F itself
    f.finitely_many_l_amenable_schutz = TriState::False;
    f.schutz_finite_or_abelian_local  = TriState::False;
    f.regular                         = TriState::True;
    return f;
  }

 private:
  Elem elem(Elem const& word, bool unit_bit) const {
    Elem out(1, unit_bit ? '\1' : '\0');
    out += word;
    return out;
  }

  std::pair<Elem, bool> decode(Elem const& x) const {
    if (x.empty() || (x[0] != '\0' && x[0] != '\1')) {
      throw BadIndex("bad FxS element encoding");
    }
    return {x.substr(1), x[0] == '\1'};
  }

  std::shared_ptr<FreeGroup const> free_;
};

}  // namespace

MonoidPtr make_free_times_semilattice(
    size_t rank, std::vector<FreeGroup::FiniteQuotient> quotients) {
  return std::make_shared<FreeTimesSemilattice>(rank, std::move(quotients));
}

MonoidPtr make_f2xs_default() {
  // images generate S_5 and are pairwise distinct together with their
  // inverses, so the quotient separates {x, y, x^-1, y^-1}
  auto s5 = TableGroup::from_permutations(
      5, {{1, 2, 3, 4, 0}, {1, 2, 3, 0, 4}});
  FreeGroup::FiniteQuotient quotient;
  quotient.target = s5;
  std::vector<std::vector<std::uint32_t>> const images{{1, 2, 3, 4, 0},
                                                       {1, 2, 3, 0, 4}};
  for (auto const& img : images) {
    std::string name = "[";
    for (size_t t = 0; t < img.size(); ++t) {
      if (t > 0) name += " ";
      name += std::to_string(img[t]);
    }
    name += "]";
    bool found = false;
    for (std::uint32_t i = 0; i < s5->size(); ++i) {
      if (s5->name(i) == name) {
        quotient.gen_images.push_back(enc::u32(i));
        found = true;
        break;
      }
    }
    if (!found) {
      throw BadIndex("generator image not found in S5 closure");
    }
  }
  return make_free_times_semilattice(2, {std::move(quotient)});
}

// ---------------------------------------------------------------------
// fixture registry
// ---------------------------------------------------------------------

namespace {

std::string const kTableGrammar
    = "element names from the multiplication table (\"all\" selects every "
      "element)";

}  // namespace

std::vector<FixtureInfo> fixture_list() {
  return {
      {"trivial", "1-element monoid", kTableGrammar},
      {"SL2", "2-element semilattice {1,0}", kTableGrammar},
      {"T2", "full transformation monoid on 2 points (4 elements)",
       kTableGrammar},
      {"T3", "full transformation monoid on 3 points (27 elements)",
       kTableGrammar},
      {"T4", "full transformation monoid on 4 points (256 elements)",
       kTableGrammar},
      {"Z2", "cyclic group of order 2 as a monoid", kTableGrammar},
      {"Z3", "cyclic group of order 3 as a monoid", kTableGrammar},
      {"Z4", "cyclic group of order 4 as a monoid", kTableGrammar},
      {"Z6", "cyclic group of order 6 as a monoid", kTableGrammar},
      {"Z2xSL2", "direct product Z/2 x 2-element semilattice",
       kTableGrammar},
      {"SL2xSL2", "direct product of two 2-element semilattices",
       kTableGrammar},
      {"bicyclic", "bicyclic monoid <p,q | pq=1> (structured)",
       make_bicyclic()->element_grammar()},
      {"cosetZ", "coset monoid of Z, subgroups 2Z and 3Z (structured); "
                 "\"cosetZ:m1,m2,...\" for other subgroup sets",
       make_coset_monoid({2, 3})->element_grammar()},
      {"F2xS", "free group of rank 2 times 2-element semilattice "
               "(structured; builder refuses)",
       make_f2xs_default()->element_grammar()},
  };
}

MonoidPtr get_fixture(std::string const& name) {
  if (name == "trivial") return wrap_finite(make_trivial_monoid(), name);
  if (name == "SL2") return wrap_finite(make_semilattice2(), name);
  if (name == "T2") return wrap_finite(make_transformation_monoid(2), name);
  if (name == "T3") return wrap_finite(make_transformation_monoid(3), name);
  if (name == "T4") return wrap_finite(make_transformation_monoid(4), name);
  if (name == "Z2") return wrap_finite(make_cyclic_monoid(2), name);
  if (name == "Z3") return wrap_finite(make_cyclic_monoid(3), name);
  if (name == "Z4") return wrap_finite(make_cyclic_monoid(4), name);
  if (name == "Z6") return wrap_finite(make_cyclic_monoid(6), name);
  if (name == "Z2xSL2") {
    return wrap_finite(direct_product(make_cyclic_monoid(2),
                                      make_semilattice2()),
                       name);
  }
  if (name == "SL2xSL2") {
    return wrap_finite(direct_product(make_semilattice2(),
                                      make_semilattice2()),
                       name);
  }
  if (name == "bicyclic") return make_bicyclic();
  if (name == "F2xS") return make_f2xs_default();
  if (name == "cosetZ") return make_coset_monoid({2, 3});
  if (name.rfind("cosetZ:", 0) == 0) {
    std::vector<std::uint64_t> moduli;
    std::string                rest = name.substr(7);
    size_t                     pos  = 0;
    while (pos < rest.size()) {
      size_t const comma = rest.find(',', pos);
      std::string const tok
          = rest.substr(pos, comma == std::string::npos ? comma
                                                        : comma - pos);
      moduli.push_back(std::stoull(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (moduli.empty()) {
      throw BadIndex("cosetZ needs at least one subgroup modulus");
    }
    return make_coset_monoid(moduli);
  }
  throw BadIndex("unknown fixture \"" + name + "\"");
}

}  // namespace soficlab
