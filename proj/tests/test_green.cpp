#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "soficlab/errors.hpp"
#include "soficlab/fixtures.hpp"
#include "soficlab/green.hpp"

using namespace soficlab;

namespace {

std::vector<std::string> const kSmallFixtures{
    "trivial", "SL2", "T2", "T3", "Z2", "Z3",
    "Z4",      "Z6",  "Z2xSL2", "SL2xSL2"};

FiniteMonoid fixture_table(std::string const& name) {
  auto const  m  = get_fixture(name);
  auto const* fm = m->as_finite();
  REQUIRE(fm != nullptr);
  return *fm;
}

}  // namespace

TEST_CASE("two-element semilattice: two J-classes, nothing merges") {
  auto const m     = make_semilattice2();
  auto const green = green_relations(m);
  CHECK(green.n_j == 2);
  CHECK(green.n_d == 2);
  CHECK(green.n_r == 2);
  CHECK(green.n_l == 2);
  CHECK(green.n_h == 2);
  CHECK(green.j_class[0] != green.j_class[1]);
}

TEST_CASE("groups are a single class under all five relations") {
  auto const m     = make_cyclic_monoid(3);
  auto const green = green_relations(m);
  CHECK(green.n_r == 1);
  CHECK(green.n_l == 1);
  CHECK(green.n_h == 1);
  CHECK(green.n_d == 1);
  CHECK(green.n_j == 1);
}

TEST_CASE("T2: units D-class and constants D-class") {
  auto const m     = fixture_table("T2");
  auto const green = green_relations(m);
  CHECK(green.n_d == 2);
  auto const id = m.index_of("01");
  auto const sw = m.index_of("10");
  auto const c0 = m.index_of("00");
  auto const c1 = m.index_of("11");
  CHECK(green.d_class[id] == green.d_class[sw]);
  CHECK(green.h_class[id] == green.h_class[sw]);
  CHECK(green.d_class[c0] == green.d_class[c1]);
  // constants: one R-class, two singleton L-classes (hence two H-classes)
  CHECK(green.r_class[c0] == green.r_class[c1]);
  CHECK(green.l_class[c0] != green.l_class[c1]);
  CHECK(green.h_class[c0] != green.h_class[c1]);
  CHECK(green.h_members[green.h_class[c0]].size() == 1);
  auto const& box = green.eggbox[green.d_class[c0]];
  CHECK(box.r_ids.size() == 1);
  CHECK(box.l_ids.size() == 2);
}

TEST_CASE("SCC partitions equal the definitional oracle on small fixtures") {
  for (auto const& name : kSmallFixtures) {
    auto const m = fixture_table(name);
    REQUIRE(m.size() <= 60);
    auto const fast  = green_relations(m);
    auto const slow  = green_relations_bruteforce(m);
    CAPTURE(name);
    CHECK(fast.same_partitions(slow));
    CHECK(fast.n_d == fast.n_j);  // D = J on finite monoids
    CHECK(fast.d_class == fast.j_class);
  }
}

TEST_CASE("egg-box cells: every R x L cell in a D-class is one H-class") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    for (auto const& box : green.eggbox) {
      for (size_t r = 0; r < box.r_ids.size(); ++r) {
        for (size_t l = 0; l < box.l_ids.size(); ++l) {
          // collect elements in the (r, l) cell and check they form
          // exactly the recorded H-class
          std::set<std::uint32_t> cell;
          for (std::uint32_t x = 0; x < m.size(); ++x) {
            if (green.r_class[x] == box.r_ids[r]
                && green.l_class[x] == box.l_ids[l]) {
              cell.insert(x);
            }
          }
          REQUIRE(!cell.empty());
          auto const& members = green.h_members[box.h_grid[r][l]];
          CHECK(cell == std::set<std::uint32_t>(members.begin(),
                                                members.end()));
        }
      }
    }
  }
}

TEST_CASE("group of units") {
  auto const t3 = fixture_table("T3");
  std::vector<std::uint32_t> t3_units;
  CHECK(group_of_units(t3, &t3_units)->size() == 6);

  auto const sl = fixture_table("SL2");
  CHECK(group_of_units(sl, nullptr)->size() == 1);

  auto const z2sl = fixture_table("Z2xSL2");
  CHECK(group_of_units(z2sl, nullptr)->size() == 2);
}

TEST_CASE("the J-class of the identity is the unit set") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    CAPTURE(name);
    CHECK(j_class_of_identity_is_units(m, green));
  }
}

TEST_CASE("Schutzenberger groups act simply transitively: order = |H|") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    CAPTURE(name);
    for (std::uint32_t h = 0; h < green.n_h; ++h) {
      auto const schutz = schutzenberger_group(m, green, h);
      CHECK(schutz.order() == green.h_members[h].size());
    }
  }
}

TEST_CASE("Schutzenberger invariants agree across a D-class") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    for (std::uint32_t d = 0; d < green.n_d; ++d) {
      std::set<std::uint32_t> h_ids;
      for (auto x : green.d_members[d]) {
        h_ids.insert(green.h_class[x]);
      }
      std::optional<size_t>              order;
      std::optional<std::vector<size_t>> orders_multiset;
      for (auto h : h_ids) {
        auto const schutz = schutzenberger_group(m, green, h);
        if (!order.has_value()) {
          order           = schutz.order();
          orders_multiset = schutz.element_orders;
        } else {
          CHECK(*order == schutz.order());
          CHECK(*orders_multiset == schutz.element_orders);
        }
      }
    }
  }
}

TEST_CASE("specific Schutzenberger groups") {
  auto const t2    = fixture_table("T2");
  auto const green = green_relations(t2);
  // singleton H-class of a constant
  auto const c0 = schutzenberger_group(t2, green, green.h_class[t2.index_of("00")]);
  CHECK(c0.order() == 1);
  // unit H-class {id, swap}
  auto const units
      = schutzenberger_group(t2, green, green.h_class[t2.identity()]);
  CHECK(units.order() == 2);
  CHECK(units.abelian);

  // unit H-class of a group-as-monoid is the group acting on itself
  auto const z6       = fixture_table("Z6");
  auto const z6_green = green_relations(z6);
  auto const whole
      = schutzenberger_group(z6, z6_green, z6_green.h_class[z6.identity()]);
  CHECK(whole.order() == 6);
  CHECK(whole.abelian);
  CHECK(whole.element_orders == std::vector<size_t>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("Schutzenberger permutation sets are groups") {
  auto const m     = fixture_table("T3");
  auto const green = green_relations(m);
  for (std::uint32_t h = 0; h < green.n_h; ++h) {
    auto const s = schutzenberger_group(m, green, h);
    std::set<std::vector<std::uint32_t>> const perms(s.perms.begin(),
                                                     s.perms.end());
    // identity present
    std::vector<std::uint32_t> id(s.h_members.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(perms.count(id) == 1);
    // closed under inverse
    for (auto const& f : s.perms) {
      std::vector<std::uint32_t> inv(f.size());
      for (std::uint32_t i = 0; i < f.size(); ++i) {
        inv[f[i]] = i;
      }
      CHECK(perms.count(inv) == 1);
    }
  }
}

TEST_CASE("circle action is a genuine right action") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    auto const units = m.units();
    for (std::uint32_t d = 0; d < green.n_d; ++d) {
      auto const action = circle_action(m, green, d);
      REQUIRE(action.unit_indices == units);
      // identity unit fixes everything
      for (size_t hi = 0; hi < action.h_ids.size(); ++hi) {
        size_t const id_pos
            = std::find(units.begin(), units.end(), m.identity())
              - units.begin();
        CHECK(action.act[hi][id_pos] == hi);
      }
      // (H o g) o h = H o (gh), exhaustively
      for (size_t hi = 0; hi < action.h_ids.size(); ++hi) {
        for (size_t g = 0; g < units.size(); ++g) {
          for (size_t h = 0; h < units.size(); ++h) {
            std::uint32_t const gh = m.product(units[g], units[h]);
            size_t const gh_pos
                = std::find(units.begin(), units.end(), gh) - units.begin();
            REQUIRE(action.act[action.act[hi][g]][h]
                    == action.act[hi][gh_pos]);
          }
        }
      }
    }
  }
}

TEST_CASE("T2 constants: swap transposes the two singleton H-classes") {
  auto const m      = fixture_table("T2");
  auto const green  = green_relations(m);
  auto const action = circle_action(m, green, green.d_class[m.index_of("00")]);
  REQUIRE(action.h_ids.size() == 2);
  auto const units  = m.units();
  size_t const sw_pos
      = std::find(units.begin(), units.end(), m.index_of("10"))
        - units.begin();
  CHECK(action.act[0][sw_pos] == 1);
  CHECK(action.act[1][sw_pos] == 0);
}

TEST_CASE("Z2xSL2: trivial circle action on the single non-unit H-class") {
  auto const m     = fixture_table("Z2xSL2");
  auto const green = green_relations(m);
  auto const non_unit_d = green.d_class[m.index_of("(0,0)")];
  auto const action     = circle_action(m, green, non_unit_d);
  REQUIRE(action.h_ids.size() == 1);
  for (size_t g = 0; g < action.unit_indices.size(); ++g) {
    CHECK(action.act[0][g] == 0);
  }
}

TEST_CASE("egg-box summaries") {
  auto const z3 = eggbox_summary(fixture_table("Z3"));
  REQUIRE(z3.d_classes.size() == 1);
  CHECK(z3.d_classes[0].regular);
  CHECK(z3.d_classes[0].r_count == 1);
  CHECK(z3.d_classes[0].l_count == 1);
  CHECK(z3.unit_count == 3);

  auto const t2 = eggbox_summary(fixture_table("T2"));
  REQUIRE(t2.d_classes.size() == 2);
  for (auto const& d : t2.d_classes) {
    CHECK(d.regular);
    if (!d.contains_units) {
      CHECK(d.r_count == 1);
      CHECK(d.l_count == 2);
    }
  }

  auto const sl = eggbox_summary(fixture_table("SL2"));
  REQUIRE(sl.d_classes.size() == 2);
  CHECK(sl.d_classes[0].regular);
  CHECK(sl.d_classes[1].regular);
  CHECK(sl.units_equal_j_class_of_identity);

  auto const ascii = eggbox_ascii(fixture_table("T2"),
                                  green_relations(fixture_table("T2")));
  CHECK(ascii.find("[units]") != std::string::npos);
  CHECK(ascii.find("D0") != std::string::npos);
}

TEST_CASE("regular D-classes contain an idempotent") {
  for (auto const& name : kSmallFixtures) {
    auto const m     = fixture_table(name);
    auto const green = green_relations(m);
    auto const summary = eggbox_summary(m);
    for (auto const& d : summary.d_classes) {
      bool has_idempotent = false;
      for (auto x : green.d_members[d.d_id]) {
        has_idempotent |= m.is_idempotent(x);
      }
      CHECK(d.regular == has_idempotent);
    }
  }
}

TEST_CASE("T4 smoke: SCC green structure stays consistent") {
  auto const m     = fixture_table("T4");
  auto const green = green_relations(m);
  CHECK(green.n_d == green.n_j);
  CHECK(green.d_class == green.j_class);
  CHECK(j_class_of_identity_is_units(m, green));
  // |Schutz| = |H| on a few spot H-classes
  for (std::uint32_t h : {green.h_class[m.identity()],
                          green.h_class[m.index_of("0000")],
                          green.h_class[m.index_of("0012")]}) {
    CHECK(schutzenberger_group(m, green, h).order()
          == green.h_members[h].size());
  }
}
