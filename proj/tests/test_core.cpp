#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "soficlab/errors.hpp"
#include "soficlab/finite_monoid.hpp"
#include "soficlab/fixtures.hpp"
#include "soficlab/monoid.hpp"

using namespace soficlab;

TEST_CASE("semilattice table is a valid monoid with identity 1") {
  auto const m = make_semilattice2();
  CHECK(m.size() == 2);
  CHECK(m.name(m.identity()) == "1");
  CHECK(m.product(0, 1) == 1);
  CHECK(m.product(1, 1) == 1);
}

TEST_CASE("trivial 1x1 table") {
  auto const m = make_trivial_monoid();
  CHECK(m.size() == 1);
  CHECK(m.identity() == 0);
}

TEST_CASE("non-associative table is rejected with a witnessing triple") {
  // right-zero-ish table broken at one entry
  std::vector<std::vector<std::uint32_t>> table{
      {0, 1, 2}, {1, 2, 0}, {2, 1, 1}};
  try {
    make_finite_monoid(table, {"a", "b", "c"});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    auto const ij = table[e.i][e.j];
    auto const jk = table[e.j][e.k];
    CHECK(table[ij][e.k] != table[e.i][jk]);
  }
}

TEST_CASE("bad table entries and duplicate names are rejected") {
  CHECK_THROWS_AS(make_finite_monoid({{0, 9}, {1, 0}}, {"a", "b"}), BadIndex);
  CHECK_THROWS_AS(make_finite_monoid({{0, 1}, {1, 0}}, {"a", "a"}), BadIndex);
  CHECK_THROWS_AS(make_finite_monoid({{0, 0}, {0, 0}}, {"a", "b"}),
                  NoIdentity);
}

TEST_CASE("word products fold left to right, empty word gives identity") {
  auto const m = make_transformation_monoid(2);
  CHECK(m.word_product({}) == m.identity());
  auto const sw = m.index_of("10");
  CHECK(m.word_product({sw, sw}) == m.identity());

  auto const b = make_bicyclic();
  auto const p = b->parse("p");
  auto const q = b->parse("q");
  CHECK(b->word_product({}) == b->one());
  CHECK(b->word_product({p, q}) == b->one());
  CHECK(b->word_product({q, p}) == b->parse("qp"));
  CHECK(b->word_product({q, p}) != b->one());
}

TEST_CASE("bicyclic normal-form products") {
  auto const b = make_bicyclic();
  CHECK(b->mul(b->parse("p"), b->parse("q")) == b->one());
  CHECK(b->mul(b->parse("q"), b->parse("p")) == b->parse("qp"));
  // q^2 p^3 * q p^4 = q^2 p^6 since min(3,1) = 1
  CHECK(b->mul(b->parse("q^2p^3"), b->parse("qp^4")) == b->parse("q^2p^6"));
  CHECK(b->label(b->mul(b->parse("q^2p^3"), b->parse("qp^4"))) == "q^2p^6");
}

namespace {

// independent oracle: multiply q^a p^b words by rewriting pq -> 1
std::pair<int, int> rewrite_product(int a, int b, int c, int d) {
  // word q^a p^b q^c p^d; only the boundary p^b q^c cancels
  int const m = std::min(b, c);
  return {a + c - m, b + d - m};
}

}  // namespace

TEST_CASE("bicyclic product agrees with word rewriting for indices <= 10") {
  auto const b = make_bicyclic();
  for (int a = 0; a <= 10; ++a) {
    for (int bb = 0; bb <= 10; ++bb) {
      for (int c = 0; c <= 10; ++c) {
        for (int d = 0; d <= 10; ++d) {
          Elem lhs;
          enc::put_i64(lhs, a);
          enc::put_i64(lhs, bb);
          Elem rhs;
          enc::put_i64(rhs, c);
          enc::put_i64(rhs, d);
          auto const [ea, eb] = rewrite_product(a, bb, c, d);
          Elem expect;
          enc::put_i64(expect, ea);
          enc::put_i64(expect, eb);
          REQUIRE(b->mul(lhs, rhs) == expect);
        }
      }
    }
  }
}

TEST_CASE("finite monoids have no proper one-sided units") {
  for (auto const& name :
       {"trivial", "SL2", "T2", "T3", "Z6", "Z2xSL2", "SL2xSL2"}) {
    auto const  m  = get_fixture(name);
    auto const* fm = m->as_finite();
    REQUIRE(fm != nullptr);
    REQUIRE(fm->size() <= 200);
    for (std::uint32_t x = 0; x < fm->size(); ++x) {
      for (std::uint32_t y = 0; y < fm->size(); ++y) {
        if (fm->product(x, y) == fm->identity()) {
          CHECK(fm->product(y, x) == fm->identity());
        }
      }
    }
  }
}

TEST_CASE("transformation monoid sizes and unit counts") {
  CHECK(make_transformation_monoid(1).size() == 1);
  CHECK(make_transformation_monoid(2).size() == 4);
  auto const t3 = make_transformation_monoid(3);
  CHECK(t3.size() == 27);
  // brute-force count of invertible maps
  size_t units = 0;
  for (std::uint32_t x = 0; x < t3.size(); ++x) {
    units += t3.is_unit(x);
  }
  CHECK(units == 6);
  CHECK_THROWS_AS(make_transformation_monoid(6), CapExceeded);
  CHECK_THROWS_AS(make_transformation_monoid(0), BadIndex);
}

TEST_CASE("direct products") {
  auto const sl = make_semilattice2();
  auto const trivial_sl = direct_product(make_trivial_monoid(), sl);
  REQUIRE(trivial_sl.size() == sl.size());
  for (std::uint32_t i = 0; i < sl.size(); ++i) {
    for (std::uint32_t j = 0; j < sl.size(); ++j) {
      CHECK(trivial_sl.product(i, j) == sl.product(i, j));
    }
  }

  auto const slsl = direct_product(sl, sl);
  CHECK(slsl.size() == 4);
  CHECK(slsl.units().size() == 1);

  auto const z2sl = direct_product(make_cyclic_monoid(2), sl);
  CHECK(z2sl.size() == 4);
  CHECK(z2sl.units().size() == 2);

  CHECK_THROWS_AS(
      direct_product(make_transformation_monoid(4), make_transformation_monoid(4),
                     1000),
      CapExceeded);
}

TEST_CASE("cancellativity scan") {
  auto const z3 = cancellativity_check(make_cyclic_monoid(3));
  CHECK(z3.left);
  CHECK(z3.right);
  auto const sl = cancellativity_check(make_semilattice2());
  CHECK(!sl.left);
  CHECK(!sl.right);
  auto const t2 = cancellativity_check(make_transformation_monoid(2));
  CHECK(!t2.left);
  CHECK(!t2.right);
}

TEST_CASE("coset monoid over Z: products") {
  auto const m = make_coset_monoid({2, 3});
  CHECK(m->mul(m->parse("1+2Z"), m->parse("0+2Z")) == m->parse("1+2Z"));
  CHECK(m->mul(m->parse("{3}"), m->parse("{4}")) == m->parse("{7}"));
  // 2Z v 3Z = Z by gcd
  CHECK(m->mul(m->parse("1+2Z"), m->parse("1+3Z")) == m->parse("Z"));
  CHECK(m->label(m->mul(m->parse("1+2Z"), m->parse("1+3Z"))) == "Z");
  CHECK(m->is_unit(m->parse("{5}")));
  CHECK(!m->is_unit(m->parse("0+2Z")));
  CHECK(m->mul(m->parse("{5}"), m->unit_inverse(m->parse("{5}")))
        == m->one());
  // moduli outside the lattice are rejected
  CHECK_THROWS_AS(m->parse("0+5Z"), BadIndex);
}

TEST_CASE("coset monoid over Z: translate matches multiplication") {
  // exhaustively for cosets of index <= 12 and units |g| <= 10
  auto const m = make_coset_monoid({2, 3, 4, 12});
  for (std::int64_t mod : {2, 3, 4, 6, 12, 1}) {
    for (std::int64_t a = 0; a < mod; ++a) {
      Elem coset;
      enc::put_i64(coset, mod);
      enc::put_i64(coset, a);
      auto const record = m->orbit_data(coset);
      for (std::int64_t g = -10; g <= 10; ++g) {
        Elem unit;
        enc::put_i64(unit, 0);
        enc::put_i64(unit, g);
        auto const through_quotient
            = record.translate(coset, record.hom(m->unit_to_group(unit)));
        REQUIRE(through_quotient == m->mul(coset, unit));
      }
    }
  }
}

TEST_CASE("coset monoid over Z: hom is a morphism with orbit-fixing kernel") {
  auto const m      = make_coset_monoid({2, 3});
  auto const record = m->orbit_data(m->parse("0+2Z"));
  auto const g      = m->unit_group();
  for (std::int64_t x = -6; x <= 6; ++x) {
    for (std::int64_t y = -6; y <= 6; ++y) {
      auto const gx = m->unit_to_group(m->parse("{" + std::to_string(x) + "}"));
      auto const gy = m->unit_to_group(m->parse("{" + std::to_string(y) + "}"));
      REQUIRE(record.hom(g->mul(gx, gy))
              == record.quotient->mul(record.hom(gx), record.hom(gy)));
      if (record.hom(gx) == record.quotient->one()) {
        // kernel elements fix the whole orbit pointwise
        for (std::int64_t a = 0; a < 2; ++a) {
          Elem coset;
          enc::put_i64(coset, 2);
          enc::put_i64(coset, a);
          Elem unit;
          enc::put_i64(unit, 0);
          enc::put_i64(unit, x);
          REQUIRE(m->mul(coset, unit) == coset);
        }
      }
    }
  }
}

TEST_CASE("coset monoid over a finite group") {
  auto const z6 = TableGroup::cyclic(6);
  auto const m  = make_coset_monoid(z6, {{2}, {3}});
  CHECK(m->is_unit(m->one()));
  auto const u2 = m->parse("{2}");
  auto const u3 = m->parse("{3}");
  CHECK(m->mul(u2, u3) == m->parse("{5}"));
  // lattice sorted by size: S1 = {0,3}, S2 = {0,2,4}; cosets multiply setwise
  auto const c = m->mul(m->parse("0+S1"), m->parse("1+S1"));
  CHECK(!m->is_unit(c));
  auto const record = m->orbit_data(c);
  CHECK(record.quotient->order().value() == 3);
  auto const c2 = m->mul(m->parse("0+S2"), m->parse("1+S2"));
  CHECK(m->orbit_data(c2).quotient->order().value() == 2);
  // a coset of S1 times a coset of S2 lands in the join, the whole group
  CHECK(m->orbit_data(m->mul(c, c2)).quotient->order().value() == 1);
  // translate coherence on a sample
  for (std::uint32_t g = 0; g < 6; ++g) {
    auto const unit = m->parse("{" + std::to_string(g) + "}");
    REQUIRE(record.translate(c, record.hom(m->unit_to_group(unit)))
            == m->mul(c, unit));
  }
  // non-normal subgroups are rejected: <(01)> inside S3
  auto const s3 = TableGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  REQUIRE(s3->size() == 6);
  std::uint32_t transposition = UINT32_MAX;
  for (std::uint32_t i = 0; i < s3->size(); ++i) {
    if (s3->name(i) == "[1 0 2]") {
      transposition = i;
    }
  }
  REQUIRE(transposition != UINT32_MAX);
  CHECK_THROWS_AS(make_coset_monoid(s3, {{transposition}}),
                  UnsupportedGroup);
}

TEST_CASE("free times semilattice products") {
  auto const m = make_f2xs_default();
  CHECK(m->mul(m->parse("x"), m->parse("X")) == m->one());
  CHECK(m->mul(m->parse("x"), m->parse("(y,0)")) == m->parse("(xy,0)"));
  CHECK(m->mul(m->parse("(xy,0)"), m->parse("(Y,0)")) == m->parse("(x,0)"));
  CHECK(m->is_unit(m->parse("xY")));
  CHECK(!m->is_unit(m->parse("(1,0)")));
  CHECK(m->label(m->parse("(xy,0)")) == "(xy,0)");
  CHECK(m->label(m->parse("xY")) == "xY");
}

TEST_CASE("structured multiplication is associative on generated samples") {
  for (auto const& name : {"bicyclic", "cosetZ", "F2xS"}) {
    auto const m = get_fixture(name);
    std::vector<Elem> seeds;
    if (std::string(name) == "bicyclic") {
      seeds = {m->parse("p"), m->parse("q"), m->parse("qp")};
    } else if (std::string(name) == "cosetZ") {
      seeds = {m->parse("{1}"), m->parse("0+2Z"), m->parse("1+3Z")};
    } else {
      seeds = {m->parse("x"), m->parse("y"), m->parse("(1,0)")};
    }
    // close the sample once under products, then check all triples
    std::vector<Elem> sample = seeds;
    for (auto const& a : seeds) {
      for (auto const& b : seeds) {
        sample.push_back(m->mul(a, b));
      }
    }
    for (auto const& a : sample) {
      for (auto const& b : sample) {
        for (auto const& c : sample) {
          REQUIRE(m->mul(m->mul(a, b), c) == m->mul(a, m->mul(b, c)));
        }
      }
    }
    CHECK(m->is_unit(m->one()));
  }
}

TEST_CASE("finite oracle adapter: translate and hom coherence") {
  for (auto const& name : {"T2", "T3", "Z2xSL2", "SL2xSL2"}) {
    auto const  m  = get_fixture(name);
    auto const* fm = m->as_finite();
    REQUIRE(fm != nullptr);
    auto const g = m->unit_group();
    for (std::uint32_t x = 0; x < fm->size(); ++x) {
      if (fm->is_unit(x)) {
        continue;
      }
      auto const s      = finite_elem(x);
      auto const record = m->orbit_data(s);
      for (auto u : fm->units()) {
        auto const unit = finite_elem(u);
        REQUIRE(record.translate(s, record.hom(m->unit_to_group(unit)))
                == m->mul(s, unit));
      }
      // hom is a morphism
      for (auto u : fm->units()) {
        for (auto v : fm->units()) {
          auto const gu = m->unit_to_group(finite_elem(u));
          auto const gv = m->unit_to_group(finite_elem(v));
          REQUIRE(record.hom(g->mul(gu, gv))
                  == record.quotient->mul(record.hom(gu), record.hom(gv)));
        }
      }
    }
  }
}

TEST_CASE("structured declared J-class flags") {
  CHECK(make_bicyclic()->units_equal_identity_j_class() == TriState::False);
  CHECK(make_coset_monoid({2, 3})->units_equal_identity_j_class()
        == TriState::True);
  CHECK(make_f2xs_default()->units_equal_identity_j_class()
        == TriState::True);
}

TEST_CASE("fixture registry round trips labels") {
  for (auto const& info : fixture_list()) {
    auto const m = get_fixture(info.name);
    CHECK(m->label(m->one()) == m->label(m->parse(m->label(m->one()))));
  }
  CHECK_THROWS_AS(get_fixture("nope"), BadIndex);
  // parameterized coset fixture
  auto const m = get_fixture("cosetZ:4,6");
  CHECK(!m->is_unit(m->parse("1+2Z")));  // gcd(4,6) = 2 joins the lattice
}
