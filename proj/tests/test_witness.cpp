#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "soficlab/errors.hpp"
#include "soficlab/finite_monoid.hpp"
#include "soficlab/monoid.hpp"
#include "soficlab/witness.hpp"
#include "soficlab/witness_io.hpp"

using namespace soficlab;

namespace {

// the left regular action of a finite monoid on itself, a genuine witness
ActionWitness left_regular_witness(FiniteMonoid const&               m,
                                   std::vector<std::uint32_t> const& k) {
  std::vector<std::uint32_t> acting{m.identity()};
  auto push_unique = [&](std::uint32_t e) {
    auto it = std::find(acting.begin(), acting.end(), e);
    if (it == acting.end()) {
      acting.push_back(e);
      return static_cast<std::uint32_t>(acting.size() - 1);
    }
    return static_cast<std::uint32_t>(it - acting.begin());
  };
  for (auto e : k) {
    push_unique(e);
  }
  ActionWitness w;
  for (auto g : k) {
    for (auto h : k) {
      w.products.push_back(
          {push_unique(g), push_unique(h), push_unique(m.product(g, h))});
    }
  }
  w.ground_size = m.size();
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    w.point_labels.push_back(m.name(x));
  }
  for (auto e : acting) {
    w.acting.push_back({finite_elem(e), m.name(e)});
    std::vector<std::uint32_t> table(m.size());
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      table[x] = m.product(e, x);
    }
    w.tables.push_back(std::move(table));
  }
  return w;
}

std::vector<Elem> encs(std::vector<std::uint32_t> const& idx) {
  std::vector<Elem> out;
  for (auto i : idx) {
    out.push_back(finite_elem(i));
  }
  return out;
}

// independent recount of the three defect quantities, straight from the
// definition, for cross-checking the counting path
DefectReport brute_recount(ActionWitness const& w, std::uint32_t id_idx,
                           std::vector<std::uint32_t> const& k_pos) {
  DefectReport r;
  r.ground_size = Int(w.ground_size);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> prod;
  for (auto const& p : w.products) {
    prod[{p.i, p.j}] = p.k;
  }
  for (std::uint64_t x = 0; x < w.ground_size; ++x) {
    r.identity_violations += w.tables[id_idx][x] != x;
  }
  for (auto g : k_pos) {
    for (auto h : k_pos) {
      std::uint64_t bad = 0;
      for (std::uint64_t x = 0; x < w.ground_size; ++x) {
        bad += w.tables[g][w.tables[h][x]] != w.tables[prod.at({g, h})][x];
      }
      Rational const d{Int(bad), Int(w.ground_size)};
      r.mult.push_back({w.acting[g].label, w.acting[h].label, d});
      r.max_mult_defect = std::max(r.max_mult_defect, d);
    }
  }
  for (size_t a = 0; a < k_pos.size(); ++a) {
    for (size_t b = a + 1; b < k_pos.size(); ++b) {
      std::uint64_t agree = 0;
      for (std::uint64_t x = 0; x < w.ground_size; ++x) {
        agree += w.tables[k_pos[a]][x] == w.tables[k_pos[b]][x];
      }
      Rational const o{Int(agree), Int(w.ground_size)};
      r.sep.push_back({w.acting[k_pos[a]].label, w.acting[k_pos[b]].label, o});
      r.max_sep_overlap = std::max(r.max_sep_overlap, o);
    }
  }
  return r;
}

bool reports_equal(DefectReport const& a, DefectReport const& b) {
  if (a.ground_size != b.ground_size
      || a.identity_violations != b.identity_violations
      || a.max_mult_defect != b.max_mult_defect
      || a.max_sep_overlap != b.max_sep_overlap
      || a.mult.size() != b.mult.size() || a.sep.size() != b.sep.size()) {
    return false;
  }
  for (size_t i = 0; i < a.mult.size(); ++i) {
    if (a.mult[i].g_label != b.mult[i].g_label
        || a.mult[i].h_label != b.mult[i].h_label
        || a.mult[i].defect != b.mult[i].defect) {
      return false;
    }
  }
  for (size_t i = 0; i < a.sep.size(); ++i) {
    if (a.sep[i].g_label != b.sep[i].g_label
        || a.sep[i].h_label != b.sep[i].h_label
        || a.sep[i].overlap != b.sep[i].overlap) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("genuine free action has zero defects") {
  // Z/2 acting on two points by swap
  ActionWitness w;
  w.ground_size = 2;
  w.acting      = {{finite_elem(0), "1"}, {finite_elem(1), "a"}};
  w.tables      = {{0, 1}, {1, 0}};
  w.products    = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  auto const report
      = check_witness(w, finite_elem(0), encs({0, 1}));
  CHECK(report.identity_violations == 0);
  CHECK(report.max_mult_defect == 0);
  CHECK(report.max_sep_overlap == 0);
}

TEST_CASE("overlap counts agreements exactly") {
  // 4 points; a fixes exactly one
  ActionWitness w;
  w.ground_size = 4;
  w.acting      = {{finite_elem(0), "1"}, {finite_elem(1), "a"}};
  w.tables      = {{0, 1, 2, 3}, {0, 2, 3, 1}};
  w.products    = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  auto const report = check_witness(w, finite_elem(0), encs({0, 1}));
  REQUIRE(report.sep.size() == 1);
  CHECK(report.sep[0].overlap == make_rational(1, 4));
  CHECK(report.max_sep_overlap == make_rational(1, 4));
}

TEST_CASE("single-point corruption moves exactly one pair by 1/N") {
  auto const t2 = make_transformation_monoid(2);
  // K = {const0, swap}; their product c0*swap = const1 is outside K
  auto const c0 = t2.index_of("00");
  auto const sw = t2.index_of("10");
  auto const c1 = t2.index_of("11");
  REQUIRE(t2.product(c0, sw) == c1);

  auto w = left_regular_witness(t2, {c0, sw});
  auto const baseline
      = check_witness(w, finite_elem(t2.identity()), encs({c0, sw}));
  CHECK(baseline.max_mult_defect == 0);

  // rewire the table of the product element c1 at a single point
  std::uint32_t const c1_pos = w.index_of(finite_elem(c1));
  REQUIRE(c1_pos != ActionWitness::npos);
  w.tables[c1_pos][0] = (w.tables[c1_pos][0] + 1) % 4;
  auto const report
      = check_witness(w, finite_elem(t2.identity()), encs({c0, sw}));
  size_t changed = 0;
  for (size_t i = 0; i < report.mult.size(); ++i) {
    if (report.mult[i].defect != baseline.mult[i].defect) {
      ++changed;
      CHECK(report.mult[i].defect == make_rational(1, 4));
      CHECK(report.mult[i].g_label == "00");
      CHECK(report.mult[i].h_label == "10");
    }
  }
  CHECK(changed == 1);
  for (size_t i = 0; i < report.sep.size(); ++i) {
    CHECK(report.sep[i].overlap == baseline.sep[i].overlap);
  }
  // and the whole report agrees with an independent recount
  std::vector<std::uint32_t> k_pos{w.index_of(finite_elem(c0)),
                                   w.index_of(finite_elem(sw))};
  auto const oracle = brute_recount(
      w, w.index_of(finite_elem(t2.identity())), k_pos);
  CHECK(reports_equal(report, oracle));
}

TEST_CASE("checker equals brute recount on a perturbed K-table") {
  auto const t2 = make_transformation_monoid(2);
  std::vector<std::uint32_t> all{0, 1, 2, 3};
  auto w = left_regular_witness(t2, all);
  // rewire one K element's own table; several pairs may move
  w.tables[w.index_of(finite_elem(t2.index_of("10")))][2] = 0;
  std::vector<std::uint32_t> k_pos;
  for (auto e : all) {
    k_pos.push_back(w.index_of(finite_elem(e)));
  }
  auto const report
      = check_witness(w, finite_elem(t2.identity()), encs(all));
  auto const oracle = brute_recount(
      w, w.index_of(finite_elem(t2.identity())), k_pos);
  CHECK(reports_equal(report, oracle));
}

TEST_CASE("passes uses non-strict boundaries") {
  DefectReport r;
  r.ground_size = 1;
  CHECK(passes(r, Rational(0)));
  r.max_mult_defect = make_rational(1, 4);
  CHECK(!passes(r, make_rational(1, 5)));
  r.max_mult_defect = 0;
  r.max_sep_overlap = make_rational(1, 5);
  CHECK(passes(r, make_rational(1, 5)));
  r.identity_violations = 1;
  CHECK(!passes(r, make_rational(1, 5)));
}

TEST_CASE("missing tables are reported") {
  auto const t2 = make_transformation_monoid(2);
  auto w = left_regular_witness(t2, {t2.index_of("00")});
  CHECK_THROWS_AS(
      check_witness(w, finite_elem(t2.identity()),
                    encs({t2.index_of("00"), t2.index_of("10")})),
      MissingTable);
  // drop the product entry
  auto w2 = left_regular_witness(t2, {t2.index_of("00")});
  w2.products.clear();
  CHECK_THROWS_AS(check_witness(w2, finite_elem(t2.identity()),
                                encs({t2.index_of("00")})),
                  MissingTable);
}

TEST_CASE("validate_witness flags identity rewires") {
  auto const t2 = make_transformation_monoid(2);
  auto w = left_regular_witness(t2, {t2.index_of("00")});
  auto mul = [&](Elem const& a, Elem const& b) {
    return finite_elem(t2.product(finite_index(a), finite_index(b)));
  };
  CHECK_NOTHROW(validate_witness(w, finite_elem(t2.identity()),
                                 encs({t2.index_of("00")}), mul));
  w.tables[0][0] = 1;  // acting[0] is the identity in left_regular_witness
  CHECK_THROWS_AS(validate_witness(w, finite_elem(t2.identity()),
                                   encs({t2.index_of("00")}), mul),
                  IdentityViolated);
}

TEST_CASE("diagonal power: semilattice hits n=4, N=16, overlap 1/16") {
  auto const sl = make_semilattice2();
  auto const result
      = diagonal_power_witness(sl, {0, 1}, make_rational(1, 10));
  CHECK(result.power == 4);
  CHECK(result.max_agreement == make_rational(1, 2));
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->ground_size == 16);
  CHECK(result.report.max_mult_defect == 0);
  CHECK(result.report.identity_violations == 0);
  REQUIRE(result.report.sep.size() == 1);
  CHECK(result.report.sep[0].overlap == make_rational(1, 16));
  // confirmed by an independent run of the checker
  auto const recheck = check_witness(*result.witness, finite_elem(0),
                                     encs({0, 1}), 2);
  CHECK(recheck.max_sep_overlap == make_rational(1, 16));
  CHECK(recheck.max_mult_defect == 0);
}

TEST_CASE("diagonal power: group monoids are free at n=1") {
  auto const z3 = make_cyclic_monoid(3);
  auto const result
      = diagonal_power_witness(z3, {0, 1, 2}, make_rational(1, 2));
  CHECK(result.power == 1);
  CHECK(result.max_agreement == 0);
  CHECK(result.report.max_mult_defect == 0);
  CHECK(result.report.max_sep_overlap == 0);
}

TEST_CASE("diagonal power: T2 with all elements") {
  auto const t2 = make_transformation_monoid(2);
  auto const result
      = diagonal_power_witness(t2, {0, 1, 2, 3}, make_rational(1, 5));
  CHECK(result.max_agreement == make_rational(1, 2));
  CHECK(result.power == 3);  // (1/2)^3 = 1/8 <= 1/5
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->ground_size == 64);
  CHECK(result.report.max_mult_defect == 0);
  CHECK(result.report.max_sep_overlap <= make_rational(1, 5));
}

TEST_CASE("diagonal power always passes its own target") {
  struct Case {
    FiniteMonoid               m;
    std::vector<std::uint32_t> k;
    Rational                   eps;
  };
  std::vector<Case> cases;
  cases.push_back({make_semilattice2(), {0, 1}, make_rational(1, 10)});
  cases.push_back({make_transformation_monoid(2), {0, 1, 2, 3},
                   make_rational(1, 5)});
  cases.push_back({make_cyclic_monoid(3), {0, 1, 2}, make_rational(1, 7)});
  cases.push_back({direct_product(make_cyclic_monoid(2), make_semilattice2()),
                   {0, 1, 2, 3}, make_rational(1, 20)});
  for (auto const& c : cases) {
    auto const result = diagonal_power_witness(c.m, c.k, c.eps);
    CHECK(passes(result.report, c.eps));
    if (result.witness.has_value()) {
      std::vector<Elem> k_encs;
      for (auto i : c.k) {
        k_encs.push_back(finite_elem(i));
      }
      auto const recheck = check_witness(
          *result.witness, finite_elem(c.m.identity()), k_encs);
      CHECK(passes(recheck, c.eps));
    }
  }
}

TEST_CASE("report arithmetic is exact: every proportion is a count over N") {
  auto const t2 = make_transformation_monoid(2);
  std::vector<std::uint32_t> all{0, 1, 2, 3};
  auto w = left_regular_witness(t2, all);
  w.tables[1][3] = 0;  // perturb so some defects are nonzero
  auto const r = check_witness(w, finite_elem(t2.identity()), encs(all));
  auto is_count_over_n = [&](Rational const& x) {
    Rational const scaled = x * Rational(r.ground_size);
    return denominator(scaled) == 1 && numerator(scaled) >= 0
           && numerator(scaled) <= r.ground_size;
  };
  for (auto const& e : r.mult) {
    CHECK(is_count_over_n(e.defect));
  }
  for (auto const& e : r.sep) {
    CHECK(is_count_over_n(e.overlap));
  }
}

TEST_CASE("diagonal power: implicit mode matches materialized counting") {
  auto const sl = make_semilattice2();
  auto const eps = make_rational(1, 10);
  auto const materialized = diagonal_power_witness(sl, {0, 1}, eps);
  auto const implicit     = diagonal_power_witness(sl, {0, 1}, eps, 8);
  CHECK(!implicit.witness.has_value());
  CHECK(implicit.power == materialized.power);
  CHECK(implicit.report.ground_size == materialized.report.ground_size);
  REQUIRE(implicit.report.sep.size() == materialized.report.sep.size());
  for (size_t i = 0; i < implicit.report.sep.size(); ++i) {
    CHECK(implicit.report.sep[i].overlap
          == materialized.report.sep[i].overlap);
  }
  CHECK(implicit.report.max_mult_defect == 0);
}

TEST_CASE("report is invariant under relabeling the ground set") {
  auto const t2 = make_transformation_monoid(2);
  std::vector<std::uint32_t> all{0, 1, 2, 3};
  auto const w = left_regular_witness(t2, all);
  // permute points by a fixed permutation sigma
  std::vector<std::uint32_t> sigma{2, 0, 3, 1};
  std::vector<std::uint32_t> sigma_inv(4);
  for (std::uint32_t i = 0; i < 4; ++i) {
    sigma_inv[sigma[i]] = i;
  }
  ActionWitness permuted = w;
  for (size_t t = 0; t < w.tables.size(); ++t) {
    for (std::uint32_t x = 0; x < 4; ++x) {
      permuted.tables[t][sigma[x]] = sigma[w.tables[t][x]];
    }
  }
  permuted.point_labels.clear();
  auto const a = check_witness(w, finite_elem(t2.identity()), encs(all));
  auto const b
      = check_witness(permuted, finite_elem(t2.identity()), encs(all));
  CHECK(reports_equal(a, b));
}

TEST_CASE("worker count does not change the report") {
  auto const t2 = make_transformation_monoid(2);
  std::vector<std::uint32_t> all{0, 1, 2, 3};
  auto w = left_regular_witness(t2, all);
  w.tables[2][1] = 3;  // make it imperfect so counts are nontrivial
  auto const r1 = check_witness(w, finite_elem(t2.identity()), encs(all), 1);
  auto const r2 = check_witness(w, finite_elem(t2.identity()), encs(all), 2);
  auto const r8 = check_witness(w, finite_elem(t2.identity()), encs(all), 8);
  CHECK(reports_equal(r1, r2));
  CHECK(reports_equal(r1, r8));
}

TEST_CASE("witness files round-trip byte-exactly") {
  auto const t2 = make_transformation_monoid(2);
  auto const w  = left_regular_witness(t2, {0, 1, 2, 3});
  auto const text = witness_to_json(w);
  auto const back = witness_from_json(text);
  CHECK(back == w);
  CHECK(witness_to_json(back) == text);

  std::string const path = "/tmp/soficlab_test_witness.json";
  save_witness(w, path);
  CHECK(load_witness(path) == w);
  std::remove(path.c_str());
}

TEST_CASE("truncated and malformed witness files are rejected") {
  auto const t2 = make_transformation_monoid(2);
  auto const w  = left_regular_witness(t2, {0, 1});
  auto text = witness_to_json(w);
  text.resize(text.size() / 2);
  CHECK_THROWS_AS(witness_from_json(text), MalformedFile);
  CHECK_THROWS_AS(witness_from_json("{\"N\": 1}"), MalformedFile);
  // tables must stay inside the ground set
  CHECK_THROWS_AS(
      witness_from_json(
          R"({"N":1,"elements":[{"enc":"AAAAAA==","label":"1"}],)"
          R"("tables":[[7]],"products":[]})"),
      MalformedFile);
  CHECK_THROWS_AS(load_witness("/tmp/definitely_missing_witness.json"),
                  MalformedFile);
}

TEST_CASE("hand-written minimal witness parses and passes at eps 0") {
  std::string const text
      = R"({"N":1,"elements":[{"enc":"AAAAAA==","label":"1"}],)"
        R"("tables":[[0]],"products":[[0,0,0]]})";
  auto const w = witness_from_json(text);
  CHECK(w.ground_size == 1);
  auto const report = check_witness(w, finite_elem(0), {finite_elem(0)});
  CHECK(passes(report, Rational(0)));
}

TEST_CASE("monoid files round-trip byte-exactly") {
  auto const t3   = make_transformation_monoid(3);
  auto const text = monoid_to_json(t3);
  auto const back = monoid_from_json(text);
  CHECK(back.table() == t3.table());
  CHECK(back.names() == t3.names());
  CHECK(monoid_to_json(back) == text);
  CHECK_THROWS_AS(monoid_from_json("{}"), MalformedFile);
  CHECK_THROWS_AS(
      monoid_from_json(
          R"({"size":2,"identity":1,"names":["a","b"],"table":[[0,1],[1,1]]})"),
      MalformedFile);  // identity field disagrees with the table scan
}
