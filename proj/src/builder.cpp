#include "soficlab/builder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "soficlab/errors.hpp"
#include "soficlab/fixtures.hpp"

namespace soficlab {

Rational choose_delta(Rational const& eps) {
  if (eps <= 0 || eps >= 1) {
    throw BadIndex("eps must lie in (0,1)");
  }
  Rational const one_minus_eps = Rational(1) - eps;
  double delta0 = (1.0 - std::cbrt(rational_to_double(one_minus_eps))) / 2.0;
  for (int halving = 0; halving < 64; ++halving) {
    for (int power = 1; power <= 18; ++power) {
      Int base = 1;
      for (int i = 0; i < power; ++i) {
        base *= 10;
      }
      for (int m : {1, 2, 5}) {
        Int const q = base * m;
        // the nudge keeps 0.999... products from flooring one short;
        // the exact verification below gates correctness
        auto const num = static_cast<long long>(std::floor(
            delta0 * q.convert_to<double>() + 1e-7));
        if (num < 1) {
          continue;
        }
        Rational const delta(Int(num), q);
        Rational const rest = Rational(1) - delta;
        if (rest * rest * rest > one_minus_eps) {
          return delta;
        }
      }
    }
    delta0 /= 2;
  }
  throw Error("builder", "could not choose delta for eps "
                             + rational_str(eps));
}

char const* condition_name(Condition c) {
  switch (c) {
    case Condition::LocalAmenability: return "local-amenability";
    case Condition::AmenableUnits: return "amenable-units";
    case Condition::FiniteNonunits: return "finite-nonunits";
    case Condition::FiniteNonunitRClasses: return "finite-nonunit-r-classes";
    case Condition::CancellativeAmenableUnits:
      return "cancellative-amenable-units";
    case Condition::SchutzFiniteL: return "schutz-finite-l-classes";
    case Condition::SchutzAbelianOrFinite: return "schutz-abelian-or-finite";
    case Condition::SchutzDerived: return "schutz-derived-unit-class";
    case Condition::RegularSubgroups: return "regular-amenable-subgroups";
  }
  return "?";
}

namespace {

std::vector<Elem> dedup_stable(std::vector<Elem> const& in) {
  std::vector<Elem> out;
  for (auto const& e : in) {
    if (std::find(out.begin(), out.end(), e) == out.end()) {
      out.push_back(e);
    }
  }
  return out;
}

// whether a unit-group handle can produce some finite approximation
bool sofic_capable(GroupPtr const& g) {
  if (g->is_finite() || g->folner_capable()) {
    return true;
  }
  auto free = std::dynamic_pointer_cast<FreeGroup const>(g);
  return free && !free->quotients().empty();
}

HypothesisReport::OrbitStatus orbit_status(MonoidOracle const& m,
                                           Elem const&         s) {
  auto const q = m.orbit_data(s);
  HypothesisReport::OrbitStatus out;
  out.element_label = m.label(s);
  out.orbit_id      = q.orbit_id;
  out.quotient_desc = q.quotient->description();
  if (q.declared_nonamenable) {
    out.kind = HypothesisReport::OrbitStatus::Kind::DeclaredNonamenable;
  } else if (q.quotient->is_finite()) {
    out.kind = HypothesisReport::OrbitStatus::Kind::Finite;
  } else if (q.quotient->folner_capable()) {
    out.kind = HypothesisReport::OrbitStatus::Kind::AmenableProvider;
  } else {
    out.kind = HypothesisReport::OrbitStatus::Kind::Unknown;
  }
  return out;
}

void classify_finite(FiniteMonoid const& fm, HypothesisReport& r) {
  auto const green = green_relations(fm);
  bool const units_equal = j_class_of_identity_is_units(fm, green);
  r.units_equal_j_class = units_equal ? TriState::True : TriState::False;
  r.unit_group_sofic_capable = true;  // finite groups are sofic
  r.all_orbits_amenable      = TriState::True;  // finite quotients

  bool const base = units_equal;
  if (base) {
    r.matched.insert(Condition::LocalAmenability);
    r.matched.insert(Condition::AmenableUnits);    // finite G is amenable
    r.matched.insert(Condition::FiniteNonunits);   // M \ G is finite
    r.matched.insert(Condition::FiniteNonunitRClasses);
    r.matched.insert(Condition::SchutzFiniteL);
    r.matched.insert(Condition::SchutzAbelianOrFinite);
  } else {
    r.refusal_reason
        = "the J-class of the identity is strictly larger than the group of "
          "units";
  }
  auto const canc = cancellativity_check(fm);
  if (canc.left || canc.right) {
    r.matched.insert(Condition::CancellativeAmenableUnits);
  }
  // finite monoids always have sofic units, amenable Schutzenberger groups
  // and finitely many L-classes
  r.matched.insert(Condition::SchutzDerived);
  bool regular = true;
  for (std::uint32_t x = 0; x < fm.size() && regular; ++x) {
    regular = fm.is_regular_element(x);
  }
  if (regular) {
    r.matched.insert(Condition::RegularSubgroups);
  }
}

void classify_structured(MonoidOracle const& m, HypothesisReport& r,
                         std::optional<std::vector<Elem>> const& k_set) {
  r.units_equal_j_class      = m.units_equal_identity_j_class();
  r.unit_group_sofic_capable = sofic_capable(m.unit_group());
  auto const flags           = m.declared();

  if (k_set.has_value()) {
    // examine exactly the orbits the construction would use
    std::vector<Elem> k = dedup_stable(*k_set);
    std::vector<Elem> closure = k;
    for (auto const& g : k) {
      for (auto const& h : k) {
        closure.push_back(m.mul(g, h));
      }
    }
    std::set<std::string> seen;
    r.all_orbits_amenable = TriState::True;
    for (auto const& s : dedup_stable(closure)) {
      if (m.is_unit(s)) {
        continue;
      }
      auto status = orbit_status(m, s);
      if (seen.insert(status.orbit_id).second) {
        r.orbits.push_back(status);
        if (status.kind
            == HypothesisReport::OrbitStatus::Kind::DeclaredNonamenable) {
          r.all_orbits_amenable = TriState::False;
        } else if (status.kind
                   == HypothesisReport::OrbitStatus::Kind::Unknown) {
          if (r.all_orbits_amenable == TriState::True) {
            r.all_orbits_amenable = TriState::Unknown;
          }
        }
      }
    }
  } else {
    r.all_orbits_amenable = flags.all_orbits_amenable_capable;
  }

  bool const base = r.units_equal_j_class == TriState::True
                    && r.unit_group_sofic_capable;
  if (base && r.all_orbits_amenable == TriState::True) {
    r.matched.insert(Condition::LocalAmenability);
  } else if (r.units_equal_j_class != TriState::True) {
    r.refusal_reason
        = "units are not the entire J-class of the identity (declared "
          + std::string(r.units_equal_j_class == TriState::False ? "false"
                                                                 : "unknown")
          + ")";
  } else if (!r.unit_group_sofic_capable) {
    r.refusal_reason = "no sofic approximation provider for the unit group "
                      + m.unit_group()->description();
  } else {
    // name the offending orbit quotient when one was examined
    r.refusal_reason = "orbit quotient declared non-amenable";
    for (auto const& o : r.orbits) {
      if (o.kind == HypothesisReport::OrbitStatus::Kind::DeclaredNonamenable) {
        r.refusal_reason = "orbit quotient declared non-amenable: orbit of "
                          + o.element_label + " has stabiliser quotient "
                          + o.quotient_desc;
        break;
      }
      if (o.kind == HypothesisReport::OrbitStatus::Kind::Unknown) {
        r.refusal_reason = "orbit of " + o.element_label
                          + " has no amenability provider (status unknown)";
      }
    }
    if (r.orbits.empty() && r.all_orbits_amenable != TriState::True) {
      r.refusal_reason
          = "local amenability of the right translation action is "
            + std::string(r.all_orbits_amenable == TriState::False
                              ? "declared false"
                              : "unknown");
    }
  }

  bool const units_amenable = m.unit_group()->folner_capable();
  if (base && units_amenable) {
    r.matched.insert(Condition::AmenableUnits);
  }
  if (base && flags.nonunits_finite == TriState::True) {
    r.matched.insert(Condition::FiniteNonunits);
  }
  if (base && flags.nonunit_r_classes_finite == TriState::True) {
    r.matched.insert(Condition::FiniteNonunitRClasses);
  }
  if ((flags.left_cancellative == TriState::True
       || flags.right_cancellative == TriState::True)
      && units_amenable) {
    r.matched.insert(Condition::CancellativeAmenableUnits);
  }
  if (base && flags.finitely_many_l_amenable_schutz == TriState::True) {
    r.matched.insert(Condition::SchutzFiniteL);
  }
  if (base && flags.schutz_finite_or_abelian_local == TriState::True) {
    r.matched.insert(Condition::SchutzAbelianOrFinite);
  }
  if (r.unit_group_sofic_capable
      && flags.finitely_many_l_amenable_schutz == TriState::True) {
    r.matched.insert(Condition::SchutzDerived);
    if (flags.regular == TriState::True) {
      r.matched.insert(Condition::RegularSubgroups);
    }
  }
}

}  // namespace

HypothesisReport check_hypotheses(
    MonoidOracle const& m, std::optional<std::vector<Elem>> const& k_set) {
  HypothesisReport r;
  r.unit_group_desc = m.unit_group()->description();
  if (auto const* fm = m.as_finite()) {
    classify_finite(*fm, r);
    if (k_set.has_value()) {
      for (auto const& s : dedup_stable(*k_set)) {
        if (!m.is_unit(s)) {
          r.orbits.push_back(orbit_status(m, s));
        }
      }
    }
  } else {
    classify_structured(m, r, k_set);
  }
  return r;
}

BuildResult build_witness(MonoidOracle const& m, std::vector<Elem> const& k,
                          Rational const& eps, BuildOptions const& opts) {
  if (eps <= 0 || eps >= 1) {
    throw BadIndex("eps must lie in (0,1)");
  }
  auto const hypotheses = check_hypotheses(m, k);
  if (!hypotheses.matched.count(Condition::LocalAmenability)) {
    throw HypothesesNotMet(hypotheses.refusal_reason);
  }

  ProvenanceLog log;
  Rational const delta = choose_delta(eps);
  log.delta            = delta;
  {
    Rational const rest = Rational(1) - delta;
    if (!(rest * rest * rest > Rational(1) - eps)) {
      throw Error("builder", "delta verification failed");
    }
  }

  // (2) split K and form K^2
  std::vector<Elem> const k_all = dedup_stable(k);
  std::vector<Elem>       k_units, k_nonunits;
  for (auto const& e : k_all) {
    (m.is_unit(e) ? k_units : k_nonunits).push_back(e);
  }
  std::vector<Elem> k2;
  for (auto const& g : k_all) {
    for (auto const& h : k_all) {
      k2.push_back(m.mul(g, h));
    }
  }
  k2 = dedup_stable(k2);
  std::vector<Elem> k2_nonunits;
  for (auto const& e : k2) {
    if (!m.is_unit(e)) {
      k2_nonunits.push_back(e);
    }
  }
  for (auto const& e : k_units) {
    log.k_in_g.push_back(m.label(e));
  }
  for (auto const& e : k_nonunits) {
    log.k_in_s.push_back(m.label(e));
  }
  for (auto const& e : k2_nonunits) {
    log.k2_in_s.push_back(m.label(e));
  }

  // orbits of (K u K^2) n S, one stabiliser-quotient record each
  std::vector<Elem> s_touched = k_nonunits;
  for (auto const& e : k2_nonunits) {
    s_touched.push_back(e);
  }
  s_touched = dedup_stable(s_touched);

  std::map<Elem, StabiliserQuotient> orbit_records;
  std::vector<StabiliserQuotient>    components;
  for (auto const& s : s_touched) {
    auto record = m.orbit_data(s);
    if (record.declared_nonamenable || !record.quotient->folner_capable()) {
      throw HypothesesNotMet("orbit quotient declared non-amenable: orbit of "
                             + m.label(s) + " has stabiliser quotient "
                             + record.quotient->description());
    }
    components.push_back(record);
    orbit_records.emplace(s, std::move(record));
  }

  // (3) joint quotient image of the unit group
  GroupPtr const unit_group = m.unit_group();
  auto const     jqi = joint_quotient_image(unit_group, components);
  std::map<std::string, size_t> component_pos;
  for (size_t i = 0; i < jqi.group->component_count(); ++i) {
    component_pos[jqi.group->component(i).orbit_id] = i;
  }
  log.gbar_desc  = jqi.group->description();
  log.gbar_order = jqi.group->order();

  // (4) Folner set for the projected units
  std::vector<Elem> k_bar;
  for (auto const& e : k_units) {
    k_bar.push_back(jqi.hom(m.unit_to_group(e)));
  }
  k_bar = dedup_stable(k_bar);
  std::vector<Elem> f_set;
  if (k_bar.empty()) {
    // degenerate K n G = 0: the Folner condition is vacuous but F must be
    // nonempty for the product
    f_set = {jqi.group->one()};
    log.f_quality       = 1;
    log.folner_strategy = "singleton-identity";
  } else {
    f_set = find_folner(jqi.group, k_bar, delta, opts.folner_budget).elements;
    log.f_quality       = folner_quality(jqi.group, k_bar, f_set);
    log.folner_strategy = jqi.group->folner_strategy();
    if (!(log.f_quality > Rational(1) - delta)) {
      throw Error("builder", "Folner quality re-measurement failed");
    }
  }
  log.f_size = f_set.size();
  std::map<Elem, std::uint32_t> f_index;
  for (std::uint32_t i = 0; i < f_set.size(); ++i) {
    f_index.emplace(f_set[i], i);
  }

  // (5) sofic approximation of the unit group
  std::vector<Elem> k_units_group;
  for (auto const& e : k_units) {
    k_units_group.push_back(m.unit_to_group(e));
  }
  auto const p_action
      = sofic_group_action(unit_group, k_units_group, delta,
                           opts.folner_budget);
  log.p_size = p_action.point_count;
  log.p_kind = p_action.kind;
  {
    auto const p_witness = p_action.as_action_witness(k_units_group);
    auto const cert = check_witness(p_witness, unit_group->one(),
                                    k_units_group);
    log.p_measured_mult = cert.max_mult_defect;
    log.p_measured_sep  = cert.max_sep_overlap;
    if (cert.identity_violations != 0) {
      throw Error("builder", "P violates the identity axiom");
    }
    bool const genuine
        = p_action.kind == "left-regular" || p_action.kind == "quotient-regular";
    if (genuine
        && (cert.max_mult_defect != 0 || cert.max_sep_overlap != 0)) {
      throw Error("builder", "genuine P has nonzero measured defect");
    }
    if (!genuine
        && (cert.max_mult_defect > delta || cert.max_sep_overlap > delta)) {
      throw Error("builder", "P certificate exceeds delta");
    }
  }

  // s * f through the stabiliser-quotient component of the orbit of s
  auto star = [&](Elem const& s, Elem const& f) {
    auto const& record = orbit_records.at(s);
    size_t const pos   = component_pos.at(record.orbit_id);
    return record.translate(s, jqi.group->component_of(f, pos));
  };

  // (6) Y = (K n S) u (K n S)*F u (K^2 n S)*F
  std::vector<Elem>             y_list;
  std::map<Elem, std::uint32_t> y_index;
  auto push_y = [&](Elem const& e) {
    if (y_index.emplace(e, static_cast<std::uint32_t>(y_list.size())).second) {
      y_list.push_back(e);
    }
  };
  for (auto const& s : k_nonunits) {
    push_y(s);
  }
  for (auto const& s : k_nonunits) {
    for (auto const& f : f_set) {
      push_y(star(s, f));
    }
  }
  for (auto const& s : k2_nonunits) {
    for (auto const& f : f_set) {
      push_y(star(s, f));
    }
  }
  log.y_size = y_list.size();

  // (7) |Z|: smallest z with z|F||P| / N > 1 - delta,
  //     N = |Y| + z|F||P| + 1
  Int const fp = Int(f_set.size()) * Int(p_action.point_count);
  Rational const bound
      = (Rational(1) - delta) * Rational(Int(y_list.size()) + 1)
        / (delta * Rational(fp));
  Int const z_count = numerator(bound) / denominator(bound) + 1;
  Int const n_big   = Int(y_list.size()) + z_count * fp + 1;
  // table entries are 32-bit, whatever cap the caller asked for
  std::uint64_t const cap
      = std::min<std::uint64_t>(opts.ground_cap, UINT32_MAX - 1);
  if (n_big > Int(cap)) {
    throw CapExceeded("builder",
                      "ground set would need N=" + n_big.str()
                          + " points (cap " + std::to_string(cap) + ")");
  }
  std::uint64_t const z_size = z_count.convert_to<std::uint64_t>();
  std::uint64_t const n      = n_big.convert_to<std::uint64_t>();
  log.z_size                 = z_size;
  log.ground_size            = n;

  size_t const        f_count = f_set.size();
  size_t const        p_count = p_action.point_count;
  std::uint64_t const y_count = y_list.size();
  std::uint32_t const bot     = static_cast<std::uint32_t>(n - 1);
  auto zfp_index = [&](std::uint64_t zi, std::uint64_t fi, std::uint64_t pi) {
    return static_cast<std::uint32_t>(y_count
                                      + (zi * f_count + fi) * p_count + pi);
  };

  log.zfp_fraction = Rational(z_count * fp, n_big);
  if (!(log.zfp_fraction > Rational(1) - delta)) {
    throw Error("builder", "Z x F x P mass constraint violated");
  }
  // good region H = points of Z x F x P whose F part survives all of K-bar
  std::uint64_t good_f = 0;
  for (auto const& f : f_set) {
    bool inside = true;
    for (auto const& kb : k_bar) {
      if (!f_index.count(jqi.group->mul(kb, f))) {
        inside = false;
        break;
      }
    }
    good_f += inside;
  }
  log.good_fraction
      = Rational(z_count * Int(good_f) * Int(p_count), n_big);
  {
    Rational const rest = Rational(1) - delta;
    if (!(log.good_fraction > rest * rest)) {
      throw Error("builder", "good region mass constraint violated");
    }
  }

  // (8)-(9) acting set {1} u K u K^2 and the three-case tables
  ActionWitness witness;
  witness.ground_size = n;
  std::vector<Elem> acting{m.one()};
  for (auto const& e : k_all) {
    if (std::find(acting.begin(), acting.end(), e) == acting.end()) {
      acting.push_back(e);
    }
  }
  for (auto const& e : k2) {
    if (std::find(acting.begin(), acting.end(), e) == acting.end()) {
      acting.push_back(e);
    }
  }
  auto acting_index = [&](Elem const& e) {
    return static_cast<std::uint32_t>(
        std::find(acting.begin(), acting.end(), e) - acting.begin());
  };

  for (auto const& elem : acting) {
    witness.acting.push_back({elem, m.label(elem)});
    std::vector<std::uint32_t> table(n, bot);
    // Y part: m.n = the monoid product when it stays in Y, else bot
    for (std::uint64_t yi = 0; yi < y_count; ++yi) {
      Elem const product = m.mul(elem, y_list[yi]);
      auto       it      = y_index.find(product);
      table[yi]          = it == y_index.end() ? bot : it->second;
    }
    if (m.is_unit(elem)) {
      Elem const g    = m.unit_to_group(elem);
      Elem const gbar = jqi.hom(g);
      std::vector<std::int64_t> f_map(f_count);
      for (size_t fi = 0; fi < f_count; ++fi) {
        auto it   = f_index.find(jqi.group->mul(gbar, f_set[fi]));
        f_map[fi] = it == f_index.end() ? -1 : it->second;
      }
      std::vector<std::uint32_t> p_map(p_count);
      for (std::uint32_t pi = 0; pi < p_count; ++pi) {
        p_map[pi] = p_action.act(g, pi);
      }
      for (std::uint64_t zi = 0; zi < z_size; ++zi) {
        for (size_t fi = 0; fi < f_count; ++fi) {
          if (f_map[fi] < 0) {
            for (size_t pi = 0; pi < p_count; ++pi) {
              table[zfp_index(zi, fi, pi)] = bot;
            }
          } else {
            for (size_t pi = 0; pi < p_count; ++pi) {
              table[zfp_index(zi, fi, pi)]
                  = zfp_index(zi, static_cast<std::uint64_t>(f_map[fi]),
                              p_map[pi]);
            }
          }
        }
      }
    } else {
      // m in S: m.(z,f,p) = m * f, an element of Y by construction
      std::vector<std::uint32_t> sf_map(f_count);
      for (size_t fi = 0; fi < f_count; ++fi) {
        auto it = y_index.find(star(elem, f_set[fi]));
        if (it == y_index.end()) {
          throw Error("builder", "m * f escaped Y");
        }
        sf_map[fi] = it->second;
      }
      for (std::uint64_t zi = 0; zi < z_size; ++zi) {
        for (size_t fi = 0; fi < f_count; ++fi) {
          for (size_t pi = 0; pi < p_count; ++pi) {
            table[zfp_index(zi, fi, pi)] = sf_map[fi];
          }
        }
      }
    }
    table[bot] = bot;
    witness.tables.push_back(std::move(table));
  }

  for (auto const& g : k_all) {
    for (auto const& h : k_all) {
      witness.products.push_back(
          {acting_index(g), acting_index(h), acting_index(m.mul(g, h))});
    }
  }

  // point labels stay opaque for big ground sets
  if (n <= 10000) {
    witness.point_labels.reserve(n);
    for (std::uint64_t yi = 0; yi < y_count; ++yi) {
      witness.point_labels.push_back("y:" + m.label(y_list[yi]));
    }
    for (std::uint64_t zi = 0; zi < z_size; ++zi) {
      for (size_t fi = 0; fi < f_count; ++fi) {
        for (size_t pi = 0; pi < p_count; ++pi) {
          witness.point_labels.push_back(
              "z" + std::to_string(zi) + ":" + jqi.group->label(f_set[fi])
              + ":" + p_action.point_labels[pi]);
        }
      }
    }
    witness.point_labels.push_back("bot");
  }

  // the identity axiom must hold exactly
  {
    auto const& id_table = witness.tables[acting_index(m.one())];
    for (std::uint64_t x = 0; x < n; ++x) {
      if (id_table[x] != x) {
        throw Error("builder", "identity table is not the identity map");
      }
    }
  }
  // fact (F): units send good-region points back into Z x F x P
  for (auto const& u : k_units) {
    auto const& table = witness.tables[acting_index(u)];
    for (size_t fi = 0; fi < f_count; ++fi) {
      bool good = true;
      for (auto const& kb : k_bar) {
        if (!f_index.count(jqi.group->mul(kb, f_set[fi]))) {
          good = false;
          break;
        }
      }
      if (!good) {
        continue;
      }
      for (std::uint64_t zi = 0; zi < z_size && good; ++zi) {
        for (size_t pi = 0; pi < p_count; ++pi) {
          std::uint32_t const img = table[zfp_index(zi, fi, pi)];
          if (img < y_count || img == bot) {
            throw Error("builder", "fact (F) violated in the good region");
          }
        }
      }
    }
  }

  BuildResult result;
  result.witness = std::move(witness);
  result.log     = std::move(log);
  return result;
}

PQDecomposition compute_pq_decomposition(FiniteMonoid const& m,
                                         std::uint32_t       x) {
  if (x >= m.size()) {
    throw BadIndex("element index out of range");
  }
  if (m.is_unit(x)) {
    throw BadIndex("compute_pq_decomposition requires a non-unit");
  }
  auto const green = green_relations(m);
  std::vector<std::uint32_t>        unit_index;
  std::shared_ptr<TableGroup const> units
      = TableGroup::units_of(m, &unit_index);
  size_t const g_order = unit_index.size();

  PQDecomposition out;
  out.g_order = g_order;

  // orbit of x under right translation by units
  {
    std::vector<bool> seen(m.size(), false);
    std::vector<std::uint32_t> work{x};
    seen[x] = true;
    while (!work.empty()) {
      std::uint32_t const cur = work.back();
      work.pop_back();
      out.orbit.push_back(cur);
      for (auto u : unit_index) {
        std::uint32_t const next = m.product(cur, u);
        if (!seen[next]) {
          seen[next] = true;
          work.push_back(next);
        }
      }
    }
    std::sort(out.orbit.begin(), out.orbit.end());
  }

  // Z = union of the H-classes met by the orbit
  {
    std::set<std::uint32_t> h_ids, z_set;
    for (auto y : out.orbit) {
      h_ids.insert(green.h_class[y]);
    }
    for (auto h : h_ids) {
      for (auto y : green.h_members[h]) {
        z_set.insert(y);
      }
    }
    out.h_class_ids.assign(h_ids.begin(), h_ids.end());
    out.z_elements.assign(z_set.begin(), z_set.end());
  }
  out.d_class_id = green.d_class[out.z_elements.front()];
  for (auto y : out.z_elements) {
    if (green.d_class[y] != out.d_class_id) {
      throw Error("builder", "Z is not contained in one D-class");
    }
  }

  // P = pointwise stabiliser of the H-classes of Z under the circle action;
  // Q = pointwise stabiliser of Z under right translation
  for (std::uint32_t g = 0; g < g_order; ++g) {
    bool in_p = true, in_q = true;
    for (auto y : out.z_elements) {
      std::uint32_t const img = m.product(y, unit_index[g]);
      if (img != y) {
        in_q = false;
      }
      if (green.h_class[img] != green.h_class[y]) {
        in_p = false;
        break;
      }
    }
    if (in_p) {
      out.p_members.push_back(g);
    }
    if (in_q) {
      out.q_members.push_back(g);
    }
  }
  if (!std::includes(out.p_members.begin(), out.p_members.end(),
                     out.q_members.begin(), out.q_members.end())) {
    throw Error("builder", "Q is not contained in P");
  }
  out.p_normal = units->is_normal_subgroup(out.p_members);
  out.q_normal = units->is_normal_subgroup(out.q_members);
  out.g_over_p = g_order / out.p_members.size();
  out.p_over_q = out.p_members.size() / out.q_members.size();

  out.schutz_order
      = schutzenberger_group(m, green, green.h_class[x]).order();

  // embedding of P/Q into the product of the Schutzenberger groups: each
  // p in P induces one permutation per H-class in Z; the induced map on
  // Q-cosets must be injective with kernel exactly Q
  {
    auto quotient = units->quotient_by(out.q_members);
    std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> tuples;
    bool injective = true;
    for (auto p : out.p_members) {
      std::vector<std::vector<std::uint32_t>> tuple;
      for (auto h : out.h_class_ids) {
        auto const& members = green.h_members[h];
        std::vector<std::uint32_t> perm(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
          std::uint32_t const img = m.product(members[i], unit_index[p]);
          perm[i] = static_cast<std::uint32_t>(
              std::lower_bound(members.begin(), members.end(), img)
              - members.begin());
        }
        tuple.push_back(std::move(perm));
      }
      bool identity_tuple = true;
      for (auto const& perm : tuple) {
        for (size_t i = 0; i < perm.size(); ++i) {
          if (perm[i] != i) {
            identity_tuple = false;
            break;
          }
        }
      }
      bool const in_q = std::binary_search(out.q_members.begin(),
                                           out.q_members.end(), p);
      if (identity_tuple != in_q) {
        injective = false;  // kernel differs from Q
      }
      auto it = tuples.find(quotient.coset_of[p]);
      if (it == tuples.end()) {
        tuples.emplace(quotient.coset_of[p], std::move(tuple));
      } else if (it->second != tuple) {
        injective = false;  // same coset, different induced tuple
      }
    }
    // distinct cosets must induce distinct tuples
    std::map<std::vector<std::vector<std::uint32_t>>, std::uint32_t> seen;
    for (auto const& [coset, tuple] : tuples) {
      auto [it, added] = seen.emplace(tuple, coset);
      if (!added) {
        injective = false;
      }
    }
    out.embedding_injective = injective;
  }
  return out;
}

BicyclicProbe bicyclic_defect_probe(std::uint64_t            n_points,
                                    std::vector<Elem> const& k_set,
                                    std::string const&       family) {
  if (family != "truncation") {
    throw BadIndex("unknown probe family \"" + family + "\"");
  }
  if (n_points == 0 || n_points > limits::kGroundCap) {
    throw CapExceeded("builder", "probe ground size out of range");
  }
  auto const bicyclic = make_bicyclic();
  std::vector<Elem> acting{bicyclic->one()};
  auto push_unique = [&](Elem const& e) {
    auto it = std::find(acting.begin(), acting.end(), e);
    if (it == acting.end()) {
      acting.push_back(e);
      return static_cast<std::uint32_t>(acting.size() - 1);
    }
    return static_cast<std::uint32_t>(it - acting.begin());
  };
  std::vector<Elem> const k = dedup_stable(k_set);
  for (auto const& e : k) {
    push_unique(e);
  }
  ActionWitness w;
  for (auto const& g : k) {
    for (auto const& h : k) {
      w.products.push_back({push_unique(g), push_unique(h),
                            push_unique(bicyclic->mul(g, h))});
    }
  }
  w.ground_size = n_points;
  for (auto const& e : acting) {
    size_t             pos = 0;
    std::int64_t const a   = enc::get_i64(e, pos);
    std::int64_t const b   = enc::get_i64(e, pos);
    // q^a p^b acts by x -> min(max(x - b, 0) + a, N - 1)
    std::vector<std::uint32_t> table(n_points);
    for (std::uint64_t x = 0; x < n_points; ++x) {
      std::int64_t const dropped
          = std::max<std::int64_t>(static_cast<std::int64_t>(x) - b, 0);
      std::int64_t const raised = std::min<std::int64_t>(
          dropped + a, static_cast<std::int64_t>(n_points) - 1);
      table[x] = static_cast<std::uint32_t>(raised);
    }
    w.acting.push_back({e, bicyclic->label(e)});
    w.tables.push_back(std::move(table));
  }
  BicyclicProbe out;
  out.report  = check_witness(w, bicyclic->one(), k);
  out.witness = std::move(w);
  return out;
}

}  // namespace soficlab
