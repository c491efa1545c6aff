#ifndef SOFICLAB_BUILDER_HPP_
#define SOFICLAB_BUILDER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "soficlab/folner.hpp"
#include "soficlab/green.hpp"
#include "soficlab/monoid.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/sofic_approx.hpp"
#include "soficlab/witness.hpp"

namespace soficlab {

// The smallest ladder rational delta = n/q (q in 10,20,50,100,...) below the
// halved closed form (1 - cbrt(1-eps))/2, verified exactly to satisfy
// (1-delta)^3 > 1-eps strictly.
Rational choose_delta(Rational const& eps);

// Sufficient conditions the classifier can certify. LocalAmenability is
// the builder's precondition: units form the J-class of the identity, the
// unit group has a sofic approximation provider, and every orbit quotient
// of the right translation action is amenable-capable. The others are the
// standard specialisations (amenable units; finitely many non-units;
// finite non-unit R-classes; one-sided cancellativity with amenable units)
// and the H-class-structure routes (finitely many L-classes with amenable
// Schutzenberger groups; finite-or-abelian Schutzenberger groups with a
// locally amenable action on H-classes; the same two with the unit-class
// hypothesis derived rather than assumed; the regular-monoid form).
enum class Condition {
  LocalAmenability,
  AmenableUnits,
  FiniteNonunits,
  FiniteNonunitRClasses,
  CancellativeAmenableUnits,
  SchutzFiniteL,
  SchutzAbelianOrFinite,
  SchutzDerived,
  RegularSubgroups,
};

char const* condition_name(Condition c);

struct HypothesisReport {
  TriState units_equal_j_class      = TriState::Unknown;
  bool     unit_group_sofic_capable = false;
  std::string unit_group_desc;

  struct OrbitStatus {
    enum class Kind { AmenableProvider, Finite, DeclaredNonamenable, Unknown };
    std::string element_label;  // representative examined
    std::string orbit_id;
    std::string quotient_desc;
    Kind        kind = Kind::Unknown;
  };
  std::vector<OrbitStatus> orbits;  // per orbit met by (K u K^2) \ G
  TriState all_orbits_amenable = TriState::Unknown;

  std::set<Condition> matched;
  // empty exactly when LocalAmenability matched
  std::string refusal_reason;
};

// For the finite tier everything is computed (units vs J-class of 1, orbit
// quotients, cancellativity, egg-box conditions); for structured monoids
// declared flags and provider availability are read, never upgraded.
HypothesisReport check_hypotheses(
    MonoidOracle const& m,
    std::optional<std::vector<Elem>> const& k_set = std::nullopt);

struct BuildOptions {
  std::uint64_t ground_cap    = limits::kGroundCap;
  size_t        folner_budget = limits::kFolnerBudget;
};

// Everything the construction chose, with measured (not assumed) qualities.
struct ProvenanceLog {
  Rational                 delta;
  std::vector<std::string> k_in_g, k_in_s, k2_in_s;  // labels
  std::string              gbar_desc;
  std::optional<size_t>    gbar_order;
  size_t                   f_size = 0;
  Rational                 f_quality;
  std::string              folner_strategy;
  size_t                   p_size = 0;
  std::string              p_kind;
  Rational                 p_measured_mult, p_measured_sep;
  size_t                   y_size = 0;
  std::uint64_t            z_size = 0;
  std::uint64_t            ground_size = 0;
  Rational                 zfp_fraction;   // |Z x F x P| / N
  Rational                 good_fraction;  // |H| / N
};

struct BuildResult {
  ActionWitness witness;
  ProvenanceLog log;
};

// Executes the witness construction: delta, the split of K, the joint
// quotient image of the unit group, a Folner set F for the projected units,
// a (K n G, delta)-approximation P, the translate closure Y, the block
// Z x F x P sized so that its mass exceeds 1-delta, the extra point "bot",
// and the three-case action tables for {1} u K u K^2.
//
// Refuses (HypothesesNotMet) unless the hypothesis report certifies
// LocalAmenability. Identical inputs produce byte-identical witnesses and
// logs.
BuildResult build_witness(MonoidOracle const& m, std::vector<Elem> const& k,
                          Rational const& eps, BuildOptions const& opts = {});

// The two-step stabiliser decomposition of the unit-group action around a
// non-unit x: Z = union of H-classes meeting the orbit of x, P the pointwise
// stabiliser of its H-classes under the circle action, Q the pointwise
// stabiliser of Z itself, and the embedding of P/Q into the product of the
// Schutzenberger groups.
struct PQDecomposition {
  std::uint32_t              d_class_id = 0;
  std::vector<std::uint32_t> orbit;        // monoid indices, sorted
  std::vector<std::uint32_t> z_elements;   // monoid indices, sorted
  std::vector<std::uint32_t> h_class_ids;  // sorted
  std::vector<std::uint32_t> p_members, q_members;  // unit-group indices
  bool   p_normal = false, q_normal = false;
  size_t g_order = 0, g_over_p = 0, p_over_q = 0;
  size_t schutz_order        = 0;
  bool   embedding_injective = false;  // P/Q into the Schutzenberger power
};

PQDecomposition compute_pq_decomposition(FiniteMonoid const& m,
                                         std::uint32_t       x);

// Diagnostic only: measures the defects of a shipped candidate family of
// finite bicyclic "actions" (default: the truncation action on {0..N-1}).
// No pass/fail claim is attached.
struct BicyclicProbe {
  ActionWitness witness;
  DefectReport  report;
};

BicyclicProbe bicyclic_defect_probe(std::uint64_t            n_points,
                                    std::vector<Elem> const& k_set,
                                    std::string const& family = "truncation");

}  // namespace soficlab
#endif  // SOFICLAB_BUILDER_HPP_
