#ifndef SOFICLAB_WITNESS_HPP_
#define SOFICLAB_WITNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/encoding.hpp"
#include "soficlab/finite_monoid.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

namespace limits {
constexpr std::uint64_t kGroundCap = 5000000;  // max materialized |X|
}

// A finite approximate left action: a ground set X of size N and one total
// table per acting element. The acting set stores exactly {1} u K u K*K
// (deduplicated by canonical encoding); `products` records which acting
// element realises each product g_i * g_j for pairs over K, so defects can
// be measured without re-multiplying in the monoid.
struct ActionWitness {
  struct ActingElement {
    Elem        enc;
    std::string label;
    bool operator==(ActingElement const&) const = default;
  };
  struct ProductEntry {
    std::uint32_t i, j, k;  // acting[i] * acting[j] == acting[k]
    bool operator==(ProductEntry const&) const = default;
  };

  std::uint64_t                           ground_size = 0;
  std::vector<std::string>                point_labels;  // optional, opaque
  std::vector<ActingElement>              acting;
  std::vector<std::vector<std::uint32_t>> tables;  // acting.size() x N
  std::vector<ProductEntry>               products;

  bool operator==(ActionWitness const&) const = default;

  // Index into `acting`, or npos when absent.
  static constexpr std::uint32_t npos = UINT32_MAX;
  std::uint32_t index_of(Elem const& e) const;
};

// Exact rational defect measurements for one witness and one K.
// mult lists every ordered pair over K (including g = h); sep lists every
// unordered pair of distinct elements. All proportions have denominator N.
struct DefectReport {
  struct MultEntry {
    std::string g_label, h_label;
    Rational    defect;
  };
  struct SepEntry {
    std::string g_label, h_label;
    Rational    overlap;
  };

  Int                    ground_size = 0;
  std::vector<MultEntry> mult;
  std::vector<SepEntry>  sep;
  std::uint64_t          identity_violations = 0;
  Rational               max_mult_defect     = 0;
  Rational               max_sep_overlap     = 0;
};

// Measures the witness against the three defining conditions. Counting is
// partitioned across `workers` threads and combined by exact addition, so
// the report is identical for any worker count. Identity violations are
// counted, not thrown, so broken witnesses can be diagnosed.
//
// Throws MissingTable when an element of {1} u K u K*K has no table or a
// K x K product entry is absent.
DefectReport check_witness(ActionWitness const& witness, Elem const& identity,
                           std::vector<Elem> const& k_set,
                           size_t                   workers = 1);

// True when identity_violations = 0, max_mult_defect <= eps and
// max_sep_overlap <= eps (boundary inclusive).
bool passes(DefectReport const& report, Rational const& eps);

// Strict structural validation: totality, identity table equal to the
// identity map, and product entries consistent with `mul`. Throws
// MissingTable, BadIndex or IdentityViolated.
void validate_witness(
    ActionWitness const& witness, Elem const& identity,
    std::vector<Elem> const& k_set,
    std::function<Elem(Elem const&, Elem const&)> const& mul);

// Independent oracle construction for finite monoids: X = M^n under
// componentwise left translation, a genuine action, with n chosen so that
// the worst pairwise agreement fraction p over K satisfies p^n <= eps.
//
// When |M|^n exceeds `ground_cap` no witness is materialized; the report is
// computed implicitly (multiplicative defects are structurally zero and
// sep overlaps are exactly agreement^n).
struct DiagonalPowerResult {
  std::optional<ActionWitness> witness;
  DefectReport                 report;
  size_t                       power = 0;  // n
  Rational                     max_agreement;  // p
};

DiagonalPowerResult diagonal_power_witness(
    FiniteMonoid const& m, std::vector<std::uint32_t> const& k_indices,
    Rational const& eps, std::uint64_t ground_cap = limits::kGroundCap);

}  // namespace soficlab
#endif  // SOFICLAB_WITNESS_HPP_
