#ifndef SOFICLAB_MONOID_HPP_
#define SOFICLAB_MONOID_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/encoding.hpp"
#include "soficlab/finite_monoid.hpp"
#include "soficlab/group.hpp"

namespace soficlab {

enum class TriState { True, False, Unknown };

// Structural facts a monoid instance declares about itself. For the finite
// tier everything is computed instead; for infinite built-ins each flag is
// either a documented property of the family or Unknown. Declared values
// are never upgraded to "verified" by the library.
struct DeclaredFlags {
  TriState nonunits_finite             = TriState::Unknown;
  TriState nonunit_r_classes_finite    = TriState::Unknown;
  TriState left_cancellative           = TriState::Unknown;
  TriState right_cancellative          = TriState::Unknown;
  TriState all_orbits_amenable_capable = TriState::Unknown;
  // every non-unit D-class has finitely many L-classes and amenable
  // Schutzenberger group
  TriState finitely_many_l_amenable_schutz = TriState::Unknown;
  // every non-unit D-class has finite or abelian Schutzenberger group and
  // locally amenable circle action
  TriState schutz_finite_or_abelian_local = TriState::Unknown;
  TriState regular                        = TriState::Unknown;
};

// The oracle contract for monoids whose elements cannot be tabulated.
// Elements are canonical byte encodings: equal exactly when byte-identical.
// Everything here is immutable after construction and safe to share.
//
// Which fields are verifiable and which are trusted varies per built-in and
// is documented on each fixture: multiplication, unit arithmetic and
// translate/hom coherence are spot-checkable; "units form the J-class of
// the identity" and amenability of orbit quotients are declarations.
class MonoidOracle {
 public:
  virtual ~MonoidOracle() = default;

  virtual std::string name() const = 0;

  virtual Elem one() const                             = 0;
  virtual Elem mul(Elem const& a, Elem const& b) const = 0;
  virtual bool is_unit(Elem const& a) const            = 0;
  // Defined exactly on units.
  virtual Elem unit_inverse(Elem const& a) const = 0;

  virtual GroupPtr unit_group() const = 0;
  // Conversions between monoid encodings of units and unit-group encodings.
  virtual Elem unit_to_group(Elem const& monoid_unit) const = 0;
  virtual Elem group_to_unit(Elem const& group_elem) const  = 0;

  // Stabiliser-quotient record for the right-translation orbit of a
  // non-unit. hom maps unit-group elements into the quotient.
  virtual StabiliserQuotient orbit_data(Elem const& nonunit) const = 0;

  // Whether the units form the entire J-class of the identity: computed
  // for the finite tier, declared for structured built-ins.
  virtual TriState units_equal_identity_j_class() const = 0;

  virtual std::string label(Elem const& a) const      = 0;
  virtual Elem parse(std::string const& text) const   = 0;
  virtual std::string element_grammar() const         = 0;

  virtual DeclaredFlags declared() const { return {}; }

  // Non-null when this oracle wraps a multiplication table; the hypothesis
  // classifier then computes everything instead of reading declarations.
  virtual FiniteMonoid const* as_finite() const { return nullptr; }

  Elem word_product(std::vector<Elem> const& word) const;
};

using MonoidPtr = std::shared_ptr<MonoidOracle const>;

// Adapter giving a FiniteMonoid the oracle interface. Element encodings are
// the 32-bit table indices; orbit data is computed (and cached) from the
// table: the quotient of the unit group by the exact pointwise stabiliser
// of the right-translation orbit.
MonoidPtr wrap_finite(FiniteMonoid m, std::string name);

Elem finite_elem(std::uint32_t index);
std::uint32_t finite_index(Elem const& e);

}  // namespace soficlab
#endif  // SOFICLAB_MONOID_HPP_
