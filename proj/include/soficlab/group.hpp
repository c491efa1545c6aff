#ifndef SOFICLAB_GROUP_HPP_
#define SOFICLAB_GROUP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soficlab/encoding.hpp"
#include "soficlab/finite_monoid.hpp"

namespace soficlab {

class Group;
using GroupPtr = std::shared_ptr<Group const>;

// A group with canonically encoded elements. Elements of a group are equal
// exactly when their encodings are byte-identical. Handles are immutable and
// shareable across threads.
//
// Three kinds are constructible directly (finite table, finitely generated
// abelian, residually finite via supplied finite quotients); a fourth arises
// as the image of a group in a finite direct product of quotients.
class Group {
 public:
  enum class Kind { FiniteTable, FgAbelian, ResiduallyFinite, QuotientImage };

  virtual ~Group() = default;

  virtual Kind        kind() const noexcept = 0;
  virtual std::string description() const  = 0;

  virtual Elem one() const                              = 0;
  virtual Elem mul(Elem const& a, Elem const& b) const  = 0;
  virtual Elem inv(Elem const& a) const                 = 0;
  virtual std::string label(Elem const& a) const        = 0;

  // A finite generating set (for finite-table groups, all elements).
  virtual std::vector<Elem> generators() const = 0;

  virtual bool is_finite() const noexcept = 0;

  // All elements of a finite group, sorted by encoding. Throws
  // UnsupportedGroup for infinite groups.
  virtual std::vector<Elem> elements() const;

  std::optional<size_t> order() const;

  // True when the handle can produce Følner sets (finite groups, f.g.
  // abelian groups, and quotient images whose strategy applies).
  virtual bool folner_capable() const noexcept = 0;

  // Candidate Følner sets of increasing size, indexed by `step`; sorted by
  // encoding and duplicate-free. Throws NotAmenableCapable when
  // !folner_capable(). Used by the measured search in folner.hpp.
  virtual std::vector<Elem> folner_candidate(size_t step) const;
};

// Finite group by Cayley table; element encodings are 32-bit indices.
class TableGroup : public Group,
                   public std::enable_shared_from_this<TableGroup> {
 public:
  TableGroup(std::vector<std::vector<std::uint32_t>> table,
             std::vector<std::string>                names);

  static std::shared_ptr<TableGroup const> cyclic(size_t n);
  static std::shared_ptr<TableGroup const> trivial();

  // The group of units of a finite monoid, with the monoid's element names.
  // `monoid_index_of` maps each group element back into the monoid.
  static std::shared_ptr<TableGroup const> units_of(
      FiniteMonoid const& m, std::vector<std::uint32_t>* monoid_index_of);

  // Closure of a set of permutations of {0, ..., degree-1} under
  // composition (left to right). Labels are image strings.
  static std::shared_ptr<TableGroup const> from_permutations(
      size_t degree, std::vector<std::vector<std::uint32_t>> const& gens);

  Kind kind() const noexcept override { return Kind::FiniteTable; }
  std::string description() const override;

  Elem one() const override { return enc::u32(identity_); }
  Elem mul(Elem const& a, Elem const& b) const override;
  Elem inv(Elem const& a) const override;
  std::string label(Elem const& a) const override;
  std::vector<Elem> generators() const override;
  bool is_finite() const noexcept override { return true; }
  std::vector<Elem> elements() const override;
  bool folner_capable() const noexcept override { return true; }
  std::vector<Elem> folner_candidate(size_t step) const override;

  size_t        size() const noexcept { return table_.size(); }
  std::uint32_t identity_index() const noexcept { return identity_; }
  std::uint32_t index(Elem const& a) const;
  std::uint32_t product_index(std::uint32_t i, std::uint32_t j) const {
    return table_[i][j];
  }
  std::uint32_t inverse_index(std::uint32_t i) const { return inverse_[i]; }
  std::string const& name(std::uint32_t i) const { return names_[i]; }

  bool is_abelian() const;

  // Multiset of element orders, sorted ascending.
  std::vector<size_t> element_orders() const;

  // Smallest subgroup containing `gens` (as indices), sorted.
  std::vector<std::uint32_t> subgroup_closure(
      std::vector<std::uint32_t> gens) const;

  bool is_normal_subgroup(std::vector<std::uint32_t> const& sorted_subgroup)
      const;

  struct Quotient {
    std::shared_ptr<TableGroup const> group;
    // coset index of each element of the source group
    std::vector<std::uint32_t> coset_of;
    // one representative per coset (the smallest member index)
    std::vector<std::uint32_t> representative;
  };

  // Quotient by a normal subgroup, given as a sorted index set.
  Quotient quotient_by(std::vector<std::uint32_t> const& sorted_subgroup)
      const;

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::string>                names_;
  std::vector<std::uint32_t>              inverse_;
  std::uint32_t                           identity_;
};

// Z^rank x Z/f1 x ... x Z/fk. Element encodings are fixed-width coordinate
// vectors; Følner candidates are boxes {0..L}^rank crossed with the whole
// torsion part.
class FgAbelianGroup : public Group {
 public:
  FgAbelianGroup(size_t rank, std::vector<std::uint64_t> factors);

  Kind kind() const noexcept override { return Kind::FgAbelian; }
  std::string description() const override;

  Elem one() const override;
  Elem mul(Elem const& a, Elem const& b) const override;
  Elem inv(Elem const& a) const override;
  std::string label(Elem const& a) const override;
  std::vector<Elem> generators() const override;
  bool is_finite() const noexcept override { return rank_ == 0; }
  std::vector<Elem> elements() const override;
  bool folner_capable() const noexcept override { return true; }
  std::vector<Elem> folner_candidate(size_t step) const override;

  size_t rank() const noexcept { return rank_; }
  std::vector<std::uint64_t> const& factors() const noexcept {
    return factors_;
  }

  Elem make(std::vector<std::int64_t> const& coords) const;
  std::vector<std::int64_t> coords(Elem const& a) const;

 private:
  size_t                     rank_;
  std::vector<std::uint64_t> factors_;
};

// Free group of given rank, known residually finite through the supplied
// finite quotients. Elements are reduced words; there is no Følner provider.
class FreeGroup : public Group {
 public:
  struct FiniteQuotient {
    GroupPtr          target;      // finite
    std::vector<Elem> gen_images;  // image of generator i in `target`
  };

  FreeGroup(size_t rank, std::vector<FiniteQuotient> quotients);

  Kind kind() const noexcept override { return Kind::ResiduallyFinite; }
  std::string description() const override;

  Elem one() const override { return Elem(); }
  Elem mul(Elem const& a, Elem const& b) const override;
  Elem inv(Elem const& a) const override;
  std::string label(Elem const& a) const override;
  std::vector<Elem> generators() const override;
  bool is_finite() const noexcept override { return rank_ == 0; }
  std::vector<Elem> elements() const override;
  bool folner_capable() const noexcept override { return rank_ == 0; }

  size_t rank() const noexcept { return rank_; }
  std::vector<FiniteQuotient> const& quotients() const noexcept {
    return quotients_;
  }

  // Image of a word under quotient `q`.
  Elem apply_quotient(size_t q, Elem const& word) const;

  Elem generator(size_t i, bool inverse = false) const;
  Elem parse_word(std::string const& text) const;

 private:
  size_t                      rank_;
  std::vector<FiniteQuotient> quotients_;
};

// Per-orbit stabiliser data, as declared by a structured monoid: the
// quotient of the unit group by the pointwise stabiliser of one orbit of
// the right translation action, with the induced morphism and the
// translation through it.
//
// Required properties (spot-checkable, never assumed): hom is a group
// morphism; translate(s, hom(g)) equals s*g in the monoid; hom(g) trivial
// implies g fixes the whole orbit pointwise.
struct StabiliserQuotient {
  std::string orbit_id;  // canonical key; equal ids mean equal stabilisers
  GroupPtr    quotient;
  std::function<Elem(Elem const&)>              hom;
  std::function<Elem(Elem const&, Elem const&)> translate;
  bool declared_nonamenable = false;

  bool amenable_capable() const {
    return !declared_nonamenable && quotient->folner_capable();
  }
};

// The image of `source` in the direct product of the component quotients,
// with componentwise tuple encodings.
class QuotientImageGroup : public Group {
 public:
  QuotientImageGroup(GroupPtr source,
                     std::vector<StabiliserQuotient> components);

  Kind kind() const noexcept override { return Kind::QuotientImage; }
  std::string description() const override;

  Elem one() const override;
  Elem mul(Elem const& a, Elem const& b) const override;
  Elem inv(Elem const& a) const override;
  std::string label(Elem const& a) const override;
  std::vector<Elem> generators() const override;
  bool is_finite() const noexcept override;
  std::vector<Elem> elements() const override;
  bool folner_capable() const noexcept override;
  std::vector<Elem> folner_candidate(size_t step) const override;

  // The induced morphism g -> (hom_1(g), ..., hom_r(g)).
  Elem project(Elem const& source_elem) const;

  size_t component_count() const noexcept { return components_.size(); }
  StabiliserQuotient const& component(size_t i) const {
    return components_[i];
  }
  Elem component_of(Elem const& tuple_elem, size_t i) const;

  // Which Følner strategy folner_candidate() uses: "whole-finite-image" or
  // "measured-pushforward".
  std::string folner_strategy() const;

 private:
  GroupPtr                        source_;
  std::vector<StabiliserQuotient> components_;
};

struct JointQuotientImage {
  std::shared_ptr<QuotientImageGroup const> group;
  std::function<Elem(Elem const&)>          hom;
};

// Builds the image of `source` in the direct product of the quotients.
// Components with equal orbit_id are collapsed to a single factor (equal ids
// declare equal stabilisers, so the collapsed map has the same kernel).
JointQuotientImage joint_quotient_image(
    GroupPtr source, std::vector<StabiliserQuotient> quotients);

}  // namespace soficlab
#endif  // SOFICLAB_GROUP_HPP_
