#ifndef SOFICLAB_GREEN_HPP_
#define SOFICLAB_GREEN_HPP_

#include <cstdint>
#include <vector>

#include "soficlab/finite_monoid.hpp"
#include "soficlab/group.hpp"

namespace soficlab {

// The five Green partitions of a finite monoid plus egg-box geometry.
// Class ids are dense and numbered by first element occurrence, so equal
// partitions have identical id vectors.
struct GreenStructure {
  std::vector<std::uint32_t> r_class, l_class, h_class, d_class, j_class;
  size_t n_r = 0, n_l = 0, n_h = 0, n_d = 0, n_j = 0;

  std::vector<std::vector<std::uint32_t>> r_members, l_members, h_members,
      d_members, j_members;

  // Egg-box picture of one D-class: rows are R-classes, columns L-classes,
  // cells H-classes.
  struct DClassBox {
    std::vector<std::uint32_t>              r_ids, l_ids;
    std::vector<std::vector<std::uint32_t>> h_grid;   // r x l -> h id
    std::vector<std::vector<size_t>>        h_sizes;  // r x l -> |H|
  };
  std::vector<DClassBox> eggbox;

  std::uint32_t unit_h_class = 0;  // H-class id of the identity

  bool same_partitions(GreenStructure const& other) const {
    return r_class == other.r_class && l_class == other.l_class
           && h_class == other.h_class && d_class == other.d_class
           && j_class == other.j_class;
  }
};

// Computes the partitions via strongly connected components of the one-sided
// Cayley graphs (all elements as generators); D as the join of R and L,
// J from the two-sided graph. The egg-box grids are assembled and checked:
// every R x L cell within a D-class holds exactly one H-class.
GreenStructure green_relations(FiniteMonoid const& m);

// Definitional oracle: compares principal ideals Mx, xM, MxM as sets and
// composes L with R for D. Cubic; meant for cross-checking on |M| <= 60.
GreenStructure green_relations_bruteforce(FiniteMonoid const& m);

// Units with their own Cayley table; `monoid_index_of` maps group indices
// back into the monoid (may be null).
std::shared_ptr<TableGroup const> group_of_units(
    FiniteMonoid const& m, std::vector<std::uint32_t>* monoid_index_of);

// Whether the J-class containing 1 equals the unit set, computed honestly
// from the given structure rather than assumed.
bool j_class_of_identity_is_units(FiniteMonoid const&   m,
                                  GreenStructure const& green);

// The group of permutations of one H-class realised by right translation:
// scan all m with Hm = H, record the induced permutations, deduplicate.
struct SchutzGroup {
  std::vector<std::uint32_t>              h_members;  // sorted element indices
  std::vector<std::vector<std::uint32_t>> perms;  // position maps on h_members
  size_t order() const { return perms.size(); }
  bool   abelian = true;
  std::vector<size_t> element_orders;  // sorted multiset
};

SchutzGroup schutzenberger_group(FiniteMonoid const&   m,
                                 GreenStructure const& green,
                                 std::uint32_t         h_id);

// The action of the unit group on the H-classes of one D-class induced by
// right translation. Well-definedness is verified over all representatives
// at construction.
struct CircleAction {
  std::vector<std::uint32_t> h_ids;         // domain (H-class ids)
  std::vector<std::uint32_t> unit_indices;  // monoid indices of the units
  // act[h position][unit position] -> h position
  std::vector<std::vector<std::uint32_t>> act;
};

CircleAction circle_action(FiniteMonoid const& m, GreenStructure const& green,
                           std::uint32_t d_id);

struct DClassSummary {
  std::uint32_t d_id = 0;
  size_t        size = 0;
  size_t        r_count = 0, l_count = 0, h_count = 0;
  bool          regular        = false;
  bool          contains_units = false;
  size_t        schutz_order   = 0;
  bool          schutz_abelian = true;
  std::vector<size_t> schutz_element_orders;
};

struct EggboxReport {
  size_t                     monoid_size = 0;
  size_t                     unit_count  = 0;
  bool                       units_equal_j_class_of_identity = false;
  std::vector<DClassSummary> d_classes;
};

EggboxReport eggbox_summary(FiniteMonoid const& m);

// One aligned block per D-class; rows R-classes, columns L-classes, cells
// H-class sizes.
std::string eggbox_ascii(FiniteMonoid const& m, GreenStructure const& green);

}  // namespace soficlab
#endif  // SOFICLAB_GREEN_HPP_
