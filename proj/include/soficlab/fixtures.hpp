#ifndef SOFICLAB_FIXTURES_HPP_
#define SOFICLAB_FIXTURES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "soficlab/group.hpp"
#include "soficlab/monoid.hpp"

namespace soficlab {

// The bicyclic monoid <p,q | pq = 1>, elements in the normal form q^a p^b
// with p = (0,1) and q = (1,0). Declares "units = J-class of 1" FALSE:
// 1 = pq with p a non-unit.
//
// Verifiable here: the normal-form product, unit arithmetic. Trusted: the
// declared J-class flag (it is the family's defining obstruction).
MonoidPtr make_bicyclic();

// The monoid of cosets of subgroups of Z under setwise multiplication:
// elements a+H for H in the join-closure (gcd) of the given subgroups mZ
// plus the trivial subgroup; units are the singletons {a}. The stabiliser
// quotient of a coset of mZ is Z/m with the canonical projection.
//
// Verifiable: products, translate/hom coherence (tested exhaustively at
// small index). Trusted: the declared J-class flag.
MonoidPtr make_coset_monoid(std::vector<std::uint64_t> subgroup_moduli);

// Same construction over a finite group: descriptors are generating sets
// of normal subgroups. Throws UnsupportedGroup when a generated subgroup
// is not normal.
MonoidPtr make_coset_monoid(std::shared_ptr<TableGroup const> group,
                            std::vector<std::vector<std::uint32_t>> const&
                                subgroup_generators);

// F x S for F free of the given rank and S the 2-element semilattice:
// elements (w, b), products (w,b)(v,c) = (wv reduced, b AND c). The single
// non-unit orbit F x {0} has trivial stabiliser, so its quotient is F
// itself, declared non-amenable; the builder must refuse such instances.
MonoidPtr make_free_times_semilattice(
    size_t rank, std::vector<FreeGroup::FiniteQuotient> quotients);

// Rank-2 instance with one separating quotient onto S_5 (generator images
// a 5-cycle and a 4-cycle, which generate the whole of S_5).
MonoidPtr make_f2xs_default();

struct FixtureInfo {
  std::string name;
  std::string summary;
  std::string grammar;
};

std::vector<FixtureInfo> fixture_list();

// Resolves names like "T2", "SL2", "Z2xSL2", "bicyclic", "cosetZ:2,3",
// "F2xS". Throws BadIndex for unknown names.
MonoidPtr get_fixture(std::string const& name);

}  // namespace soficlab
#endif  // SOFICLAB_FIXTURES_HPP_
