#ifndef SOFICLAB_FINITE_MONOID_HPP_
#define SOFICLAB_FINITE_MONOID_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace soficlab {

namespace limits {
// Hard caps keeping exhaustive validation tractable. CLI callers may lower
// them via environment variables but not raise them past these values.
constexpr size_t kTableCap          = 100000;  // max |M| for table monoids
constexpr size_t kTransformationCap = 5;       // max n for T_n
}  // namespace limits

// A monoid given by its full multiplication table. Associativity and the
// two-sided identity are checked exhaustively at construction; instances are
// immutable afterwards, so concurrent readers are safe.
class FiniteMonoid {
 public:
  // `table[i][j]` is the index of the product (element i) * (element j).
  // Throws BadIndex, NotAssociative (with a witnessing triple) or NoIdentity.
  FiniteMonoid(std::vector<std::vector<std::uint32_t>> table,
               std::vector<std::string>                names);

  size_t size() const noexcept { return table_.size(); }
  std::uint32_t identity() const noexcept { return identity_; }

  std::uint32_t product(std::uint32_t i, std::uint32_t j) const {
    return table_[i][j];
  }

  std::string const& name(std::uint32_t i) const { return names_[i]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::vector<std::vector<std::uint32_t>> const& table() const noexcept {
    return table_;
  }

  // Index of the named element, or throws BadIndex.
  std::uint32_t index_of(std::string const& name) const;

  // Left-to-right fold; the empty word gives the identity.
  std::uint32_t word_product(std::vector<std::uint32_t> const& word) const;

  bool is_idempotent(std::uint32_t i) const { return product(i, i) == i; }

  // Units are the elements with a two-sided inverse.
  bool is_unit(std::uint32_t i) const;
  std::vector<std::uint32_t> units() const;

  // xyx = x for some y.
  bool is_regular_element(std::uint32_t x) const;

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::string>                names_;
  std::uint32_t                           identity_;
};

FiniteMonoid make_finite_monoid(std::vector<std::vector<std::uint32_t>> table,
                                std::vector<std::string>                names);

// The full transformation monoid T_n on {0, ..., n-1}, composing left to
// right: (f * g)(t) = g(f(t)). Element names are image strings, e.g. "102".
FiniteMonoid make_transformation_monoid(
    size_t n, size_t cap = limits::kTransformationCap);

FiniteMonoid direct_product(FiniteMonoid const& a, FiniteMonoid const& b,
                            size_t cap = limits::kTableCap);

// The 2-element semilattice {1, 0} with 1*1 = 1 and all other products 0.
FiniteMonoid make_semilattice2();

// The cyclic group Z/n as a monoid, names "0", ..., "n-1".
FiniteMonoid make_cyclic_monoid(size_t n);

FiniteMonoid make_trivial_monoid();

struct Cancellativity {
  bool left;
  bool right;
};

Cancellativity cancellativity_check(FiniteMonoid const& m);

}  // namespace soficlab
#endif  // SOFICLAB_FINITE_MONOID_HPP_
