#ifndef SOFICLAB_WITNESS_IO_HPP_
#define SOFICLAB_WITNESS_IO_HPP_

#include <string>

#include "soficlab/finite_monoid.hpp"
#include "soficlab/witness.hpp"

namespace soficlab {

// Canonical JSON rendering; serializing the result of a parse reproduces
// the input byte-for-byte.
std::string   witness_to_json(ActionWitness const& w);
ActionWitness witness_from_json(std::string const& text);

void          save_witness(ActionWitness const& w, std::string const& path);
ActionWitness load_witness(std::string const& path);

// {"size": n, "identity": i, "names": [...], "table": [[...], ...]},
// row-major, 0-based.
std::string  monoid_to_json(FiniteMonoid const& m);
FiniteMonoid monoid_from_json(std::string const& text);

void         save_monoid(FiniteMonoid const& m, std::string const& path);
FiniteMonoid load_monoid(std::string const& path);

}  // namespace soficlab
#endif  // SOFICLAB_WITNESS_IO_HPP_
