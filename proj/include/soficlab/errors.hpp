#ifndef SOFICLAB_ERRORS_HPP_
#define SOFICLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace soficlab {

// Base for all library errors. `module_name` identifies the subsystem that
// raised the error so the CLI can report it without guessing.
class Error : public std::runtime_error {
 public:
  Error(std::string module_name, std::string const& what)
      : std::runtime_error(what), module_(std::move(module_name)) {}

  std::string const& module_name() const noexcept { return module_; }

 private:
  std::string module_;
};

struct NotAssociative : Error {
  NotAssociative(size_t i, size_t j, size_t k)
      : Error("core",
              "multiplication table is not associative: (" + std::to_string(i)
                  + "*" + std::to_string(j) + ")*" + std::to_string(k)
                  + " != " + std::to_string(i) + "*(" + std::to_string(j) + "*"
                  + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  size_t i, j, k;
};

struct NoIdentity : Error {
  NoIdentity() : Error("core", "table has no two-sided identity element") {}
};

struct BadIndex : Error {
  explicit BadIndex(std::string const& what) : Error("core", what) {}
};

struct CapExceeded : Error {
  CapExceeded(std::string module_name, std::string const& what)
      : Error(std::move(module_name), what) {}
};

struct EmptySet : Error {
  explicit EmptySet(std::string const& what) : Error("groups", what) {}
};

struct UnsupportedGroup : Error {
  explicit UnsupportedGroup(std::string const& what)
      : Error("core", what) {}
};

struct NotAmenableCapable : Error {
  explicit NotAmenableCapable(std::string const& what)
      : Error("groups", what) {}
};

// Raised when a bounded search stops without reaching its target quality.
// `best` carries the largest quality found, rendered as "p/q".
struct SearchBudgetExceeded : Error {
  SearchBudgetExceeded(std::string const& what, std::string best)
      : Error("groups", what + " (best quality found: " + best + ")"),
        best(std::move(best)) {}
  std::string best;
};

struct NoSeparatingQuotient : Error {
  explicit NoSeparatingQuotient(std::string const& what)
      : Error("groups", what) {}
};

struct MissingTable : Error {
  explicit MissingTable(std::string const& what) : Error("witness", what) {}
};

struct IdentityViolated : Error {
  explicit IdentityViolated(std::string const& what)
      : Error("witness", what) {}
};

struct MalformedFile : Error {
  explicit MalformedFile(std::string const& what) : Error("witness", what) {}
};

struct HypothesesNotMet : Error {
  explicit HypothesesNotMet(std::string const& clause)
      : Error("builder", "HypothesesNotMet: " + clause), clause(clause) {}
  std::string clause;
};

}  // namespace soficlab
#endif  // SOFICLAB_ERRORS_HPP_
