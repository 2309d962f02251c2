#pragma once

#include <stdexcept>
#include <string>

namespace hypercyc {

// Bad argument values (out-of-range k, malformed subsets, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input has the wrong combinatorial shape (e.g. not a star plus singletons).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested object is undefined for this input (e.g. chromatic polynomial
// of a hypergraph with a loop).
class DefinitionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Size ceilings: vertex count beyond the enumeration limit, enumerations
// that would not finish.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypercyc
