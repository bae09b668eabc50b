#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permbase {

// Base class for every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

// Breadth-first element enumeration crossed the requested cap; the caller
// is expected to fall back to a stabilizer chain.
struct OrderExceedsCap : Error {
  using Error::Error;
};

// A generated family/complex/induced action would exceed its configured bound.
struct SizeExplosion : Error {
  using Error::Error;
};

// The group fixes some point of the domain globally. Closure-based
// operations reject such groups; strip_fixed_points() removes the points.
struct DomainHasTrivialOrbits : Error {
  using Error::Error;
};

struct DuplicateEntries : Error {
  using Error::Error;
};

struct DegreeTooSmall : Error {
  using Error::Error;
};

struct EvenOrder : Error {
  using Error::Error;
};

struct NotIntersectionClosed : Error {
  using Error::Error;
};

struct GroundMissing : Error {
  using Error::Error;
};

// Text parse failure with 1-based position information.
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

// Tunable resource bounds shared by the search and enumeration routines.
// Searches that can be budgeted report exhaustion through a `complete`
// flag on their result instead of throwing.
struct SearchLimits {
  std::uint64_t element_cap = 200'000;       // materialize elements up to this order
  std::uint64_t node_budget = 10'000'000;    // DFS / subset-search node cap
  std::uint64_t family_bound = 1'000'000;    // closed-set family size cap
  std::uint64_t subset_bound = 1'000'000;    // induced k-subset degree cap
  unsigned complex_degree_bound = 20;        // materialize_complex degree cap
};

}  // namespace permbase
