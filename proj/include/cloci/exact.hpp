#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cloci {

/// Arbitrary-precision integer. All divisor arithmetic is exact; no floating
/// point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form (positive denominator,
/// reduced) by the backend.
using Rat = boost::multiprecision::cpp_rational;

/// Malformed input: JSON syntax errors, schema violations, bad command lines.
/// The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Semantically invalid request: invalid graph data, missing discrepancies,
/// classification preconditions not met. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// There is no divisor whose multiplicity divides m: the m-contact locus
/// based at the origin is empty.
class NoMDivisorError : public DomainError {
 public:
  explicit NoMDivisorError(const std::string& what) : DomainError(what) {}
};

/// The graph is not m-separating and the operation requires it.
class NotSeparatingError : public DomainError {
 public:
  explicit NotSeparatingError(const std::string& what) : DomainError(what) {}
};

/// The resolution is not admissible; the component classification would be
/// unsound, so it is refused.
class NotAdmissibleError : public DomainError {
 public:
  explicit NotAdmissibleError(const std::string& what) : DomainError(what) {}
};

/// Renders a rational as "p" when integral, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" with arbitrary-precision parts. Throws ParseError.
Rat parse_rational(const std::string& text);

}  // namespace cloci
