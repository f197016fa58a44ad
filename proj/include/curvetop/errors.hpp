#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvetop {

// Base class for all pipeline failures. The CLI maps subclasses onto the
// documented exit codes; library users can catch them individually.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text. `offset` is the byte position of the offending
// token in the input string.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

// An identifier other than the two declared variables.
class UnknownVariableError : public Error {
 public:
  UnknownVariableError(const std::string& name, std::size_t offset)
      : Error("unknown variable '" + name + "' (at byte " + std::to_string(offset) + ")"),
        name(name),
        offset(offset) {}
  std::string name;
  std::size_t offset;
};

// Any other invalid input (zero polynomial, bad flag combination, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// refine() was handed an interval that does not isolate exactly one root.
class NotIsolatingError : public Error {
 public:
  using Error::Error;
};

// The subresultant chain revealed a nonconstant gcd of the two input curves.
class CommonComponentError : public Error {
 public:
  using Error::Error;
};

// Refinement budget exhausted before boxes or roots became disjoint.
class SeparationFailureError : public Error {
 public:
  using Error::Error;
};

// The leading y-coefficient of the (sheared) curve vanishes over the sweep
// range; the caller retries with another shear.
class LeadingCoeffVanishesError : public Error {
 public:
  using Error::Error;
};

// Every perturbation produced an empty critical set (empty real locus, or a
// curve made of parallel lines).
class NoCriticalPointsError : public Error {
 public:
  using Error::Error;
};

// The shear schedule was exhausted without reaching generic position.
class GenericityFailureError : public Error {
 public:
  using Error::Error;
};

// Flanking fibers of a gap disagree on root counts: an undetected critical
// point. Surfaced as a drawing failure rather than repaired silently.
class TopologyInconsistentError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvetop
