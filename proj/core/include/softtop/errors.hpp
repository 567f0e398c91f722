#pragma once

#include <stdexcept>
#include <string>

namespace softtop {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size cap was exceeded; callers may retry with larger GenerationLimits.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class InvalidContext : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& id)
      : Error("unknown element: " + id), identifier(id) {}
  std::string identifier;
};

class UnknownParameter : public Error {
 public:
  explicit UnknownParameter(const std::string& id)
      : Error("unknown parameter: " + id), identifier(id) {}
  std::string identifier;
};

class ParamMismatch : public Error {
 public:
  using Error::Error;
};

class UniverseOverlap : public Error {
 public:
  explicit UniverseOverlap(const std::string& id)
      : Error("universes overlap at element: " + id), identifier(id) {}
  std::string identifier;
};

class EmptySubuniverse : public Error {
 public:
  using Error::Error;
};

class TopologyTooLarge : public ResourceLimitError {
 public:
  explicit TopologyTooLarge(std::size_t cap)
      : ResourceLimitError("generated topology exceeds cap of " +
                           std::to_string(cap) + " opens"),
        cap(cap) {}
  std::size_t cap;
};

class EnumerationTooLarge : public ResourceLimitError {
 public:
  explicit EnumerationTooLarge(const std::string& what) : ResourceLimitError(what) {}
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class NotABase : public Error {
 public:
  using Error::Error;
};

// The set of continuous maps is empty, so no function-space universe exists.
class EmptyFunctionSpace : public Error {
 public:
  using Error::Error;
};

// Currying produced a slice that is not a continuous map.
class NotPointwiseContinuousSlice : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& id)
      : Error("unknown claim id: " + id), identifier(id) {}
  std::string identifier;
};

}  // namespace softtop
