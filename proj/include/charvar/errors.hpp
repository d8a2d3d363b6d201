#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Domain errors map to CLI exit code 1; usage errors are handled by the CLI
// parser itself.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateCusp : DomainError {
  explicit DegenerateCusp(const std::string& what) : DomainError(what) {}
};

struct Inadmissible : DomainError {
  explicit Inadmissible(const std::string& what) : DomainError(what) {}
};

struct Unsupported : DomainError {
  explicit Unsupported(const std::string& what) : DomainError(what) {}
};

struct BadStep : DomainError {
  explicit BadStep(const std::string& what) : DomainError(what) {}
};

struct NotParabolic : DomainError {
  explicit NotParabolic(const std::string& what) : DomainError(what) {}
};

struct NegativeSquare : DomainError {
  explicit NegativeSquare(const std::string& what) : DomainError(what) {}
};

struct EmptyComponent : DomainError {
  explicit EmptyComponent(const std::string& what) : DomainError(what) {}
};

struct NoRealSolution : DomainError {
  explicit NoRealSolution(const std::string& what) : DomainError(what) {}
};

struct ShortOrbit : DomainError {
  explicit ShortOrbit(const std::string& what) : DomainError(what) {}
};

struct DivByZero : DomainError {
  explicit DivByZero(const std::string& what) : DomainError(what) {}
};

}  // namespace charvar
