#pragma once

#include <stdexcept>
#include <string>

namespace duality {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input state or coefficient pair failed its normalization precondition.
/// Carries the norm deficit |norm^2 - 1| that was observed.
class NormalizationError : public Error {
  public:
    NormalizationError(const std::string& what, double deficit)
        : Error(what), deficit_(deficit) {}
    double deficit() const { return deficit_; }

  private:
    double deficit_;
};

/// A parameter is outside its physical domain (non-positive length,
/// |overlap| > 1, non-finite component, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A grid does not cover the spatial support a computation needs.
/// Carries the extent that would have been sufficient.
class CoverageError : public Error {
  public:
    CoverageError(const std::string& what, double required_extent)
        : Error(what), required_extent_(required_extent) {}
    double required_extent() const { return required_extent_; }

  private:
    double required_extent_;
};

/// A pattern cannot be analyzed (e.g. Imax + Imin vanished).
class DegeneratePatternError : public Error {
  public:
    using Error::Error;
};

/// One of the chained visibility/distinguishability/uncertainty
/// inequalities failed; names the inequality that broke.
class ChainViolationError : public Error {
  public:
    ChainViolationError(const std::string& what, std::string inequality)
        : Error(what), inequality_(std::move(inequality)) {}
    const std::string& inequality() const { return inequality_; }

  private:
    std::string inequality_;
};

/// A quantity that must hold by construction failed to, signalling a bug
/// in the caller's state preparation rather than bad user input.
class InternalConsistencyError : public Error {
  public:
    using Error::Error;
};

}  // namespace duality
