#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hiercoop {

// Base for every error raised by the analysis library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input lies outside the domain where a formula is defined
// (e.g. a logarithm base <= 1 or a non-positive logarithm argument).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A HierarchyPlan violates one of its structural invariants.
class PlanError : public Error {
 public:
  PlanError(std::string field, std::string reason)
      : Error("invalid plan: " + field + ": " + reason),
        field_(std::move(field)),
        reason_(std::move(reason)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

// The requested hierarchy cannot be built with the available nodes,
// e.g. an optimal cluster size drops below 2.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hiercoop
