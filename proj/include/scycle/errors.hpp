#pragma once

#include <stdexcept>
#include <string>

namespace scycle {

// Precondition failures that a caller can trigger.

class InsufficientBranchVertices : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MalformedFrame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AugmentPreconditionViolated : public std::invalid_argument {
 public:
  AugmentPreconditionViolated(std::string clause)
      : std::invalid_argument("augment precondition violated: " + clause), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal-bug sentinels: these must never fire on valid input.

class PackingShortfall : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoImprovingCase : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IterationCapExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scycle
