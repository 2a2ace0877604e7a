#pragma once

#include <stdexcept>
#include <string>

namespace rydcav {

// Argument outside the mathematical domain of an operation (zero detuning, r <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a documented precondition of a routine (non-symmetric matrix, case mismatch).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Perturbation sum hit a (near-)degenerate intermediate state.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(std::string msg, int target, int intermediate)
      : std::runtime_error(std::move(msg)), target_(target), intermediate_(intermediate) {}
  int target() const noexcept { return target_; }
  int intermediate() const noexcept { return intermediate_; }

 private:
  int target_;
  int intermediate_;
};

// Malformed or inconsistent configuration input. `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace rydcav

namespace rydcav {

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rydcav
