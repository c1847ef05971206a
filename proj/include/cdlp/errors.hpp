#pragma once

#include <stdexcept>
#include <string>

namespace cdlp {

// Bad input data: malformed files, out-of-range ids, invalid configs.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an API precondition (removing a non-edge, scoring a pair
// outside the candidate set, ...). The CLI maps this to exit code 2.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A pipeline stage lost every edge and cannot be detected on.
class DegenerateStageError : public ContractError {
 public:
  DegenerateStageError(const std::string& stage, const std::string& what)
      : ContractError(what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Benchmark generation failed; `phase` names the construction step that
// could not be completed.
class GenerationError : public InputError {
 public:
  GenerationError(const std::string& phase, const std::string& what)
      : InputError(what), phase_(phase) {}
  const std::string& phase() const { return phase_; }

 private:
  std::string phase_;
};

}  // namespace cdlp
