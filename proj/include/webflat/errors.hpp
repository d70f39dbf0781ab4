#pragma once

#include <stdexcept>
#include <string>

namespace webflat {

// Math-contract violations carry a stable code ("NotDivisible", "WrongScale",
// ...) so the CLI can emit structured payloads and tests can assert on them.
class ComputationError : public std::runtime_error {
 public:
  ComputationError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Raised by family_limit when the supplied scale does not cancel the actual
// eps-valuation of the pulled-back form; carries the valuation so the caller
// can correct the exponent.
class WrongScaleError : public ComputationError {
 public:
  explicit WrongScaleError(int valuation)
      : ComputationError("WrongScale",
                         "scale exponent does not normalize eps-valuation " +
                             std::to_string(valuation)),
        valuation_(valuation) {}
  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw ComputationError(code, what);
}

}  // namespace webflat
