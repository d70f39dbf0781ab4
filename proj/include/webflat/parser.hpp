#pragma once

#include <string>
#include <vector>

#include "webflat/errors.hpp"
#include "webflat/mpoly.hpp"

namespace webflat {

class SyntaxError : public ComputationError {
 public:
  SyntaxError(size_t offset, const std::string& message, std::vector<std::string> expected)
      : ComputationError("SyntaxError",
                         message + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}
  size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  size_t offset_;
  std::vector<std::string> expected_;
};

// Plain polynomial expression: integers, rationals a/b, the constants i, r3,
// zeta (with integer powers, possibly negative), named variables, +,-,*,^,().
MPoly parse_poly(const std::string& text);

// Affine 1-form expression over dx/dy; returns the raw coefficient pair
// (A, B) with ω = A dx + B dy, before saturation.
struct OneFormParts {
  MPoly A, B;
};
OneFormParts parse_oneform_parts(const std::string& text);

}  // namespace webflat
