#pragma once

#include <stdexcept>
#include <string>

namespace remotal {

enum class Errc {
  dimension_mismatch,
  invalid_norm,
  zero_vector,
  invalid_argument,
  sampling_floor,
  invalid_config,
  io,
};

// Every error raised by the toolkit. `field()` names the offending input
// (a config path such as "norm.p", or an argument name) when one applies.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        code_(code),
        field_(std::move(field)) {}

  Errc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  Errc code_;
  std::string field_;
};

}  // namespace remotal
