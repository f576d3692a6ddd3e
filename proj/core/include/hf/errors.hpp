#pragma once

#include <stdexcept>
#include <string>

namespace hf {

// Every throwing operation in the library uses one of these codes. The CLI
// maps parse/usage to exit 1 and everything else to exit 2.
enum class errc {
  composite_characteristic,
  unsupported_degree,
  scale_cap,
  division_by_zero,
  field_mismatch,
  wrong_characteristic,
  indeterminate_point,

  disconnected,
  duplicate_marking,
  dangling_reference,
  duplicate_vertex,
  invalid_genus,

  contracted_with_degree,
  non_adjacent_image,
  leg_mismatch,
  invalid_behavior,

  parity_error,
  negative_genus,

  degenerate_lambda,
  not_singular,
  singular_curve,

  not_on_fiber,

  parse_error,
  usage_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

// A non-throwing validation outcome. `element` names the offending vertex,
// edge, leg, or map entry.
struct Violation {
  errc code;
  std::string element;
  std::string message;
};

}  // namespace hf
