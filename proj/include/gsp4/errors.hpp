#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp4 {

enum class errc {
  invalid_weight_parity,
  outside_alcove_region,
  target_below_source,
  unsupported_weight,
  negative_multiplicity,
  no_regular_representative,
  not_symplectically_balanced,
  invalid_modular_weight,
  exponents_not_ordered,
  degenerate_type_use_direct_route,
  genericity_violated,
  weight_out_of_range,
  route_disagreement,
  bad_request,
};

std::string_view to_string(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

  // bug-level conditions get exit code 3 at the CLI, everything else 2
  bool internal() const {
    return code_ == errc::route_disagreement || code_ == errc::negative_multiplicity;
  }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw error(code, detail); }

}  // namespace gsp4
