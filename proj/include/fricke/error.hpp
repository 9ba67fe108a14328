#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fricke {

enum class Errc {
  parse_error,
  zero_vector,
  zero_denominator,
  not_irrational,
  coincident_points,
  origin_operand,
  degenerate_cubic,
  off_surface,
  sigma_unsupported,
  singular_point,
  zero_argument,
  base_point_undefined,
  undefined_image,
  index_out_of_range,
  denominator_vanishes,
  tangent_degenerate,
  not_a_square,
  root_off_surface,
  not_a_markov_number,
};

/// Kebab-case name of an error code; this is the string the CLI prints.
std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fricke
