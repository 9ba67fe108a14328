#include "fricke/error.hpp"

namespace fricke {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse-error";
    case Errc::zero_vector: return "zero-vector";
    case Errc::zero_denominator: return "zero-denominator";
    case Errc::not_irrational: return "not-irrational";
    case Errc::coincident_points: return "coincident-points";
    case Errc::origin_operand: return "origin-operand";
    case Errc::degenerate_cubic: return "degenerate-cubic";
    case Errc::off_surface: return "off-surface";
    case Errc::sigma_unsupported: return "sigma-unsupported";
    case Errc::singular_point: return "singular-point";
    case Errc::zero_argument: return "zero-argument";
    case Errc::base_point_undefined: return "base-point-undefined";
    case Errc::undefined_image: return "undefined-image";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::denominator_vanishes: return "denominator-vanishes";
    case Errc::tangent_degenerate: return "tangent-degenerate";
    case Errc::not_a_square: return "not-a-square";
    case Errc::root_off_surface: return "root-off-surface";
    case Errc::not_a_markov_number: return "not-a-markov-number";
  }
  return "unknown";
}

}  // namespace fricke
