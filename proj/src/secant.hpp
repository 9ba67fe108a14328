#pragma once

// Case analysis shared by the two secant composition laws.

#include <optional>

#include "fricke/fricke.hpp"

namespace fricke::detail {

/// Answer of p o q when the affine closed form does not apply: coincident or
/// singular operands, a line lying on the surface, or a vanishing coordinate
/// difference (third point at infinity in the direction p - q).
std::optional<ProjectiveComposeResult> secant_special_case(const Triple& p, const Triple& q,
                                                                   const Surface& surface);

template <class Point>
ComposeResult<Point> lift_special_case(const ProjectiveComposeResult& r) {
  if (const auto* u = std::get_if<Undefined>(&r)) return *u;
  return std::get<ProjectivePoint3>(r);
}

}  // namespace fricke::detail
