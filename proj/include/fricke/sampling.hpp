#pragma once

// Seeded random rational points, for property checks. Every sampler draws
// from a caller-owned std::mt19937_64 so runs are reproducible.

#include <random>

#include "fricke/double_fricke.hpp"
#include "fricke/fricke.hpp"
#include "fricke/sections.hpp"

namespace fricke {

/// num/den with 0 < |num| <= height and 0 < den <= height.
Rational random_rational(std::mt19937_64& rng, unsigned height);

/// param_affine at random chart parameters of the given height.
FrickePoint random_fricke_point(std::mt19937_64& rng, unsigned height);
/// f2_param_affine at random chart parameters.
F2Point random_f2_point(std::mt19937_64& rng, unsigned height);

/// [p:q:r] with integer entries in [-height, height], not all zero.
ProjectivePoint2 random_p2_point(std::mt19937_64& rng, unsigned height);

/// Second intersection of a random rational slope through O with the section.
/// Never returns O itself.
SectionPoint random_section_point(const SectionFrame& frame, std::mt19937_64& rng, unsigned height);
SectionPoint random_section_point(const F2SectionFrame& frame, std::mt19937_64& rng, unsigned height);

}  // namespace fricke
