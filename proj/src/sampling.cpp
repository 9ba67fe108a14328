#include "fricke/sampling.hpp"

#include "fricke/error.hpp"

namespace fricke {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <class Frame, class FromSlope>
SectionPoint sample_section(const Frame& frame, std::mt19937_64& rng, unsigned height, FromSlope from_slope) {
  for (;;) {
    // A few slopes are tangent at O or parallel to an asymptote; redraw.
    try {
      const Slope s = draw(rng, 0, 15) == 0 ? Slope::vertical() : Slope::finite(draw(rng, 0, 7) == 0 ? Rational(0) : random_rational(rng, height));
      SectionPoint p = from_slope(frame, s);
      if (!(p == frame.origin())) return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, unsigned height) {
  const long h = static_cast<long>(height);
  long num = 0;
  while (num == 0) num = draw(rng, -h, h);
  return make_rational(Integer(num), Integer(draw(rng, 1, h)));
}

FrickePoint random_fricke_point(std::mt19937_64& rng, unsigned height) {
  const Rational P = random_rational(rng, height);
  const Rational Q = random_rational(rng, height);
  return param_affine(P, Q);
}

F2Point random_f2_point(std::mt19937_64& rng, unsigned height) {
  const Rational P = random_rational(rng, height);
  const Rational Q = random_rational(rng, height);
  return f2_param_affine(P, Q);
}

ProjectivePoint2 random_p2_point(std::mt19937_64& rng, unsigned height) {
  const long h = static_cast<long>(height);
  for (;;) {
    ProjectivePoint2::Coords c{Integer(draw(rng, -h, h)), Integer(draw(rng, -h, h)), Integer(draw(rng, -h, h))};
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) return ProjectivePoint2::from_integers(std::move(c));
  }
}

SectionPoint random_section_point(const SectionFrame& frame, std::mt19937_64& rng, unsigned height) {
  return sample_section(frame, rng, height, [](const SectionFrame& f, const Slope& s) { return point_from_slope(f, s); });
}

SectionPoint random_section_point(const F2SectionFrame& frame, std::mt19937_64& rng, unsigned height) {
  return sample_section(frame, rng, height,
                        [](const F2SectionFrame& f, const Slope& s) { return f2_point_from_slope(f, s); });
}

}  // namespace fricke
