#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "fricke/error.hpp"
#include "fricke/rational.hpp"

namespace fricke {

/// A point of projective space P^Dim(Q) stored as a primitive integer vector:
/// gcd of the coordinates is 1 and the first nonzero coordinate is positive.
/// Every instance is in this canonical form, so == is projective equality.
template <std::size_t Dim>
class ProjectivePoint {
 public:
  static constexpr std::size_t size = Dim + 1;
  using Coords = std::array<Integer, size>;

  /// Throws Errc::zero_vector when all coordinates vanish.
  static ProjectivePoint from_integers(Coords coords) {
    Integer g = 0;
    for (const auto& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw Error(Errc::zero_vector, "projective point with all coordinates zero");
    const Integer* lead = nullptr;
    for (const auto& c : coords)
      if (c != 0) {
        lead = &c;
        break;
      }
    if (*lead < 0) g = -g;
    for (auto& c : coords) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return ProjectivePoint(std::move(coords));
  }

  static ProjectivePoint from_rationals(const std::array<Rational, size>& coords) {
    Integer l = 1;
    for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Coords scaled;
    for (std::size_t i = 0; i < size; ++i) {
      const Rational s = coords[i] * l;
      scaled[i] = s.get_num();
    }
    return from_integers(std::move(scaled));
  }

  const Coords& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  /// True when the last coordinate is zero (the hyperplane at infinity).
  bool at_infinity() const { return coords_[Dim] == 0; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

 private:
  explicit ProjectivePoint(Coords c) : coords_(std::move(c)) {}
  Coords coords_;
};

using ProjectivePoint2 = ProjectivePoint<2>;
using ProjectivePoint3 = ProjectivePoint<3>;

template <std::size_t N>
ProjectivePoint<N - 1> normalize_projective(const std::array<Integer, N>& coords) {
  return ProjectivePoint<N - 1>::from_integers(coords);
}

template <std::size_t N>
ProjectivePoint<N - 1> normalize_projective(const std::array<Rational, N>& coords) {
  return ProjectivePoint<N - 1>::from_rationals(coords);
}

/// "[p:q:r]" / "[x:y:z:s]"
template <std::size_t Dim>
std::string to_string(const ProjectivePoint<Dim>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size; ++i) {
    if (i) out += ':';
    out += p[i].get_str();
  }
  return out + "]";
}

}  // namespace fricke
