#pragma once

// The double Fricke surface (x + y + z)^2 = 9xyz, whose positive integral
// points are the coordinatewise squares of Markov triples.

#include <vector>

#include "fricke/fricke.hpp"
#include "fricke/quadratic_irrational.hpp"
#include "fricke/sections.hpp"

namespace fricke {

class F2Point {
 public:
  /// Throws Errc::off_surface.
  F2Point(Rational x, Rational y, Rational z);
  explicit F2Point(const Triple& t) : F2Point(t[0], t[1], t[2]) {}

  const Rational& x() const { return coords_[0]; }
  const Rational& y() const { return coords_[1]; }
  const Rational& z() const { return coords_[2]; }
  const Triple& coords() const { return coords_; }

  friend bool operator==(const F2Point&, const F2Point&) = default;

 private:
  Triple coords_;
};

enum class NielsenMove { first, second };

/// first: (x, y, z) -> (x, 9xy - 2x - 2y - z, y)
/// second: (x, y, z) -> (y, 9yz - 2y - 2z - x, z)
F2Point nielsen(const F2Point& p, NielsenMove move);

/// Second root in the slot-th coordinate: a -> 9bc - 2b - 2c - a.
IntTriple f2_vieta_move(const IntTriple& t, std::size_t slot);

/// (m, n, k) -> (m^2, n^2, k^2). Throws Errc::off_surface unless the input
/// satisfies the Markov equation.
F2Point square_lift(const IntTriple& markov);
/// Exact integer square roots of a positive integral point, verified to be a
/// Markov triple. Throws Errc::not_a_square.
IntTriple sqrt_descend(const F2Point& p);

/// Secant composition on the double surface; same case analysis as compose.
ComposeResult<F2Point> f2_compose(const F2Point& p, const F2Point& q);

/// The square of the Fricke chart: ((P^2+Q^2+1)^2/9Q^2, ...). Throws
/// Errc::zero_argument.
F2Point f2_param_affine(const Rational& P, const Rational& Q);

/// Integral points of the tree grown from (-n, 0, n) by the three Vieta moves,
/// up to the given depth, sorted ascending within each triple and listed by
/// depth then lexicographically.
std::vector<IntTriple> negative_tree(const Integer& n, unsigned depth);

/// Pencil parametrization through the singular point:
/// [p:q:r] -> [p S : q S : r S : 9pqr], S = (p + q + r)^2. The inverse is psi.
/// Throws Errc::undefined_image on the line p + q + r = 0, which the map
/// collapses onto the singular point.
ProjectivePoint3 f2_phi(const ProjectivePoint2& p);

/// L: [p:q:r] -> [pr : (p+q)^2 : qr], R: [p:q:r] -> [qp : (q+r)^2 : pr].
ProjectivePoint2 f2_p2_viete(const ProjectivePoint2& p, VieteGenerator g);
/// 1: [pr : qr : (p+q)^2], 2: [(q+r)^2 : pq : pr], 3: [pq : (p+r)^2 : rq].
ProjectivePoint2 f2_p2_involution(const ProjectivePoint2& p, int which);
/// f2_compose transported by f2_phi.
ProjectivePoint2 f2_p2_compose(const ProjectivePoint2& a, const ProjectivePoint2& b);

/// The section y = n0 of the double surface: (x + n0 + z)^2 = 9 x n0 z.
class F2SectionFrame {
 public:
  /// Throws Errc::off_surface, or Errc::singular_point for n0 = 0.
  F2SectionFrame(Rational m0, Rational n0, Rational k0);
  explicit F2SectionFrame(const Triple& base) : F2SectionFrame(base[0], base[1], base[2]) {}

  const Rational& m0() const { return m0_; }
  const Rational& n0() const { return n0_; }
  const Rational& k0() const { return k0_; }
  SectionPoint origin() const { return {m0_, k0_}; }

  bool contains(const SectionPoint& p) const;
  void require(const SectionPoint& p) const;

 private:
  Rational m0_, n0_, k0_;
};

SectionSolutions f2_solve_z(const F2SectionFrame& frame, const Rational& x);

/// Roots of t^2 + (2 - 9 n0) t + 1 = 0, the directions x/z at infinity.
QuadraticRoots f2_infinity_points(const Rational& n0);
QuadraticRoots f2_infinity_points(const F2SectionFrame& frame);

SectionPoint f2_quadric_add(const F2SectionFrame& frame, const SectionPoint& p1, const SectionPoint& p2);
SectionPoint f2_quadric_double(const F2SectionFrame& frame, const SectionPoint& p);
SectionPoint f2_quadric_inverse(const F2SectionFrame& frame, const SectionPoint& p);

Slope f2_tangent_slope(const F2SectionFrame& frame, const SectionPoint& p);
SectionPoint f2_point_from_slope(const F2SectionFrame& frame, const Slope& slope);

}  // namespace fricke
