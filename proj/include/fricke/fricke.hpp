#pragma once

// The Fricke surface x^2 + y^2 + z^2 = 3xyz (+ sigma): points, the Viete
// generators, the rational parametrization by P^2, the secant composition
// and the structures transported to P^2(Q).

#include <string_view>
#include <variant>

#include "fricke/line_oracle.hpp"
#include "fricke/projective.hpp"
#include "fricke/rational.hpp"

namespace fricke {

class FrickeSurface {
 public:
  explicit FrickeSurface(Rational sigma = 0) : sigma_(std::move(sigma)) {}
  const Rational& sigma() const { return sigma_; }
  bool contains(const Triple& p) const { return as_surface().contains(p); }
  Surface as_surface() const { return Surface::fricke(sigma_); }
  friend bool operator==(const FrickeSurface&, const FrickeSurface&) = default;

 private:
  Rational sigma_;
};

/// A rational point of F_sigma. Construction checks the equation exactly.
class FrickePoint {
 public:
  /// Throws Errc::off_surface.
  FrickePoint(Rational x, Rational y, Rational z, FrickeSurface surface = FrickeSurface());
  explicit FrickePoint(const Triple& t, FrickeSurface surface = FrickeSurface())
      : FrickePoint(t[0], t[1], t[2], std::move(surface)) {}

  const Rational& x() const { return coords_[0]; }
  const Rational& y() const { return coords_[1]; }
  const Rational& z() const { return coords_[2]; }
  const Triple& coords() const { return coords_; }
  const FrickeSurface& surface() const { return surface_; }

  friend bool operator==(const FrickePoint&, const FrickePoint&) = default;

 private:
  Triple coords_;
  FrickeSurface surface_;
};

enum class UndefinedReason {
  coincident_points,
  origin_operand,
  same_infinity_line,
  line_on_surface,
};
std::string_view to_string(UndefinedReason r);

struct Undefined {
  UndefinedReason reason;
  friend bool operator==(const Undefined&, const Undefined&) = default;
};

/// Result of a secant composition: an affine point, a point at infinity
/// (s = 0, on one of the three lines at infinity), or no answer.
template <class Point>
using ComposeResult = std::variant<Point, ProjectivePoint3, Undefined>;
using ProjectiveComposeResult = std::variant<ProjectivePoint3, Undefined>;

enum class VieteGenerator { L, R };

/// L: (x, y, z) -> (x, 3xy - z, y), R: (x, y, z) -> (y, 3yz - x, z).
/// Throws Errc::sigma_unsupported on F_sigma with sigma != 0.
FrickePoint viete(const FrickePoint& p, VieteGenerator g);

/// [p:q:r] -> [p S : q S : r S : 3pqr], S = p^2 + q^2 + r^2. Total on P^2(Q).
ProjectivePoint3 phi(const ProjectivePoint2& p);
/// [x:y:z:s] -> [x:y:z]. Throws Errc::singular_point at [0:0:0:1].
ProjectivePoint2 psi(const ProjectivePoint3& p);
/// Projective image of an affine point.
ProjectivePoint3 homogenize(const Triple& p);
/// Affine point of a projective point with s != 0.
Triple dehomogenize(const ProjectivePoint3& p);

/// (P, Q) -> ((P^2+Q^2+1)/3Q, (P^2+Q^2+1)/3P, (P^2+Q^2+1)/3PQ).
/// Throws Errc::zero_argument.
FrickePoint param_affine(const Rational& P, const Rational& Q);
/// (x, y, z) -> (x/z, y/z). Throws Errc::zero_argument when z == 0.
std::array<Rational, 2> param_affine_inverse(const FrickePoint& p);

/// Third intersection of the line PQ with F_sigma.
///
/// When all coordinate differences are nonzero the answer is affine. When some
/// vanish it is the point at infinity in the direction P - Q. Undefined for
/// P == Q, for the singular origin, and for operands of different surfaces.
ComposeResult<FrickePoint> compose(const FrickePoint& p, const FrickePoint& q);

/// The same law on the projective closure: for P, Q on the surface the third
/// point is (grad G(Q).P) P - (grad G(P).Q) Q. Undefined when the line lies in
/// the surface.
ProjectiveComposeResult compose_projective(const ProjectivePoint3& p, const ProjectivePoint3& q,
                                                   const Surface& surface);

/// (1,1,1) o (P o Q). Only for sigma = 0.
ComposeResult<FrickePoint> star(const FrickePoint& p, const FrickePoint& q);

/// The factored form of the composition, valid for sigma = 0 when a, b, c,
/// m, n, k and the coordinate differences are nonzero.
Triple compose_factored(const FrickePoint& p, const FrickePoint& q);

/// L: [p:q:r] -> [pr : p^2+q^2 : qr], R: [p:q:r] -> [qp : q^2+r^2 : pr].
/// Throws Errc::base_point_undefined at the coordinate points.
ProjectivePoint2 p2_viete(const ProjectivePoint2& p, VieteGenerator g);

/// 1: [pr : qr : p^2+q^2], 2: [q^2+r^2 : pq : pr], 3: [pq : p^2+r^2 : rq].
/// Throws Errc::undefined_image.
ProjectivePoint2 p2_involution(const ProjectivePoint2& p, int which);

/// The composition transported by phi. Throws Errc::undefined_image when the
/// formula returns the zero vector.
ProjectivePoint2 p2_compose(const ProjectivePoint2& a, const ProjectivePoint2& b);

}  // namespace fricke
