#pragma once

// Surfaces as polynomials, slopes, and the line/cubic deflation oracle.
//
// The oracle substitutes the line q + t (p - q) into the surface polynomial,
// divides the resulting cubic in t by t (t - 1) and returns the remaining
// root. It shares no code with the closed-form composition laws and is the
// reference they are tested against.

#include <optional>

#include "fricke/projective.hpp"
#include "fricke/rational.hpp"

namespace fricke {

/// One of the two cubic surfaces:
///   fricke:        x^2 + y^2 + z^2 = 3xyz + sigma
///   double_fricke: (x + y + z)^2 = 9xyz
class Surface {
 public:
  enum class Kind { fricke, double_fricke };

  static Surface fricke(Rational sigma = 0) { return Surface(Kind::fricke, std::move(sigma)); }
  static Surface double_fricke() { return Surface(Kind::double_fricke, 0); }

  Kind kind() const { return kind_; }
  const Rational& sigma() const { return sigma_; }

  /// Left side minus right side; zero exactly on the surface.
  Rational evaluate(const Triple& p) const;
  bool contains(const Triple& p) const { return evaluate(p) == 0; }

  /// Homogenized polynomial in [x:y:z:s] and its gradient.
  Integer evaluate(const ProjectivePoint3& p) const;
  std::array<Integer, 4> gradient(const ProjectivePoint3& p) const;
  bool contains(const ProjectivePoint3& p) const { return evaluate(p) == 0; }

  /// The singular point [0:0:0:1] lies on the closure (always, except for
  /// the fricke family with sigma != 0).
  bool contains_origin() const { return kind_ == Kind::double_fricke || sigma_ == 0; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Surface(Kind k, Rational sigma) : kind_(k), sigma_(std::move(sigma)) {}
  Kind kind_;
  Rational sigma_;
};

/// Slope dz/dx of a line in a coordinate plane, or vertical.
class Slope {
 public:
  static Slope finite(Rational value) { return Slope(std::move(value)); }
  static Slope vertical() { return Slope(std::nullopt); }
  /// Slope of the line through (x1, z1) and (x2, z2); vertical when x1 == x2.
  static Slope through(const Rational& x1, const Rational& z1, const Rational& x2, const Rational& z2);
  /// Slope of the direction vector (dx, dz).
  static Slope of_direction(const Rational& dx, const Rational& dz);

  bool is_vertical() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  explicit Slope(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

std::string to_string(const Slope& s);

/// Parameter on the segment x = (a - m) t + m, ...: t = 0 is the second
/// operand, t = 1 the first.
struct LineParameter {
  Rational t;
  friend bool operator==(const LineParameter&, const LineParameter&) = default;
};

/// Third intersection of the line through p and q with the surface.
///
/// Throws Errc::coincident_points, Errc::origin_operand, Errc::off_surface,
/// and Errc::degenerate_cubic when the t^3 coefficient vanishes (the third
/// intersection is at infinity) or the line lies on the surface.
LineParameter line_third_intersection(const Triple& p, const Triple& q, const Surface& surface);

/// q + t (p - q).
Triple point_on_line(const Triple& p, const Triple& q, const LineParameter& t);

}  // namespace fricke
