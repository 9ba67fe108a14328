#pragma once

// Plane sections y = n0 of the Fricke surface: the conic
//   x^2 + n0^2 + z^2 = 3 x n0 z
// in the (x, z) plane, its group law with neutral element O = (m0, k0),
// the dihedral symmetries coming from the Viete moves, and the
// Chebyshev-like values b_r(n0).

#include <array>
#include <variant>
#include <vector>

#include "fricke/line_oracle.hpp"
#include "fricke/quadratic_irrational.hpp"
#include "fricke/rational.hpp"

namespace fricke {

struct SectionPoint {
  Rational x;
  Rational z;
  friend bool operator==(const SectionPoint&, const SectionPoint&) = default;
};

std::string to_string(const SectionPoint& p);

/// The section through a base point (m0, n0, k0) of F. The base point is the
/// neutral element of the group law; it need not be fundamental.
class SectionFrame {
 public:
  /// Throws Errc::off_surface if (m0, n0, k0) is not on F.
  SectionFrame(Rational m0, Rational n0, Rational k0);
  explicit SectionFrame(const Triple& base) : SectionFrame(base[0], base[1], base[2]) {}

  const Rational& m0() const { return m0_; }
  const Rational& n0() const { return n0_; }
  const Rational& k0() const { return k0_; }
  SectionPoint origin() const { return {m0_, k0_}; }

  bool contains(const SectionPoint& p) const;
  /// Throws Errc::off_surface.
  void require(const SectionPoint& p) const;

  /// Positive integral base point with n0 = max(m0, n0, k0).
  bool is_fundamental() const;

 private:
  Rational m0_, n0_, k0_;
};

/// Rational points of the section above a given x.
struct SectionSolutions {
  std::vector<SectionPoint> points;
  /// The discriminant 9x^2 n0^2 - 4(n0^2 + x^2) is not a rational square.
  bool non_rational = false;
};
SectionSolutions solve_z(const SectionFrame& frame, const Rational& x);

/// Directions t = x/z of the two points at infinity: roots of t^2 - 3 n0 t + 1.
/// Either a conjugate pair of quadratic irrationals (larger first) or, when
/// 9 n0^2 - 4 is a rational square, the rational roots.
QuadraticRoots infinity_points(const SectionFrame& frame);
QuadraticRoots infinity_points(const Rational& n0);

/// b_r(n0): b_{r+2} = 3 n0 b_{r+1} - b_r, b_0 = 1, b_1 = 3 n0. Defined for
/// r >= -2 by running the recursion backwards (b_{-1} = 0, b_{-2} = -1).
Rational chebyshev_b(long r, const Rational& n0);
/// b_{-2}, ..., b_{r_max}, i.e. entry i is b_{i-2}.
std::vector<Rational> chebyshev_sequence(long r_max, const Rational& n0);

/// r-th convergent b_r / b_{r-1} of the minus continued fraction
/// 3n0 - 1/(3n0 - 1/(...)). Throws Errc::index_out_of_range for r < 1.
Rational cf_convergent(const Rational& n0, long r);

/// 2x2 matrix over Q.
struct Matrix2 {
  std::array<Rational, 4> e;  // row-major
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};
Matrix2 power(const Matrix2& m, unsigned r);
/// [[3 n0, -1], [1, 0]], the linear part of TA.
Matrix2 translation_matrix(const Rational& n0);

/// P1 + P2 under the group law with neutral element O: the second
/// intersection of the section with the line through O parallel to P1 P2.
/// Dispatches to quadric_double when P1 == P2. Throws
/// Errc::denominator_vanishes when that line is parallel to an asymptote.
SectionPoint quadric_add(const SectionFrame& frame, const SectionPoint& p1, const SectionPoint& p2);
SectionPoint quadric_double(const SectionFrame& frame, const SectionPoint& p);
SectionPoint quadric_inverse(const SectionFrame& frame, const SectionPoint& p);
/// n * P for any integer n.
SectionPoint quadric_multiple(const SectionFrame& frame, const SectionPoint& p, long n);

/// Slope of the tangent to the section at p.
Slope tangent_slope(const SectionFrame& frame, const SectionPoint& p);

/// Second intersection of the section with the line through O of the given
/// slope. Every rational point other than O arises this way.
SectionPoint point_from_slope(const SectionFrame& frame, const Slope& slope);

enum class DihedralMap { A, TA, C, TC, B, T };
DihedralMap parse_dihedral_map(std::string_view name);
std::string_view to_string(DihedralMap m);

/// A(m,k) = (m, 3 m n0 - k), C(m,k) = (3 n0 k - m, k), B(m,k) = (-m,-k),
/// T(m,k) = (k,m); TA and TC are the composites.
SectionPoint dihedral(const SectionFrame& frame, const SectionPoint& p, DihedralMap map);

enum class TranslationFamily { TA, TC };

/// Closed form of the r-th power of TA or TC through the values b_r(n0).
SectionPoint ta_power(const SectionFrame& frame, const SectionPoint& p, long r, TranslationFamily family);

}  // namespace fricke
