#pragma once

#include <array>
#include <string>
#include <vector>

#include "fricke/rational.hpp"

namespace fricke {

/// n = outside^2 * inside with inside squarefree; n > 0.
struct SquarefreeSplit {
  Integer outside;
  Integer inside;
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Element r + s*sqrt(d) of Q(sqrt d). Only what is needed to substitute a
/// quadratic irrational back into a polynomial.
struct QuadraticFieldElement {
  Rational rational;
  Rational surd;
  Integer d;

  friend QuadraticFieldElement operator+(const QuadraticFieldElement& a, const QuadraticFieldElement& b);
  friend QuadraticFieldElement operator-(const QuadraticFieldElement& a, const QuadraticFieldElement& b);
  friend QuadraticFieldElement operator*(const QuadraticFieldElement& a, const QuadraticFieldElement& b);
  friend QuadraticFieldElement operator*(const Rational& k, const QuadraticFieldElement& a);
  bool is_zero() const { return rational == 0 && surd == 0; }
};

/// The exact real number (a + b*sqrt(d)) / c.
///
/// Normalized so that d > 1 is squarefree (square factors are moved into b),
/// c > 0 and gcd(a, b, c) = 1. The primitive integer quadratic
/// A t^2 + B t + C = 0 (A > 0) that the value satisfies is stored alongside.
class QuadraticIrrational {
 public:
  /// Throws Errc::not_irrational if d is a perfect square or b == 0, and
  /// Errc::zero_denominator if c == 0.
  QuadraticIrrational(Integer a, Integer b, Integer d, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& d() const { return d_; }
  const Integer& c() const { return c_; }

  /// {A, B, C} with A t^2 + B t + C = 0.
  const std::array<Integer, 3>& quadratic() const { return quadratic_; }

  QuadraticIrrational conjugate() const { return {a_, -b_, d_, c_}; }
  QuadraticFieldElement value() const;

  /// Substitutes the value into the stored quadratic in Q(sqrt d).
  bool satisfies_quadratic() const;

  /// Substitutes into an arbitrary quadratic with rational coefficients.
  QuadraticFieldElement evaluate(const Rational& A, const Rational& B, const Rational& C) const;

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

 private:
  Integer a_, b_, d_, c_;
  std::array<Integer, 3> quadratic_;
};

/// "(a+b√d)/c"; b == ±1 prints as "+√d" / "-√d".
std::string to_string(const QuadraticIrrational& q);

/// Roots of A t^2 + B t + C = 0, A != 0, with rational coefficients. Either
/// two conjugate irrationals or a list of one or two rational roots.
struct QuadraticRoots {
  std::vector<QuadraticIrrational> irrational;
  std::vector<Rational> rational;
};
QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C);

}  // namespace fricke
