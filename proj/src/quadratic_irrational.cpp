#include "fricke/quadratic_irrational.hpp"

#include "fricke/error.hpp"

namespace fricke {

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n <= 0) throw Error(Errc::parse_error, "squarefree_split needs a positive integer");
  Integer rest = n;
  Integer outside = 1;
  Integer inside = 1;
  // After trial division up to the cube root of what remains, the cofactor
  // has at most two prime factors, so it is squarefree unless it is a square.
  for (Integer p = 2; p * p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) outside *= p;
    if (e % 2) inside *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    outside *= r;
  } else {
    inside *= rest;
  }
  return {outside, inside};
}

QuadraticFieldElement operator+(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
  return {a.rational + b.rational, a.surd + b.surd, a.d};
}

QuadraticFieldElement operator-(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
  return {a.rational - b.rational, a.surd - b.surd, a.d};
}

QuadraticFieldElement operator*(const QuadraticFieldElement& a, const QuadraticFieldElement& b) {
  return {a.rational * b.rational + a.surd * b.surd * Rational(a.d), a.rational * b.surd + a.surd * b.rational, a.d};
}

QuadraticFieldElement operator*(const Rational& k, const QuadraticFieldElement& a) {
  return {k * a.rational, k * a.surd, a.d};
}

QuadraticIrrational::QuadraticIrrational(Integer a, Integer b, Integer d, Integer c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  if (c_ == 0) throw Error(Errc::zero_denominator, "quadratic irrational with zero denominator");
  if (d_ <= 0 || b_ == 0) throw Error(Errc::not_irrational, "radicand must be positive and b nonzero");
  const SquarefreeSplit split = squarefree_split(d_);
  if (split.inside == 1) throw Error(Errc::not_irrational, "radicand " + d_.get_str() + " is a perfect square");
  b_ *= split.outside;
  d_ = split.inside;
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  a_ /= g;
  b_ /= g;
  c_ /= g;

  // (c t - a)^2 = b^2 d
  Integer A = c_ * c_;
  Integer B = -2 * a_ * c_;
  Integer C = a_ * a_ - b_ * b_ * d_;
  Integer h;
  mpz_gcd(h.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), C.get_mpz_t());
  quadratic_ = {Integer(A / h), Integer(B / h), Integer(C / h)};
}

QuadraticFieldElement QuadraticIrrational::value() const {
  return {make_rational(a_, c_), make_rational(b_, c_), d_};
}

QuadraticFieldElement QuadraticIrrational::evaluate(const Rational& A, const Rational& B, const Rational& C) const {
  const QuadraticFieldElement t = value();
  const QuadraticFieldElement one{Rational(1), Rational(0), d_};
  return A * (t * t) + B * t + C * one;
}

bool QuadraticIrrational::satisfies_quadratic() const {
  return evaluate(Rational(quadratic_[0]), Rational(quadratic_[1]), Rational(quadratic_[2])).is_zero();
}

std::string to_string(const QuadraticIrrational& q) {
  std::string out = "(" + q.a().get_str();
  const Integer abs_b = abs(q.b());
  out += q.b() < 0 ? "-" : "+";
  if (abs_b != 1) out += abs_b.get_str();
  out += "√" + q.d().get_str() + ")/" + q.c().get_str();
  return out;
}

QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C) {
  if (A == 0) throw Error(Errc::degenerate_cubic, "leading coefficient of quadratic is zero");
  QuadraticRoots roots;
  const Rational disc = B * B - 4 * A * C;
  if (disc < 0) return roots;
  // sqrt(N/D) = sqrt(N*D)/D
  const Integer radicand = disc.get_num() * disc.get_den();
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
    const Rational root_disc = make_rational(r, disc.get_den());
    const Rational hi = (-B + root_disc) / (2 * A);
    const Rational lo = (-B - root_disc) / (2 * A);
    roots.rational.push_back(hi);
    if (lo != hi) roots.rational.push_back(lo);
    return roots;
  }
  // t = (u ± sqrt(radicand)) / v
  const Rational u = -B * Rational(disc.get_den());
  const Rational v = 2 * A * Rational(disc.get_den());
  Integer l;
  mpz_lcm(l.get_mpz_t(), u.get_den_mpz_t(), v.get_den_mpz_t());
  const Rational ul = u * l;
  const Rational vl = v * l;
  roots.irrational.emplace_back(ul.get_num(), l, radicand, vl.get_num());
  roots.irrational.emplace_back(ul.get_num(), Integer(-l), radicand, vl.get_num());
  if (roots.irrational[0].b() < 0) std::swap(roots.irrational[0], roots.irrational[1]);
  return roots;
}

}  // namespace fricke
