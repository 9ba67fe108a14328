#include "fricke/double_fricke.hpp"

#include "fricke/error.hpp"
#include "fricke/markov_tree.hpp"
#include "secant.hpp"

namespace fricke {

F2Point::F2Point(Rational x, Rational y, Rational z) : coords_{std::move(x), std::move(y), std::move(z)} {
  if (!Surface::double_fricke().contains(coords_))
    throw Error(Errc::off_surface, to_string(coords_) + " is not on the double Fricke surface");
}

F2Point nielsen(const F2Point& p, NielsenMove move) {
  const auto& [x, y, z] = p.coords();
  if (move == NielsenMove::first) return F2Point(x, 9 * x * y - 2 * x - 2 * y - z, y);
  return F2Point(y, 9 * y * z - 2 * y - 2 * z - x, z);
}

IntTriple f2_vieta_move(const IntTriple& t, std::size_t slot) {
  IntTriple out = t;
  const Integer& b = t[(slot + 1) % 3];
  const Integer& c = t[(slot + 2) % 3];
  out[slot] = 9 * b * c - 2 * b - 2 * c - t[slot];
  return out;
}

F2Point square_lift(const IntTriple& m) {
  if (!Surface::fricke().contains(to_rational(m)))
    throw Error(Errc::off_surface, to_string(m) + " is not a Markov triple");
  return F2Point(Rational(m[0] * m[0]), Rational(m[1] * m[1]), Rational(m[2] * m[2]));
}

IntTriple sqrt_descend(const F2Point& p) {
  IntTriple out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& c = p.coords()[i];
    if (!is_integral(c) || c <= 0 || !mpz_perfect_square_p(c.get_num_mpz_t()))
      throw Error(Errc::not_a_square, to_string(c) + " is not the square of a positive integer");
    mpz_sqrt(out[i].get_mpz_t(), c.get_num_mpz_t());
  }
  if (!Surface::fricke().contains(to_rational(out)))
    throw Error(Errc::not_a_square, "square roots of " + to_string(p.coords()) + " are not a Markov triple");
  return out;
}

ComposeResult<F2Point> f2_compose(const F2Point& p, const F2Point& q) {
  if (auto special = detail::secant_special_case(p.coords(), q.coords(), Surface::double_fricke()))
    return detail::lift_special_case<F2Point>(*special);
  const auto& [a, b, c] = p.coords();
  const auto& [m, n, k] = q.coords();
  const Rational common = 2 * (a + b + c) * (m + n + k);
  return F2Point((9 * (a * n * k + b * c * m) - common) / (9 * (b - n) * (c - k)),
                 (9 * (b * m * k + a * c * n) - common) / (9 * (a - m) * (c - k)),
                 (9 * (c * m * n + a * b * k) - common) / (9 * (a - m) * (b - n)));
}

F2Point f2_param_affine(const Rational& P, const Rational& Q) {
  if (P == 0 || Q == 0) throw Error(Errc::zero_argument, "chart parameters must be nonzero");
  const Rational s = P * P + Q * Q + 1;
  const Rational s2 = s * s;
  return F2Point(s2 / (9 * Q * Q), s2 / (9 * P * P), s2 / (9 * P * P * Q * Q));
}

std::vector<IntTriple> negative_tree(const Integer& n, unsigned depth) {
  std::vector<IntTriple> out;
  for (const auto& node : generate(SurfaceTag::double_fricke, {Integer(-n), Integer(0), n}, DepthLimit{depth}))
    out.push_back(node.triple.values);
  return out;
}

ProjectivePoint3 f2_phi(const ProjectivePoint2& pt) {
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  const Integer sum = p + q + r;
  if (sum == 0)
    throw Error(Errc::undefined_image, "the line through the singular point in direction " + to_string(pt) +
                                           " meets the surface nowhere else");
  const Integer s = sum * sum;
  return ProjectivePoint3::from_integers({Integer(p * s), Integer(q * s), Integer(r * s), Integer(9 * p * q * r)});
}

namespace {

ProjectivePoint2 image_or_throw(ProjectivePoint2::Coords c) {
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw Error(Errc::undefined_image, "transformation image is the zero vector");
  return ProjectivePoint2::from_integers(std::move(c));
}

Integer sq(const Integer& t) { return t * t; }

}  // namespace

ProjectivePoint2 f2_p2_viete(const ProjectivePoint2& pt, VieteGenerator g) {
  int zeros = 0;
  for (const auto& c : pt.coords()) zeros += c == 0;
  if (zeros == 2) throw Error(Errc::base_point_undefined, "Viete transformation undefined at " + to_string(pt));
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  if (g == VieteGenerator::L) return image_or_throw({Integer(p * r), sq(p + q), Integer(q * r)});
  return image_or_throw({Integer(q * p), sq(q + r), Integer(p * r)});
}

ProjectivePoint2 f2_p2_involution(const ProjectivePoint2& pt, int which) {
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  switch (which) {
    case 1: return image_or_throw({Integer(p * r), Integer(q * r), sq(p + q)});
    case 2: return image_or_throw({sq(q + r), Integer(p * q), Integer(p * r)});
    case 3: return image_or_throw({Integer(p * q), sq(p + r), Integer(r * q)});
    default: throw Error(Errc::index_out_of_range, "involution index must be 1, 2 or 3");
  }
}

ProjectivePoint2 f2_p2_compose(const ProjectivePoint2& u, const ProjectivePoint2& v) {
  const Integer &a = u[0], &b = u[1], &c = u[2];
  const Integer &m = v[0], &n = v[1], &k = v[2];
  const Integer s1 = sq(a + b + c);
  const Integer s2 = sq(m + n + k);
  return image_or_throw({Integer((s1 * k * n - s2 * b * c) * sq(a * (n + k) - m * (b + c))),
                         Integer((s1 * k * m - s2 * a * c) * sq(b * (m + k) - n * (a + c))),
                         Integer((s1 * m * n - s2 * a * b) * sq(c * (m + n) - k * (a + b)))});
}

F2SectionFrame::F2SectionFrame(Rational m0, Rational n0, Rational k0)
    : m0_(std::move(m0)), n0_(std::move(n0)), k0_(std::move(k0)) {
  if (!Surface::double_fricke().contains({m0_, n0_, k0_}))
    throw Error(Errc::off_surface, "section base point " + to_string(Triple{m0_, n0_, k0_}) + " is not on F^2");
  if (n0_ == 0) throw Error(Errc::singular_point, "the plane y = 0 meets F^2 in a double line");
}

bool F2SectionFrame::contains(const SectionPoint& p) const {
  const Rational s = p.x + n0_ + p.z;
  return s * s == 9 * p.x * n0_ * p.z;
}

void F2SectionFrame::require(const SectionPoint& p) const {
  if (!contains(p))
    throw Error(Errc::off_surface, to_string(p) + " is not on the section y = " + fricke::to_string(n0_));
}

SectionSolutions f2_solve_z(const F2SectionFrame& frame, const Rational& x) {
  const Rational& n0 = frame.n0();
  const Rational xn = x + n0;
  const QuadraticRoots roots = solve_quadratic(Rational(1), 2 * xn - 9 * n0 * x, xn * xn);
  SectionSolutions out;
  for (const auto& z : roots.rational) out.points.push_back({x, z});
  out.non_rational = roots.rational.empty();
  return out;
}

QuadraticRoots f2_infinity_points(const Rational& n0) { return solve_quadratic(Rational(1), 2 - 9 * n0, Rational(1)); }

QuadraticRoots f2_infinity_points(const F2SectionFrame& frame) { return f2_infinity_points(frame.n0()); }

namespace {

struct Gradient {
  Rational gx, gz;
};

Gradient f2_gradient(const F2SectionFrame& f, const SectionPoint& p) {
  const Rational s = 2 * (p.x + f.n0() + p.z);
  return {s - 9 * f.n0() * p.z, s - 9 * f.n0() * p.x};
}

SectionPoint f2_second_intersection(const F2SectionFrame& frame, const SectionPoint& p, const Rational& dx,
                                    const Rational& dz) {
  const Rational sum = dx + dz;
  const Rational quad = sum * sum - 9 * frame.n0() * dx * dz;
  if (quad == 0) throw Error(Errc::denominator_vanishes, "line is parallel to an asymptote; the sum is at infinity");
  const Gradient g = f2_gradient(frame, p);
  const Rational s = -(g.gx * dx + g.gz * dz) / quad;
  return {p.x + s * dx, p.z + s * dz};
}

// Sum along the line through O of slope mu, from the substitution u = x - m0.
SectionPoint f2_sum_for_slope(const F2SectionFrame& f, const Slope& slope) {
  const Rational &m0 = f.m0(), &n0 = f.n0(), &k0 = f.k0();
  if (slope.is_vertical()) return {m0, 9 * n0 * m0 - 2 * m0 - 2 * n0 - k0};
  const Rational& mu = slope.value();
  const Rational mu1 = mu + 1;
  const Rational den = mu1 * mu1 - 9 * n0 * mu;
  if (den == 0) throw Error(Errc::denominator_vanishes, "chord is parallel to an asymptote; the sum is at infinity");
  const Rational mu2 = mu * mu;
  return {(9 * n0 * k0 - 2 * mu * n0 - 2 * mu * k0 - m0 - 2 * n0 - 2 * k0 + m0 * mu2) / den,
          (9 * n0 * m0 * mu2 - 2 * mu2 * m0 - 2 * mu2 * n0 - mu2 * k0 - 2 * mu * m0 - 2 * mu * n0 + k0) / den};
}

}  // namespace

Slope f2_tangent_slope(const F2SectionFrame& frame, const SectionPoint& p) {
  const Gradient g = f2_gradient(frame, p);
  if (g.gx == 0 && g.gz == 0) throw Error(Errc::tangent_degenerate, "section is singular at " + to_string(p));
  return Slope::of_direction(g.gz, -g.gx);
}

SectionPoint f2_point_from_slope(const F2SectionFrame& frame, const Slope& slope) {
  if (slope.is_vertical()) return f2_second_intersection(frame, frame.origin(), Rational(0), Rational(1));
  return f2_second_intersection(frame, frame.origin(), Rational(1), slope.value());
}

SectionPoint f2_quadric_add(const F2SectionFrame& frame, const SectionPoint& p1, const SectionPoint& p2) {
  frame.require(p1);
  frame.require(p2);
  if (p1 == p2) return f2_quadric_double(frame, p1);
  return f2_sum_for_slope(frame, Slope::through(p1.x, p1.z, p2.x, p2.z));
}

SectionPoint f2_quadric_double(const F2SectionFrame& frame, const SectionPoint& p) {
  frame.require(p);
  return f2_sum_for_slope(frame, f2_tangent_slope(frame, p));
}

SectionPoint f2_quadric_inverse(const F2SectionFrame& frame, const SectionPoint& p) {
  frame.require(p);
  const Gradient g = f2_gradient(frame, frame.origin());
  if (g.gx == 0 && g.gz == 0) throw Error(Errc::tangent_degenerate, "section is singular at the base point");
  return f2_second_intersection(frame, p, g.gz, -g.gx);
}

}  // namespace fricke
