#include "fricke/fricke.hpp"

#include "fricke/error.hpp"
#include "secant.hpp"

namespace fricke {

FrickePoint::FrickePoint(Rational x, Rational y, Rational z, FrickeSurface surface)
    : coords_{std::move(x), std::move(y), std::move(z)}, surface_(std::move(surface)) {
  if (!surface_.contains(coords_)) throw Error(Errc::off_surface, to_string(coords_) + " is not on the Fricke surface");
}

std::string_view to_string(UndefinedReason r) {
  switch (r) {
    case UndefinedReason::coincident_points: return "coincident-points";
    case UndefinedReason::origin_operand: return "origin-operand";
    case UndefinedReason::same_infinity_line: return "same-infinity-line";
    case UndefinedReason::line_on_surface: return "line-on-surface";
  }
  return "unknown";
}

FrickePoint viete(const FrickePoint& p, VieteGenerator g) {
  if (p.surface().sigma() != 0)
    throw Error(Errc::sigma_unsupported, "Viete generators are only defined for sigma = 0");
  const auto& [x, y, z] = p.coords();
  if (g == VieteGenerator::L) return FrickePoint(x, 3 * x * y - z, y);
  return FrickePoint(y, 3 * y * z - x, z);
}

ProjectivePoint3 phi(const ProjectivePoint2& pt) {
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  const Integer s = p * p + q * q + r * r;
  return ProjectivePoint3::from_integers({Integer(p * s), Integer(q * s), Integer(r * s), Integer(3 * p * q * r)});
}

ProjectivePoint2 psi(const ProjectivePoint3& p) {
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw Error(Errc::singular_point, "psi is undefined at [0:0:0:1]");
  return ProjectivePoint2::from_integers({p[0], p[1], p[2]});
}

ProjectivePoint3 homogenize(const Triple& p) {
  return ProjectivePoint3::from_rationals({p[0], p[1], p[2], Rational(1)});
}

Triple dehomogenize(const ProjectivePoint3& p) {
  if (p.at_infinity()) throw Error(Errc::zero_denominator, "point at infinity has no affine coordinates");
  return {make_rational(p[0], p[3]), make_rational(p[1], p[3]), make_rational(p[2], p[3])};
}

FrickePoint param_affine(const Rational& P, const Rational& Q) {
  if (P == 0 || Q == 0) throw Error(Errc::zero_argument, "chart parameters must be nonzero");
  const Rational s = P * P + Q * Q + 1;
  return FrickePoint(s / (3 * Q), s / (3 * P), s / (3 * P * Q));
}

std::array<Rational, 2> param_affine_inverse(const FrickePoint& p) {
  if (p.z() == 0) throw Error(Errc::zero_argument, "chart inverse needs z != 0");
  return {p.x() / p.z(), p.y() / p.z()};
}

namespace detail {

std::optional<ProjectiveComposeResult> secant_special_case(const Triple& p, const Triple& q,
                                                                   const Surface& surface) {
  if (p == q) return Undefined{UndefinedReason::coincident_points};
  const Triple origin{Rational(0), Rational(0), Rational(0)};
  if (surface.contains_origin() && (p == origin || q == origin)) return Undefined{UndefinedReason::origin_operand};
  const Triple d{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
  if (d[0] != 0 && d[1] != 0 && d[2] != 0) return std::nullopt;
  const ProjectivePoint3 hp = homogenize(p);
  const ProjectivePoint3 hq = homogenize(q);
  auto dot = [](const std::array<Integer, 4>& g, const ProjectivePoint3& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += g[i] * v[i];
    return s;
  };
  if (dot(surface.gradient(hq), hp) == 0 && dot(surface.gradient(hp), hq) == 0)
    return Undefined{UndefinedReason::line_on_surface};
  return ProjectivePoint3::from_rationals({d[0], d[1], d[2], Rational(0)});
}

}  // namespace detail

ComposeResult<FrickePoint> compose(const FrickePoint& p, const FrickePoint& q) {
  if (!(p.surface() == q.surface())) throw Error(Errc::off_surface, "operands lie on different surfaces");
  const FrickeSurface& surface = p.surface();
  if (auto special = detail::secant_special_case(p.coords(), q.coords(), surface.as_surface()))
    return detail::lift_special_case<FrickePoint>(*special);

  const auto& [a, b, c] = p.coords();
  const auto& [m, n, k] = q.coords();
  // The 2 sigma term vanishes on the Markov surface itself.
  const Rational common = 2 * (a * m + b * n + c * k) - 2 * surface.sigma();
  const Rational x = (3 * (a * n * k + b * c * m) - common) / (3 * (b - n) * (c - k));
  const Rational y = (3 * (b * m * k + a * c * n) - common) / (3 * (a - m) * (c - k));
  const Rational z = (3 * (c * m * n + a * b * k) - common) / (3 * (a - m) * (b - n));
  return FrickePoint(x, y, z, surface);
}

ProjectiveComposeResult compose_projective(const ProjectivePoint3& p, const ProjectivePoint3& q,
                                                   const Surface& surface) {
  if (!surface.contains(p) || !surface.contains(q))
    throw Error(Errc::off_surface, "projective operand is not on the surface");
  if (p == q) return Undefined{UndefinedReason::coincident_points};
  auto singular = [](const ProjectivePoint3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; };
  if (surface.contains_origin() && (singular(p) || singular(q))) return Undefined{UndefinedReason::origin_operand};

  auto dot = [](const std::array<Integer, 4>& g, const ProjectivePoint3& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += g[i] * v[i];
    return s;
  };
  const Integer cp = dot(surface.gradient(q), p);
  const Integer cq = dot(surface.gradient(p), q);
  if (cp == 0 && cq == 0) {
    if (p.at_infinity() && q.at_infinity()) return Undefined{UndefinedReason::same_infinity_line};
    return Undefined{UndefinedReason::line_on_surface};
  }
  ProjectivePoint3::Coords r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = cp * p[i] - cq * q[i];
  return ProjectivePoint3::from_integers(std::move(r));
}

ComposeResult<FrickePoint> star(const FrickePoint& p, const FrickePoint& q) {
  if (p.surface().sigma() != 0 || q.surface().sigma() != 0)
    throw Error(Errc::sigma_unsupported, "the star law is defined for sigma = 0");
  const FrickePoint one(1, 1, 1);
  const ComposeResult<FrickePoint> inner = compose(p, q);
  if (const auto* u = std::get_if<Undefined>(&inner)) return *u;
  if (const auto* f = std::get_if<FrickePoint>(&inner)) return compose(one, *f);

  // P o Q at infinity: finish on the projective closure.
  const auto outer = compose_projective(homogenize(one.coords()), std::get<ProjectivePoint3>(inner), Surface::fricke());
  if (const auto* u = std::get_if<Undefined>(&outer)) return *u;
  const auto& r = std::get<ProjectivePoint3>(outer);
  if (r.at_infinity()) return r;
  return FrickePoint(dehomogenize(r));
}

Triple compose_factored(const FrickePoint& p, const FrickePoint& q) {
  const auto& [a, b, c] = p.coords();
  const auto& [m, n, k] = q.coords();
  const Rational an_bm = a * n - b * m;
  const Rational ak_mc = a * k - m * c;
  const Rational bk_cn = b * k - c * n;
  return {(an_bm * an_bm + ak_mc * ak_mc) / (3 * a * m * (b - n) * (c - k)),
          (bk_cn * bk_cn + an_bm * an_bm) / (3 * b * n * (a - m) * (c - k)),
          (ak_mc * ak_mc + bk_cn * bk_cn) / (3 * c * k * (a - m) * (b - n))};
}

namespace {

bool is_coordinate_point(const ProjectivePoint2& p) {
  int zeros = 0;
  for (const auto& c : p.coords()) zeros += c == 0;
  return zeros == 2;
}

ProjectivePoint2 image_or_throw(ProjectivePoint2::Coords c) {
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw Error(Errc::undefined_image, "transformation image is the zero vector");
  return ProjectivePoint2::from_integers(std::move(c));
}

}  // namespace

ProjectivePoint2 p2_viete(const ProjectivePoint2& pt, VieteGenerator g) {
  if (is_coordinate_point(pt))
    throw Error(Errc::base_point_undefined, "Viete transformation undefined at " + to_string(pt));
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  if (g == VieteGenerator::L) return image_or_throw({Integer(p * r), Integer(p * p + q * q), Integer(q * r)});
  return image_or_throw({Integer(q * p), Integer(q * q + r * r), Integer(p * r)});
}

ProjectivePoint2 p2_involution(const ProjectivePoint2& pt, int which) {
  const Integer &p = pt[0], &q = pt[1], &r = pt[2];
  switch (which) {
    case 1: return image_or_throw({Integer(p * r), Integer(q * r), Integer(p * p + q * q)});
    case 2: return image_or_throw({Integer(q * q + r * r), Integer(p * q), Integer(p * r)});
    case 3: return image_or_throw({Integer(p * q), Integer(p * p + r * r), Integer(r * q)});
    default: throw Error(Errc::index_out_of_range, "involution index must be 1, 2 or 3");
  }
}

ProjectivePoint2 p2_compose(const ProjectivePoint2& u, const ProjectivePoint2& v) {
  const Integer &a = u[0], &b = u[1], &c = u[2];
  const Integer &m = v[0], &n = v[1], &k = v[2];
  const Integer s1 = a * a + b * b + c * c;
  const Integer s2 = m * m + n * n + k * k;
  auto sq = [](const Integer& t) { return Integer(t * t); };
  return image_or_throw({Integer((s1 * k * n - s2 * b * c) * (sq(b * m - a * n) + sq(c * m - a * k))),
                         Integer((s1 * k * m - s2 * a * c) * (sq(a * n - b * m) + sq(c * n - b * k))),
                         Integer((s1 * m * n - s2 * b * a) * (sq(a * k - c * m) + sq(b * k - c * n)))});
}

}  // namespace fricke
