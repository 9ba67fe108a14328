#include "fricke/line_oracle.hpp"

#include <vector>

#include "fricke/error.hpp"

namespace fricke {

namespace {

// Dense univariate polynomial, coefficient i multiplies t^i.
using Poly = std::vector<Rational>;

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly operator+(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly operator*(const Rational& k, Poly a) {
  for (auto& c : a) c *= k;
  return a;
}

Poly surface_along_line(const Surface& s, const Poly& x, const Poly& y, const Poly& z) {
  if (s.kind() == Surface::Kind::fricke)
    return x * x + y * y + z * z + Rational(-3) * (x * y * z) + Poly{-s.sigma()};
  const Poly sum = x + y + z;
  return sum * sum + Rational(-9) * (x * y * z);
}

}  // namespace

Rational Surface::evaluate(const Triple& p) const {
  const auto& [x, y, z] = p;
  if (kind_ == Kind::fricke) return x * x + y * y + z * z - 3 * x * y * z - sigma_;
  const Rational sum = x + y + z;
  return sum * sum - 9 * x * y * z;
}

Integer Surface::evaluate(const ProjectivePoint3& p) const {
  const Integer &x = p[0], &y = p[1], &z = p[2], &s = p[3];
  if (kind_ == Kind::fricke) {
    const Integer& num = sigma_.get_num();
    const Integer& den = sigma_.get_den();
    return den * s * (x * x + y * y + z * z) - 3 * den * x * y * z - num * s * s * s;
  }
  const Integer sum = x + y + z;
  return s * sum * sum - 9 * x * y * z;
}

std::array<Integer, 4> Surface::gradient(const ProjectivePoint3& p) const {
  const Integer &x = p[0], &y = p[1], &z = p[2], &s = p[3];
  if (kind_ == Kind::fricke) {
    const Integer& num = sigma_.get_num();
    const Integer& den = sigma_.get_den();
    return {Integer(den * (2 * x * s - 3 * y * z)), Integer(den * (2 * y * s - 3 * x * z)),
            Integer(den * (2 * z * s - 3 * x * y)), Integer(den * (x * x + y * y + z * z) - 3 * num * s * s)};
  }
  const Integer sum = x + y + z;
  return {Integer(2 * s * sum - 9 * y * z), Integer(2 * s * sum - 9 * x * z), Integer(2 * s * sum - 9 * x * y),
          Integer(sum * sum)};
}

Slope Slope::through(const Rational& x1, const Rational& z1, const Rational& x2, const Rational& z2) {
  return of_direction(x2 - x1, z2 - z1);
}

Slope Slope::of_direction(const Rational& dx, const Rational& dz) {
  if (dx == 0) return vertical();
  return finite(dz / dx);
}

std::string to_string(const Slope& s) { return s.is_vertical() ? "vertical" : to_string(s.value()); }

LineParameter line_third_intersection(const Triple& p, const Triple& q, const Surface& surface) {
  if (p == q) throw Error(Errc::coincident_points, "line through coincident points");
  if (!surface.contains(p) || !surface.contains(q)) throw Error(Errc::off_surface, "oracle operand off the surface");
  const Triple origin{Rational(0), Rational(0), Rational(0)};
  if (p == origin || q == origin) throw Error(Errc::origin_operand, "operand is the singular origin");

  const Poly x{q[0], p[0] - q[0]};
  const Poly y{q[1], p[1] - q[1]};
  const Poly z{q[2], p[2] - q[2]};
  Poly cubic = surface_along_line(surface, x, y, z);
  cubic.resize(4, Rational(0));

  // t = 0 and t = 1 are roots: c0 = 0 and c1 + c2 + c3 = 0.
  if (cubic[0] != 0 || cubic[1] + cubic[2] + cubic[3] != 0)
    throw Error(Errc::off_surface, "line does not meet the surface at its defining points");
  if (cubic[3] == 0) throw Error(Errc::degenerate_cubic, "third intersection lies at infinity");
  // c3 t^3 + c2 t^2 + c1 t = c3 t (t - 1) (t - r), so c2 = -c3 (1 + r).
  return {-cubic[2] / cubic[3] - 1};
}

Triple point_on_line(const Triple& p, const Triple& q, const LineParameter& t) {
  return {q[0] + t.t * (p[0] - q[0]), q[1] + t.t * (p[1] - q[1]), q[2] + t.t * (p[2] - q[2])};
}

}  // namespace fricke
