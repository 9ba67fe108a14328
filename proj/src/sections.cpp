#include "fricke/sections.hpp"

#include "fricke/error.hpp"

namespace fricke {

std::string to_string(const SectionPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.z) + ")"; }

SectionFrame::SectionFrame(Rational m0, Rational n0, Rational k0)
    : m0_(std::move(m0)), n0_(std::move(n0)), k0_(std::move(k0)) {
  if (!Surface::fricke().contains({m0_, n0_, k0_}))
    throw Error(Errc::off_surface, "section base point " + to_string(Triple{m0_, n0_, k0_}) + " is not on F");
  if (n0_ == 0) throw Error(Errc::singular_point, "the plane y = 0 meets F only in the singular origin");
}

bool SectionFrame::contains(const SectionPoint& p) const {
  return p.x * p.x + n0_ * n0_ + p.z * p.z == 3 * p.x * n0_ * p.z;
}

void SectionFrame::require(const SectionPoint& p) const {
  if (!contains(p))
    throw Error(Errc::off_surface, to_string(p) + " is not on the section y = " + fricke::to_string(n0_));
}

bool SectionFrame::is_fundamental() const {
  return is_integral(m0_) && is_integral(n0_) && is_integral(k0_) && m0_ > 0 && k0_ > 0 && n0_ >= m0_ &&
         n0_ >= k0_;
}

SectionSolutions solve_z(const SectionFrame& frame, const Rational& x) {
  const Rational& n0 = frame.n0();
  const QuadraticRoots roots = solve_quadratic(Rational(1), -3 * x * n0, x * x + n0 * n0);
  SectionSolutions out;
  for (const auto& z : roots.rational) out.points.push_back({x, z});
  out.non_rational = roots.rational.empty();
  return out;
}

QuadraticRoots infinity_points(const Rational& n0) { return solve_quadratic(Rational(1), -3 * n0, Rational(1)); }

QuadraticRoots infinity_points(const SectionFrame& frame) { return infinity_points(frame.n0()); }

std::vector<Rational> chebyshev_sequence(long r_max, const Rational& n0) {
  if (r_max < -2) throw Error(Errc::index_out_of_range, "b_r is defined for r >= -2");
  std::vector<Rational> b{Rational(-1), Rational(0)};
  const Rational step = 3 * n0;
  const auto size = static_cast<std::size_t>(r_max + 3);
  while (b.size() < size) {
    const std::size_t n = b.size();
    b.push_back(step * b[n - 1] - b[n - 2]);
  }
  b.resize(size);
  return b;
}

Rational chebyshev_b(long r, const Rational& n0) { return chebyshev_sequence(r, n0).back(); }

Rational cf_convergent(const Rational& n0, long r) {
  if (r < 1) throw Error(Errc::index_out_of_range, "convergent index must be >= 1");
  const auto b = chebyshev_sequence(r, n0);
  const Rational& den = b[static_cast<std::size_t>(r + 1)];
  if (den == 0) throw Error(Errc::zero_denominator, "b_{r-1} vanishes");
  return b.back() / den;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3], a.e[2] * b.e[0] + a.e[3] * b.e[2],
           a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Matrix2 power(const Matrix2& m, unsigned r) {
  Matrix2 result{{Rational(1), Rational(0), Rational(0), Rational(1)}};
  Matrix2 base = m;
  for (; r; r >>= 1) {
    if (r & 1u) result = result * base;
    base = base * base;
  }
  return result;
}

Matrix2 translation_matrix(const Rational& n0) { return {{3 * n0, Rational(-1), Rational(1), Rational(0)}}; }

namespace {

// Second intersection of the section with the line p + s (dx, dz); p lies on
// the section, so the restriction is s (grad . d) + s^2 Q(d).
SectionPoint second_intersection(const SectionFrame& frame, const SectionPoint& p, const Rational& dx,
                                 const Rational& dz) {
  const Rational& n0 = frame.n0();
  const Rational quad = dx * dx + dz * dz - 3 * n0 * dx * dz;
  if (quad == 0) throw Error(Errc::denominator_vanishes, "line is parallel to an asymptote; the sum is at infinity");
  const Rational lin = (2 * p.x - 3 * n0 * p.z) * dx + (2 * p.z - 3 * n0 * p.x) * dz;
  const Rational s = -lin / quad;
  return {p.x + s * dx, p.z + s * dz};
}

// A O: the answer for vertical chords.
SectionPoint vertical_sum(const SectionFrame& f) { return {f.m0(), 3 * f.n0() * f.m0() - f.k0()}; }

}  // namespace

Slope tangent_slope(const SectionFrame& frame, const SectionPoint& p) {
  const Rational& n0 = frame.n0();
  // (2x - 3 n0 z) dx + (2z - 3 n0 x) dz = 0
  return Slope::of_direction(2 * p.z - 3 * n0 * p.x, -(2 * p.x - 3 * n0 * p.z));
}

SectionPoint point_from_slope(const SectionFrame& frame, const Slope& slope) {
  if (slope.is_vertical()) return second_intersection(frame, frame.origin(), Rational(0), Rational(1));
  return second_intersection(frame, frame.origin(), Rational(1), slope.value());
}

SectionPoint quadric_add(const SectionFrame& frame, const SectionPoint& p1, const SectionPoint& p2) {
  frame.require(p1);
  frame.require(p2);
  if (p1 == p2) return quadric_double(frame, p1);
  const Slope slope = Slope::through(p1.x, p1.z, p2.x, p2.z);
  if (slope.is_vertical()) return vertical_sum(frame);

  const Rational& mu = slope.value();
  const Rational &m0 = frame.m0(), &n0 = frame.n0(), &k0 = frame.k0();
  const Rational den = 1 + mu * mu - 3 * n0 * mu;
  if (den == 0) throw Error(Errc::denominator_vanishes, "chord is parallel to an asymptote; the sum is at infinity");
  return {(mu * mu * m0 - m0 - 2 * mu * k0 + 3 * n0 * k0) / den,
          (k0 - 2 * m0 * mu - mu * mu * k0 + 3 * m0 * n0 * mu * mu) / den};
}

SectionPoint quadric_double(const SectionFrame& frame, const SectionPoint& p) {
  frame.require(p);
  const Slope slope = tangent_slope(frame, p);
  if (slope.is_vertical()) return vertical_sum(frame);
  const Rational& mu = slope.value();
  const Rational &m0 = frame.m0(), &n0 = frame.n0(), &k0 = frame.k0();
  if (1 + mu * mu - 3 * n0 * mu == 0)
    throw Error(Errc::denominator_vanishes, "tangent is parallel to an asymptote; the double is at infinity");
  const Rational cross = p.x * k0 - p.z * m0;
  const Rational n0sq = n0 * n0;
  return {(p.x * p.x * n0sq + cross * cross) / (n0sq * m0), (p.z * p.z * n0sq + cross * cross) / (n0sq * k0)};
}

SectionPoint quadric_inverse(const SectionFrame& frame, const SectionPoint& p) {
  frame.require(p);
  const Rational &m0 = frame.m0(), &n0 = frame.n0(), &k0 = frame.k0();
  // Direction of the tangent at O.
  return second_intersection(frame, p, 2 * k0 - 3 * n0 * m0, -(2 * m0 - 3 * n0 * k0));
}

SectionPoint quadric_multiple(const SectionFrame& frame, const SectionPoint& p, long n) {
  SectionPoint base = n < 0 ? quadric_inverse(frame, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  SectionPoint acc = frame.origin();
  for (; k; k >>= 1) {
    if (k & 1u) acc = quadric_add(frame, acc, base);
    if (k > 1) base = quadric_add(frame, base, base);
  }
  return acc;
}

DihedralMap parse_dihedral_map(std::string_view name) {
  if (name == "A") return DihedralMap::A;
  if (name == "TA") return DihedralMap::TA;
  if (name == "C") return DihedralMap::C;
  if (name == "TC") return DihedralMap::TC;
  if (name == "B") return DihedralMap::B;
  if (name == "T") return DihedralMap::T;
  throw Error(Errc::parse_error, "unknown dihedral map '" + std::string(name) + "'");
}

std::string_view to_string(DihedralMap m) {
  switch (m) {
    case DihedralMap::A: return "A";
    case DihedralMap::TA: return "TA";
    case DihedralMap::C: return "C";
    case DihedralMap::TC: return "TC";
    case DihedralMap::B: return "B";
    case DihedralMap::T: return "T";
  }
  return "?";
}

SectionPoint dihedral(const SectionFrame& frame, const SectionPoint& p, DihedralMap map) {
  const Rational& n0 = frame.n0();
  const Rational &m = p.x, &k = p.z;
  switch (map) {
    case DihedralMap::A: return {m, 3 * m * n0 - k};
    case DihedralMap::TA: return {3 * m * n0 - k, m};
    case DihedralMap::C: return {3 * n0 * k - m, k};
    case DihedralMap::TC: return {k, 3 * n0 * k - m};
    case DihedralMap::B: return {-m, -k};
    case DihedralMap::T: return {k, m};
  }
  return p;
}

SectionPoint ta_power(const SectionFrame& frame, const SectionPoint& p, long r, TranslationFamily family) {
  if (r < 0) throw Error(Errc::index_out_of_range, "power must be nonnegative");
  const auto b = chebyshev_sequence(r, frame.n0());
  // b[i] holds b_{i-2}
  const Rational& br = b[static_cast<std::size_t>(r + 2)];
  const Rational& br1 = b[static_cast<std::size_t>(r + 1)];
  const Rational& br2 = b[static_cast<std::size_t>(r)];
  const Rational &m = p.x, &k = p.z;
  if (family == TranslationFamily::TA) return {m * br - k * br1, m * br1 - k * br2};
  // (TC)^r = T (TA)^r T
  return {k * br1 - m * br2, k * br - m * br1};
}

}  // namespace fricke
