#include <doctest.h>

#include <algorithm>
#include <random>

#include "fricke/error.hpp"
#include "fricke/sampling.hpp"
#include "fricke/sections.hpp"
#include "helpers.hpp"

using namespace fricke;
using namespace fricke::test;

namespace {

SectionFrame frame_of(const std::string& base) { return SectionFrame(t3(base)); }

bool same_points(std::vector<SectionPoint> a, std::vector<SectionPoint> b) {
  auto less = [](const SectionPoint& u, const SectionPoint& v) { return u.x != v.x ? u.x < v.x : u.z < v.z; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

const std::vector<std::string> frames = {"1,1,1", "1,1,2", "2,1,1", "1,2,5", "1,5,2", "2,5,29", "2,29,5"};

}  // namespace

TEST_CASE("frames") {
  CHECK_THROWS_AS(frame_of("1,1,3"), Error);
  CHECK(frame_of("1,1,1").is_fundamental());
  CHECK(frame_of("1,5,2").is_fundamental());
  CHECK_FALSE(frame_of("1,2,5").is_fundamental());
  CHECK_FALSE(frame_of("317/324,74/81,17/12").is_fundamental());
  CHECK(frame_of("1,1,1").contains(sp("2", "5")));
  CHECK_FALSE(frame_of("1,1,1").contains(sp("2", "4")));
}

TEST_CASE("solve_z") {
  const SectionFrame f = frame_of("1,1,1");
  CHECK(same_points(solve_z(f, q("1")).points, {sp("1", "1"), sp("1", "2")}));
  CHECK(same_points(solve_z(f, q("2")).points, {sp("2", "1"), sp("2", "5")}));
  const SectionSolutions none = solve_z(f, q("3"));
  CHECK(none.points.empty());
  CHECK(none.non_rational);
}

TEST_CASE("points at infinity") {
  const QuadraticRoots one = infinity_points(q("1"));
  REQUIRE(one.irrational.size() == 2);
  CHECK(to_string(one.irrational[0]) == "(3+√5)/2");
  CHECK(to_string(one.irrational[1]) == "(3-√5)/2");
  const QuadraticRoots two = infinity_points(frame_of("1,2,5"));
  REQUIRE(two.irrational.size() == 2);
  CHECK(to_string(two.irrational[0]) == "(3+2√2)/1");
  for (const auto& n0 : {"1", "2", "5", "29", "7/3"})
    for (const auto& t : infinity_points(q(n0)).irrational) CHECK(t.evaluate(q("1"), -3 * q(n0), q("1")).is_zero());
  // 9 n0^2 - 4 is a square for n0 = 2/3: a double rational root.
  CHECK(infinity_points(q("2/3")).rational == std::vector<Rational>{q("1")});
}

TEST_CASE("chebyshev values and convergents") {
  CHECK(chebyshev_b(0, q("7")) == 1);
  CHECK(chebyshev_b(2, q("1")) == 8);
  CHECK(chebyshev_b(3, q("1")) == 21);
  CHECK(chebyshev_b(4, q("1")) == 55);
  CHECK(chebyshev_b(-1, q("1")) == 0);
  CHECK(chebyshev_b(-2, q("1")) == -1);
  for (const auto& n0s : {"1", "2", "5", "1/3"}) {
    const Rational n0 = q(n0s);
    CHECK(chebyshev_b(2, n0) == 9 * n0 * n0 - 1);
    CHECK(chebyshev_b(3, n0) == 27 * n0 * n0 * n0 - 6 * n0);
    CHECK(chebyshev_b(4, n0) == 81 * n0 * n0 * n0 * n0 - 27 * n0 * n0 + 1);
  }
  CHECK(cf_convergent(q("1"), 1) == 3);
  CHECK(cf_convergent(q("1"), 2) == q("8/3"));
  CHECK(cf_convergent(q("1"), 3) == q("21/8"));
  CHECK_THROWS_AS(cf_convergent(q("1"), 0), Error);
}

TEST_CASE("matrix power identity") {
  for (const auto& n0s : {"1", "2", "5"}) {
    const Rational n0 = q(n0s);
    const auto b = chebyshev_sequence(50, n0);
    for (unsigned r = 0; r <= 50; ++r) {
      const Matrix2 expected{{b[r + 2], -b[r + 1], b[r + 1], -b[r]}};
      CHECK(power(translation_matrix(n0), r) == expected);
    }
  }
}

TEST_CASE("convergent quality") {
  for (const auto& n0s : {"1", "2", "5"}) {
    const Rational n0 = q(n0s);
    Rational previous = -1;
    for (long r = 1; r <= 20; ++r) {
      const Rational c = cf_convergent(n0, r);
      const Rational value = abs(c * c - 3 * n0 * c + 1);
      const Rational b = chebyshev_b(r - 1, n0);
      CHECK(value == 1 / (b * b));
      if (previous >= 0) CHECK(value < previous);
      previous = value;
      CHECK(cf_convergent(n0, r + 1) == 3 * n0 - 1 / c);
    }
  }
}

TEST_CASE("group law examples") {
  const SectionFrame f = frame_of("1,1,1");
  CHECK(quadric_add(f, sp("2", "1"), sp("1", "2")) == sp("1", "1"));
  CHECK(quadric_add(f, sp("1", "2"), sp("1", "2")) == sp("2", "5"));
  CHECK(quadric_double(f, sp("1", "2")) == sp("2", "5"));
  CHECK(quadric_add(f, sp("-1", "-1"), sp("-1", "-1")) == f.origin());
  CHECK(quadric_inverse(f, f.origin()) == f.origin());
  CHECK(quadric_inverse(f, sp("2", "1")) == sp("1", "2"));
  CHECK(quadric_inverse(f, sp("-1", "-1")) == sp("-1", "-1"));
  CHECK_THROWS_AS(quadric_add(f, sp("2", "4"), sp("1", "2")), Error);
}

TEST_CASE("group law identities from the Viete moves") {
  std::mt19937_64 rng(77);
  for (const auto& base : frames) {
    const SectionFrame f = frame_of(base);
    const SectionPoint O = f.origin();
    const SectionPoint swapped{f.k0(), f.m0()};
    const SectionPoint order2{-f.m0(), -f.k0()};
    CHECK(quadric_add(f, order2, order2) == O);
    for (int i = 0; i < 20; ++i) {
      const SectionPoint p = random_section_point(f, rng, 12);
      CHECK(quadric_add(f, p, dihedral(f, p, DihedralMap::T)) == swapped);
      CHECK(quadric_add(f, p, dihedral(f, p, DihedralMap::C)) == dihedral(f, O, DihedralMap::C));
      CHECK(quadric_add(f, p, dihedral(f, p, DihedralMap::A)) == dihedral(f, O, DihedralMap::A));
    }
  }
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(123);
  for (const auto& base : frames) {
    const SectionFrame f = frame_of(base);
    const SectionPoint O = f.origin();
    const SectionPoint g = random_section_point(f, rng, 6);
    std::vector<SectionPoint> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(random_section_point(f, rng, 10));
    for (long k = -3; k <= 3; ++k) pts.push_back(quadric_multiple(f, g, k));
    pts.push_back(O);
    pts.push_back({-f.m0(), -f.k0()});
    for (const auto& p : pts) {
      CHECK(f.contains(p));
      CHECK(quadric_add(f, O, p) == p);
      CHECK(quadric_add(f, p, quadric_inverse(f, p)) == O);
      CHECK(quadric_add(f, p, p) == quadric_double(f, p));
    }
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      const SectionPoint &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
      CHECK(quadric_add(f, a, b) == quadric_add(f, b, a));
      CHECK(quadric_add(f, quadric_add(f, a, b), c) == quadric_add(f, a, quadric_add(f, b, c)));
    }
    CHECK(quadric_multiple(f, g, 3) == quadric_add(f, g, quadric_add(f, g, g)));
  }
}

TEST_CASE("vertical chords and tangents") {
  const SectionFrame f = frame_of("1,1,1");
  // (1,1) and (1,2) share x: the sum is A O = (m0, 3 n0 m0 - k0).
  CHECK(quadric_add(f, sp("1", "1"), sp("1", "2")) == sp("1", "2"));
  CHECK(quadric_add(f, sp("2", "1"), sp("2", "5")) == dihedral(f, f.origin(), DihedralMap::A));
  CHECK(tangent_slope(f, sp("1", "1")) == Slope::finite(q("-1")));
  CHECK(point_from_slope(f, Slope::vertical()) == sp("1", "2"));
}

TEST_CASE("dihedral maps") {
  const SectionFrame f = frame_of("1,1,1");
  CHECK(dihedral(f, sp("1", "1"), DihedralMap::TA) == sp("2", "1"));
  CHECK(dihedral(f, sp("2", "1"), DihedralMap::TA) == sp("5", "2"));
  CHECK(parse_dihedral_map("TC") == DihedralMap::TC);
  CHECK_THROWS_AS(parse_dihedral_map("X"), Error);
  std::mt19937_64 rng(5);
  for (const auto& base : frames) {
    const SectionFrame fr = frame_of(base);
    for (int i = 0; i < 20; ++i) {
      const SectionPoint p = random_section_point(fr, rng, 10);
      for (auto m : {DihedralMap::A, DihedralMap::T, DihedralMap::B, DihedralMap::C}) {
        CHECK(dihedral(fr, dihedral(fr, p, m), m) == p);
        CHECK(fr.contains(dihedral(fr, p, m)));
      }
      const SectionPoint tat = dihedral(fr, dihedral(fr, dihedral(fr, p, DihedralMap::T), DihedralMap::A), DihedralMap::T);
      CHECK(dihedral(fr, p, DihedralMap::C) == tat);
      CHECK(dihedral(fr, p, DihedralMap::TA) == dihedral(fr, dihedral(fr, p, DihedralMap::A), DihedralMap::T));
      CHECK(dihedral(fr, p, DihedralMap::TC) == dihedral(fr, dihedral(fr, p, DihedralMap::C), DihedralMap::T));
    }
    // integral points stay integral
    SectionPoint p = fr.origin();
    if (is_integral(p.x) && is_integral(p.z) && is_integral(fr.n0()))
      for (auto m : {DihedralMap::A, DihedralMap::TA, DihedralMap::C, DihedralMap::TC, DihedralMap::B, DihedralMap::T}) {
        const SectionPoint r = dihedral(fr, p, m);
        CHECK(is_integral(r.x));
        CHECK(is_integral(r.z));
      }
  }
}

TEST_CASE("translation powers agree with iteration") {
  const SectionFrame f = frame_of("1,1,1");
  CHECK(ta_power(f, sp("1", "1"), 1, TranslationFamily::TA) == sp("2", "1"));
  CHECK(ta_power(f, sp("1", "1"), 3, TranslationFamily::TA) == sp("13", "5"));
  CHECK(ta_power(f, sp("1", "1"), 2, TranslationFamily::TC) == sp("2", "5"));
  std::mt19937_64 rng(6);
  for (const auto& base : frames) {
    const SectionFrame fr = frame_of(base);
    const SectionPoint start = random_section_point(fr, rng, 10);
    SectionPoint ta = start, tc = start;
    for (long r = 0; r <= 30; ++r) {
      CHECK(ta_power(fr, start, r, TranslationFamily::TA) == ta);
      CHECK(ta_power(fr, start, r, TranslationFamily::TC) == tc);
      ta = dihedral(fr, ta, DihedralMap::TA);
      tc = dihedral(fr, tc, DihedralMap::TC);
    }
  }
}

TEST_CASE("orbit homomorphism and slope form") {
  for (const auto& base : {"1,1,1", "1,2,5", "1,5,2", "2,29,5"}) {
    const SectionFrame f = frame_of(base);
    for (auto family : {TranslationFamily::TA, TranslationFamily::TC}) {
      std::vector<SectionPoint> P;
      for (long r = 0; r <= 20; ++r) P.push_back(ta_power(f, f.origin(), r, family));
      for (std::size_t a = 0; a <= 10; ++a)
        for (std::size_t b = 0; b <= 10; ++b) CHECK(quadric_add(f, P[a], P[b]) == P[a + b]);
      // The line O P_r is parallel to every chord P_a P_b with a + b = r
      // (to the tangent at P_a when a = b).
      for (std::size_t r = 1; r <= 12; ++r) {
        const Slope target = Slope::through(f.m0(), f.k0(), P[r].x, P[r].z);
        for (std::size_t a = 0; a <= r; ++a) {
          const std::size_t b = r - a;
          const Slope s = a == b ? tangent_slope(f, P[a]) : Slope::through(P[a].x, P[a].z, P[b].x, P[b].z);
          CHECK(s == target);
        }
      }
      // The chord P_{r-1} P_r is not parallel to O P_r in general.
      if (f.n0() == 1 && family == TranslationFamily::TA)
        CHECK_FALSE(Slope::through(P[1].x, P[1].z, P[2].x, P[2].z) == Slope::through(f.m0(), f.k0(), P[2].x, P[2].z));
    }
  }
}
