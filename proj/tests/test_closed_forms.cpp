#include <catch2/catch.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "cyclorad/area.hpp"
#include "cyclorad/closed_forms.hpp"
#include "cyclorad/solver.hpp"

using namespace cyclorad;

TEST_CASE("triangle circumradius closed form") {
  CHECK(radius_triangle(make_triangle(3, 4, 5)) == Approx(2.5).margin(1e-15));
  for (double a : {0.3, 1.0, 7.5})
    CHECK(radius_triangle(make_triangle(a, a, a)) == Approx(a / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(radius_triangle(make_triangle(2, 2, 3.5)) ==
        Approx(solve_radius_convex(validate_sides({2, 2, 3.5})).r).epsilon(1e-12));
  CHECK_THROWS_AS(make_triangle(1, 2, 3), error);
}

TEST_CASE("Heron area") {
  CHECK(area_triangle_heron(make_triangle(3, 4, 5)) == Approx(6.0).margin(1e-15));
  CHECK(area_triangle_heron(make_triangle(1, 1, 1)) ==
        Approx(std::sqrt(3.0) / 4).epsilon(1e-15));
  side_list t = validate_sides({2, 2, 3.5});
  radius_solution sol = solve_radius_convex(t);
  CHECK(area_triangle_heron(make_triangle(2, 2, 3.5)) ==
        Approx(area_sum(t, sol.r, sol.cls).total).epsilon(1e-12));
}

TEST_CASE("cyclic quadrilateral radii") {
  quadrilateral_radii sq = radius_quadrilateral(1, 1, 1, 1);
  CHECK(sq.convex == Approx(0.7071067811865475).margin(1e-15));
  CHECK(sq.crossed_status == crossed_root_status::indeterminate);

  quadrilateral_radii rect = radius_quadrilateral(3, 4, 3, 4);
  CHECK(rect.convex == Approx(2.5).margin(1e-13));

  quadrilateral_radii q = radius_quadrilateral(1, 2, 3, 4);
  CHECK(q.convex == Approx(solve_radius_convex(validate_sides({1, 2, 3, 4})).r)
                        .epsilon(1e-13));

  CHECK_THROWS_AS(radius_quadrilateral(1, 1, 1, 3), error);
}

TEST_CASE("crossed quadrilateral root closes a signed traversal") {
  // butterfly built on the unit circle: vertex angles 0, 150, 40, 200 degrees,
  // i.e. steps +150, -110, +160, +160 summing to 360
  const double deg = std::numbers::pi / 180.0;
  const double a = 2 * std::sin(75 * deg), b = 2 * std::sin(55 * deg),
               c = 2 * std::sin(80 * deg), d = c;
  quadrilateral_radii q = radius_quadrilateral(a, b, c, d);
  REQUIRE(q.crossed_status == crossed_root_status::real_root);
  CHECK(q.crossed == Approx(1.0).epsilon(1e-12));

  side_list sides = validate_sides({a, b, c, d});
  signature sig{{1, -1, 1, 1}, 1};
  bool matches = false;
  for (const auto& sol : solve_radius_signed(sides, sig).roots)
    if (std::abs(sol.r - 1.0) < 1e-9) matches = true;
  CHECK(matches);
}

TEST_CASE("regular polygon radius anchors") {
  CHECK(radius_regular(5, 1.0) == Approx(0.8506508).margin(1e-6));
  CHECK(radius_regular(5, 1.0, 2) == Approx(0.5257311).margin(1e-6));
  CHECK(radius_regular(7, 1.0, 2) == Approx(0.639524).margin(1e-6));
  CHECK(radius_regular(7, 1.0, 3) == Approx(0.512858).margin(1e-6));
  CHECK(radius_regular(77, 1.0) == Approx(12.2583).margin(1e-4));
  for (double a : {0.5, 2.0}) CHECK(radius_regular(5, a) == Approx(0.8506508 * a).epsilon(1e-6));
}

TEST_CASE("regular polygon guards") {
  CHECK_THROWS_AS(radius_regular(6, 1.0, 2), error);  // gcd(6,2) != 1
  CHECK_THROWS_AS(radius_regular(7, 1.0, 4), error);  // q >= n/2
  CHECK_THROWS_AS(radius_regular(2, 1.0), error);
  CHECK_THROWS_AS(radius_regular(5, 0.0), error);
}

TEST_CASE("closed forms agree with the generic solver on random inputs") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int done = 0;
  while (done < 300) {
    double a = std::pow(10.0, u(rng)), b = std::pow(10.0, u(rng)),
           c = std::pow(10.0, u(rng));
    double mx = std::max({a, b, c});
    if (!(mx <= 0.95 * (a + b + c - mx))) continue;
    ++done;
    CHECK(radius_triangle(make_triangle(a, b, c)) ==
          Approx(solve_radius_convex(validate_sides({a, b, c})).r).epsilon(1e-12));
  }
  done = 0;
  while (done < 300) {
    double a = std::pow(10.0, u(rng)), b = std::pow(10.0, u(rng)),
           c = std::pow(10.0, u(rng)), d = std::pow(10.0, u(rng));
    double mx = std::max({a, b, c, d});
    if (!(mx <= 0.95 * (a + b + c + d - mx))) continue;
    ++done;
    CHECK(radius_quadrilateral(a, b, c, d).convex ==
          Approx(solve_radius_convex(validate_sides({a, b, c, d})).r).epsilon(1e-12));
  }
}

TEST_CASE("regular radius equals the generic solver on n equal sides") {
  std::vector<int> ns{77, 200};
  for (int n = 3; n <= 20; ++n) ns.push_back(n);
  for (int n : ns) {
    std::vector<double> sides(n, 1.0);
    CHECK(radius_regular(n, 1.0) ==
          Approx(solve_radius_convex(validate_sides(sides)).r).epsilon(1e-12));
  }
}

TEST_CASE("star radii appear in all_positive_roots with matching winding") {
  const std::pair<int, int> cases[] = {{5, 2}, {7, 2}, {7, 3}};
  for (auto [n, q] : cases) {
    std::vector<double> sides(n, 1.0);
    double expect = radius_regular(n, 1.0, q);
    root_set rs = all_positive_roots(validate_sides(sides));
    bool found = false;
    for (const auto& sol : rs.roots)
      if (sol.winding == q && std::abs(sol.r - expect) < 1e-12) found = true;
    CHECK(found);
  }
}
