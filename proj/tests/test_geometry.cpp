#include <cmath>
#include <numbers>

#include "doctest.h"
#include "legendrian/error.hpp"
#include "legendrian/geometry_numerics.hpp"

using namespace legendrian;

namespace {

std::vector<Vec3> circle(Vec3 c, Vec3 u, Vec3 v, int n) {
  std::vector<Vec3> out;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    out.push_back({c[0] + std::cos(t) * u[0] + std::sin(t) * v[0],
                   c[1] + std::cos(t) * u[1] + std::sin(t) * v[1],
                   c[2] + std::cos(t) * u[2] + std::sin(t) * v[2]});
  }
  return out;
}

}  // namespace

TEST_CASE("f at simple points") {
  const auto o = map_f({0, 0, 0});
  CHECK(o[0] == doctest::Approx(0));
  CHECK(o[1] == doctest::Approx(1));
  CHECK(o[2] == doctest::Approx(0));
  CHECK(o[3] == doctest::Approx(0));
  for (double q : {0.1, 0.25, 0.6}) {
    const auto x = map_f({q, 0, 0});
    const double th = 2 * std::numbers::pi * q;
    CHECK(x[0] == doctest::Approx(0));
    CHECK(x[1] == doctest::Approx(std::cos(th)));
    CHECK(x[2] == doctest::Approx(std::sin(th)));
    CHECK(x[3] == doctest::Approx(0));
  }
  CHECK(lambda_of({0, 2, 1}) == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("pullback along d/dtheta at (0, 1, 0)") {
  const Point3Jet pt{0, 1, 0};
  const Vec4 w = push_forward(pt, {1, 0, 0});
  const double lhs = alpha0(map_f(pt), w);
  const double lam2 = 1 / (1 + 0.25);
  CHECK(lhs == doctest::Approx(-lam2).epsilon(1e-12));
  CHECK(pullback_residual(pt, {1, 0, 0}) < 1e-12);
}

TEST_CASE("pushforward of d/dp at the origin") {
  const Vec4 dp = push_forward({0, 0, 0}, {0, 1, 0});
  CHECK(dp[3] == doctest::Approx(0.5));
  const Vec4 e2 = frame_e2(map_f({0, 0, 0}));
  CHECK(0.5 * e2[3] == doctest::Approx(0.5));
  CHECK(pushforward_dp_residual({0, 0, 0}) < 1e-14);
  CHECK(pushforward_dp_residual({0.3, -4, 7}) < 1e-12);
}

TEST_CASE("jacobian against central differences") {
  CHECK(jacobian_fd_discrepancy({0.2, 1.5, -0.7}) < 1e-6);
  CHECK(jacobian_fd_discrepancy({0.9, -9, 9}) < 1e-6);
}

TEST_CASE("coordinate changes") {
  CHECK(coord_change_xy_residual(0.4, 1.2, -0.3, {0.2, 0.5, -0.1}) < 1e-12);
  CHECK(coord_change_uv_residual(2.4, -3, 0.7, {1, -0.4, 0.9}) < 1e-12);
}

TEST_CASE("gauss linking of planar circles") {
  const auto a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 400);
  const auto far = circle({5, 0, 0}, {1, 0, 0}, {0, 1, 0}, 400);
  CHECK(gauss_linking(a, far).rounded == 0);
  const auto hopf = circle({1, 0, 0}, {1, 0, 0}, {0, 0, 1}, 400);
  const auto e = gauss_linking(a, hopf);
  CHECK(std::abs(e.rounded) == 1);
  CHECK(e.distance < 0.05);
  std::vector<Vec3> rev(hopf.rbegin(), hopf.rend());
  CHECK(gauss_linking(a, rev).rounded == -e.rounded);
  CHECK_THROWS_AS(gauss_linking(a, a), Error);
}

TEST_CASE("hopf fibres and K0 link -1") {
  CHECK(verify_hopf_fibre_linking(0, 0, 1, 0, 512).rounded == -1);
  CHECK(verify_hopf_fibre_linking(0, 0, 0, 1, 512).rounded == -1);
  CHECK_THROWS_AS(verify_hopf_fibre_linking(0, 0, 0, 0, 256), Error);
  const auto k0 = sample_k0(512);
  const auto k1 = sample_k0_prime(512);
  const auto poles = admissible_poles({k0, k1});
  REQUIRE(poles.size() >= 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sphere_linking(k0, k1, poles[i]).rounded == -1);
}

TEST_CASE("report is deterministic and passes") {
  const auto a = run_geometry_checks(3000, 99, 256);
  const auto b = run_geometry_checks(3000, 99, 256);
  CHECK(a.all_passed());
  REQUIRE(a.residuals.size() == b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i) {
    CHECK(a.residuals[i].max_residual == b.residuals[i].max_residual);
  }
  CHECK(format_report_table(a) == format_report_table(b));
}
