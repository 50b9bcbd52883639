#pragma once

// Floating-point checks of the contactomorphism
//   f(q, p, z) = λ (p/2 sin θ - z cos θ, cos θ, sin θ, p/2 cos θ + z sin θ),
//   λ = 1 / sqrt(1 + p²/4 + z²),  θ = 2π q,
// from J^1(S^1) to S^3 minus K0 = {y1 = x2 = 0}, with S^3 coordinates
// ordered (x1, y1, x2, y2).
//
// q is stored in [0, 1) and only becomes an angle at the trig calls.
// Tangent vectors are given in the (θ, p, z) chart so that the contact form
// reads dz - p dθ.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace legendrian {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

struct Point3Jet {
  double q = 0;  // in [0, 1)
  double p = 0;
  double z = 0;
};

struct TangentJet {
  double dtheta = 0;
  double dp = 0;
  double dz = 0;
};

using Point4Sphere = Vec4;

double lambda_of(const Point3Jet& pt);

Point4Sphere map_f(const Point3Jet& pt);

/// Columns ∂θ f, ∂p f, ∂z f.
std::array<Vec4, 3> jacobian_f(const Point3Jet& pt);

Vec4 push_forward(const Point3Jet& pt, const TangentJet& v);

/// x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2 at x.
double alpha0(const Vec4& x, const Vec4& w);

/// Contact frame e1 = (-y2, -x2, y1, x1), e2 = (x2, -y2, -x1, y1).
Vec4 frame_e1(const Vec4& x);
Vec4 frame_e2(const Vec4& x);

/// | |f(pt)| - 1 |.
double sphere_residual(const Point3Jet& pt);

/// |α0(Df v) - λ² (dz - p dθ)(v)|.
double pullback_residual(const Point3Jet& pt, const TangentJet& v);

/// |Df ∂p - (λ²/2)(e2 - z e1)|, frame evaluated at f(pt).
double pushforward_dp_residual(const Point3Jet& pt);

/// (θ, x, y) ↦ (θ, p, z) with p = -2x sin 2θ - 2y cos 2θ, z = x cos 2θ - y sin 2θ;
/// residual of dz - p dθ = cos 2θ dx - sin 2θ dy on the tangent (dθ, dx, dy).
double coord_change_xy_residual(double theta, double x, double y, const Vec3& w);

/// (θ, u, v) ↦ (θ, p, z) with p = -u sin θ - v cos θ, z = u cos θ - v sin θ;
/// residual of dz - p dθ = cos θ du - sin θ dv.
double coord_change_uv_residual(double theta, double u, double v, const Vec3& w);

/// Largest entry of |analytic Jacobian - central differences|.
double jacobian_fd_discrepancy(const Point3Jet& pt, double step = 1e-6);

struct LinkingEstimate {
  double estimate = 0;
  std::int64_t rounded = 0;
  double distance = 0;  // |estimate - rounded|
};

/// Midpoint double sum of the Gauss integral over two closed polylines
/// (closure implicit). Throws CurvesIntersect below 1e-6 separation.
LinkingEstimate gauss_linking(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2);

/// Orientation-preserving stereographic projection S^3 minus {pole} -> R^3.
class Stereographic {
 public:
  explicit Stereographic(const Vec4& pole);
  Vec3 operator()(const Vec4& x) const;
  const Vec4& pole() const { return pole_; }

 private:
  Vec4 pole_;
  std::array<Vec4, 3> basis_;
};

/// Candidate poles, tried in order; (0, -1, 0, 0) first.
std::vector<Vec4> default_poles();

/// Poles at distance >= 0.3 from every sample of the given curves.
std::vector<Vec4> admissible_poles(const std::vector<std::vector<Vec4>>& curves,
                                   double min_distance = 0.3);

std::vector<Vec4> sample_k0(int segments);
std::vector<Vec4> sample_k0_prime(int segments);
std::vector<Vec4> sample_hopf_fibre(double p0, double z0, int segments);

/// Linking number of two curves in S^3, projected from `pole`.
LinkingEstimate sphere_linking(const std::vector<Vec4>& a, const std::vector<Vec4>& b,
                               const Vec4& pole);

struct ResidualCheck {
  std::string name;
  std::int64_t samples = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = false;
};

struct IntegerCheck {
  std::string name;
  double estimate = 0;
  std::int64_t rounded = 0;
  double distance = 0;
  std::int64_t expected = 0;
  double tolerance = 0;
  bool passed = false;
};

struct GeometryReport {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int segments = 0;
  std::vector<ResidualCheck> residuals;
  std::vector<IntegerCheck> integers;

  bool all_passed() const;
};

/// One fibre pair, first admissible pole; expected linking -1.
IntegerCheck verify_hopf_fibre_linking(double p0, double z0, double p1, double z1, int segments);

/// All identity checks over `samples` seeded points with |p|, |z| <= 10, plus
/// the K0/K0' and Hopf fibre linking numbers. Samples are split across
/// threads in fixed blocks so results depend only on the seed.
GeometryReport run_geometry_checks(std::int64_t samples, std::uint64_t seed, int segments);

std::string format_report_table(const GeometryReport& report);

}  // namespace legendrian
