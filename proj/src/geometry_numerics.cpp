#include "legendrian/geometry_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;
constexpr double kIdentityTol = 1e-10;
constexpr double kIntegerTol = 0.05;
constexpr double kFdTol = 1e-6;
constexpr double kMinSeparation = 1e-6;

double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double norm4(const Vec4& a) { return std::sqrt(dot4(a, a)); }

Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double det4(const std::array<Vec4, 4>& m) {
  // Laplace expansion along the first row; m[i] are columns.
  auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h,
                 double i) { return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g); };
  double total = 0;
  for (int col = 0; col < 4; ++col) {
    double sub[9];
    int k = 0;
    for (int row = 1; row < 4; ++row) {
      for (int c = 0; c < 4; ++c) {
        if (c == col) continue;
        sub[k++] = m[c][row];
      }
    }
    const double minor =
        det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
    total += (col % 2 == 0 ? 1 : -1) * m[col][0] * minor;
  }
  return total;
}

Vec4 theta_point(double theta, double p, double z) {
  return map_f({theta / kTwoPi - std::floor(theta / kTwoPi), p, z});
}

struct BlockMax {
  double sphere = 0, pullback = 0, xy = 0, uv = 0, dp = 0;
};

BlockMax run_block(std::uint64_t seed, std::uint64_t block, std::int64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> box(-10.0, 10.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BlockMax out;
  for (std::int64_t i = 0; i < count; ++i) {
    Point3Jet pt{unit(rng), box(rng), box(rng)};
    double a = gauss(rng), b = gauss(rng), c = gauss(rng);
    double n = std::sqrt(a * a + b * b + c * c);
    TangentJet v{a / n, b / n, c / n};
    double wa = gauss(rng), wb = gauss(rng), wc = gauss(rng);
    double wn = std::sqrt(wa * wa + wb * wb + wc * wc);
    Vec3 w{wa / wn, wb / wn, wc / wn};
    const double theta = kTwoPi * pt.q;
    const double x = box(rng), y = box(rng);
    out.sphere = std::max(out.sphere, sphere_residual(pt));
    out.pullback = std::max(out.pullback, pullback_residual(pt, v));
    out.dp = std::max(out.dp, pushforward_dp_residual(pt));
    out.xy = std::max(out.xy, coord_change_xy_residual(theta, x, y, w));
    out.uv = std::max(out.uv, coord_change_uv_residual(theta, x, y, w));
  }
  return out;
}

ResidualCheck residual_check(std::string name, std::int64_t samples, double max_residual,
                             double tol) {
  return {std::move(name), samples, max_residual, tol, max_residual < tol};
}

IntegerCheck integer_check(std::string name, const LinkingEstimate& e, std::int64_t expected) {
  IntegerCheck c;
  c.name = std::move(name);
  c.estimate = e.estimate;
  c.rounded = e.rounded;
  c.distance = e.distance;
  c.expected = expected;
  c.tolerance = kIntegerTol;
  c.passed = e.rounded == expected && e.distance < kIntegerTol;
  return c;
}

}  // namespace

double lambda_of(const Point3Jet& pt) {
  return 1.0 / std::sqrt(1.0 + pt.p * pt.p / 4.0 + pt.z * pt.z);
}

Point4Sphere map_f(const Point3Jet& pt) {
  const double th = kTwoPi * pt.q;
  const double c = std::cos(th), s = std::sin(th);
  const double l = lambda_of(pt);
  return {l * (pt.p / 2 * s - pt.z * c), l * c, l * s, l * (pt.p / 2 * c + pt.z * s)};
}

std::array<Vec4, 3> jacobian_f(const Point3Jet& pt) {
  const double th = kTwoPi * pt.q;
  const double c = std::cos(th), s = std::sin(th);
  const double p = pt.p, z = pt.z;
  const double l = lambda_of(pt);
  const double l3 = l * l * l;
  const Vec4 g{p / 2 * s - z * c, c, s, p / 2 * c + z * s};
  std::array<Vec4, 3> J;
  J[0] = {l * (p / 2 * c + z * s), -l * s, l * c, l * (-p / 2 * s + z * c)};
  for (int i = 0; i < 4; ++i) {
    J[1][i] = -(p / 4) * l3 * g[i];
    J[2][i] = -z * l3 * g[i];
  }
  J[1][0] += l * s / 2;
  J[1][3] += l * c / 2;
  J[2][0] += -l * c;
  J[2][3] += l * s;
  return J;
}

Vec4 push_forward(const Point3Jet& pt, const TangentJet& v) {
  const auto J = jacobian_f(pt);
  Vec4 out{};
  for (int i = 0; i < 4; ++i) out[i] = J[0][i] * v.dtheta + J[1][i] * v.dp + J[2][i] * v.dz;
  return out;
}

double alpha0(const Vec4& x, const Vec4& w) {
  return x[0] * w[1] - x[1] * w[0] + x[2] * w[3] - x[3] * w[2];
}

Vec4 frame_e1(const Vec4& x) { return {-x[3], -x[2], x[1], x[0]}; }

Vec4 frame_e2(const Vec4& x) { return {x[2], -x[3], -x[0], x[1]}; }

double sphere_residual(const Point3Jet& pt) { return std::abs(norm4(map_f(pt)) - 1.0); }

double pullback_residual(const Point3Jet& pt, const TangentJet& v) {
  const double l = lambda_of(pt);
  const double lhs = alpha0(map_f(pt), push_forward(pt, v));
  const double rhs = l * l * (v.dz - pt.p * v.dtheta);
  return std::abs(lhs - rhs);
}

double pushforward_dp_residual(const Point3Jet& pt) {
  const auto J = jacobian_f(pt);
  const Vec4 x = map_f(pt);
  const Vec4 e1 = frame_e1(x), e2 = frame_e2(x);
  const double l = lambda_of(pt);
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    const double rhs = l * l / 2 * (e2[i] - pt.z * e1[i]);
    worst = std::max(worst, std::abs(J[1][i] - rhs));
  }
  return worst;
}

double coord_change_xy_residual(double theta, double x, double y, const Vec3& w) {
  // z = Re(e^{2iθ}(x + iy)); its differential is taken through the complex form.
  const std::complex<double> rot = std::polar(1.0, 2 * theta);
  const std::complex<double> xy(x, y);
  const std::complex<double> I(0, 1);
  const double p = -2 * x * std::sin(2 * theta) - 2 * y * std::cos(2 * theta);
  const double dz = std::real(2.0 * I * rot * xy) * w[0] + std::real(rot) * w[1] +
                    std::real(I * rot) * w[2];
  const double lhs = dz - p * w[0];
  const double rhs = std::cos(2 * theta) * w[1] - std::sin(2 * theta) * w[2];
  return std::abs(lhs - rhs);
}

double coord_change_uv_residual(double theta, double u, double v, const Vec3& w) {
  const std::complex<double> rot = std::polar(1.0, theta);
  const std::complex<double> uv(u, v);
  const std::complex<double> I(0, 1);
  const double p = -u * std::sin(theta) - v * std::cos(theta);
  const double dz =
      std::real(I * rot * uv) * w[0] + std::real(rot) * w[1] + std::real(I * rot) * w[2];
  const double lhs = dz - p * w[0];
  const double rhs = std::cos(theta) * w[1] - std::sin(theta) * w[2];
  return std::abs(lhs - rhs);
}

double jacobian_fd_discrepancy(const Point3Jet& pt, double step) {
  const auto J = jacobian_f(pt);
  const double th = kTwoPi * pt.q;
  std::array<Vec4, 3> fd;
  const Vec4 tp = theta_point(th + step, pt.p, pt.z), tm = theta_point(th - step, pt.p, pt.z);
  const Vec4 pp = map_f({pt.q, pt.p + step, pt.z}), pm = map_f({pt.q, pt.p - step, pt.z});
  const Vec4 zp = map_f({pt.q, pt.p, pt.z + step}), zm = map_f({pt.q, pt.p, pt.z - step});
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    fd[0][i] = (tp[i] - tm[i]) / (2 * step);
    fd[1][i] = (pp[i] - pm[i]) / (2 * step);
    fd[2][i] = (zp[i] - zm[i]) / (2 * step);
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(fd[k][i] - J[k][i]));
  }
  return worst;
}

LinkingEstimate gauss_linking(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2) {
  if (c1.size() < 3 || c2.size() < 3) {
    throw Error(ErrorCode::InvalidInput, "curves need at least 3 points");
  }
  std::vector<Vec3> m1, d1, m2, d2;
  auto prep = [](const std::vector<Vec3>& c, std::vector<Vec3>& mid, std::vector<Vec3>& del) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& a = c[i];
      const Vec3& b = c[(i + 1) % n];
      mid.push_back({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2});
      del.push_back(sub3(b, a));
    }
  };
  prep(c1, m1, d1);
  prep(c2, m2, d2);
  double sum = 0;
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m1.size(); ++i) {
    for (std::size_t j = 0; j < m2.size(); ++j) {
      const Vec3 r = sub3(m1[i], m2[j]);
      const double dist = std::sqrt(dot3(r, r));
      min_dist = std::min(min_dist, dist);
      if (dist < kMinSeparation) continue;
      sum += dot3(r, cross3(d1[i], d2[j])) / (dist * dist * dist);
    }
  }
  if (min_dist < kMinSeparation) {
    throw Error(ErrorCode::CurvesIntersect, "curves come closer than 1e-6");
  }
  LinkingEstimate e;
  e.estimate = sum / (4 * kPi);
  e.rounded = static_cast<std::int64_t>(std::llround(e.estimate));
  e.distance = std::abs(e.estimate - static_cast<double>(e.rounded));
  return e;
}

Stereographic::Stereographic(const Vec4& pole) : pole_(pole) {
  const double n = norm4(pole_);
  for (auto& x : pole_) x /= n;
  int skip = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(pole_[i]) > std::abs(pole_[skip])) skip = i;
  }
  std::vector<Vec4> basis{pole_};
  for (int i = 0; i < 4; ++i) {
    if (i == skip) continue;
    Vec4 v{};
    v[i] = 1;
    for (const auto& b : basis) {
      const double d = dot4(v, b);
      for (int k = 0; k < 4; ++k) v[k] -= d * b[k];
    }
    const double vn = norm4(v);
    for (auto& x : v) x /= vn;
    basis.push_back(v);
  }
  basis_ = {basis[1], basis[2], basis[3]};
  const Vec4 minus_pole{-pole_[0], -pole_[1], -pole_[2], -pole_[3]};
  if (det4({minus_pole, basis_[0], basis_[1], basis_[2]}) < 0) {
    for (auto& x : basis_[2]) x = -x;
  }
}

Vec3 Stereographic::operator()(const Vec4& x) const {
  const double denom = 1.0 - dot4(x, pole_);
  return {dot4(x, basis_[0]) / denom, dot4(x, basis_[1]) / denom, dot4(x, basis_[2]) / denom};
}

std::vector<Vec4> default_poles() {
  const double h = 0.5;
  return {{0, -1, 0, 0}, {0, 0, -1, 0}, {h, -h, h, -h}, {-h, h, h, h},
          {0, 1, 0, 0},  {0, 0, 1, 0},  {h, h, -h, h},  {-h, -h, -h, -h}};
}

std::vector<Vec4> admissible_poles(const std::vector<std::vector<Vec4>>& curves,
                                   double min_distance) {
  std::vector<Vec4> out;
  for (const auto& pole : default_poles()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : curves) {
      for (const auto& x : c) {
        Vec4 d{x[0] - pole[0], x[1] - pole[1], x[2] - pole[2], x[3] - pole[3]};
        best = std::min(best, norm4(d));
      }
    }
    if (best >= min_distance) out.push_back(pole);
  }
  return out;
}

std::vector<Vec4> sample_k0(int segments) {
  std::vector<Vec4> out;
  for (int i = 0; i < segments; ++i) {
    const double t = kTwoPi * i / segments;
    out.push_back({std::cos(t), 0, 0, std::sin(t)});
  }
  return out;
}

std::vector<Vec4> sample_k0_prime(int segments) {
  std::vector<Vec4> out;
  const double r = 1 / std::sqrt(2.0);
  for (int i = 0; i < segments; ++i) {
    const double t = kTwoPi * i / segments;
    out.push_back({r * std::cos(t), r * std::cos(t), -r * std::sin(t), r * std::sin(t)});
  }
  return out;
}

std::vector<Vec4> sample_hopf_fibre(double p0, double z0, int segments) {
  std::vector<Vec4> out;
  for (int i = 0; i < segments; ++i) {
    out.push_back(map_f({static_cast<double>(i) / segments, p0, z0}));
  }
  return out;
}

LinkingEstimate sphere_linking(const std::vector<Vec4>& a, const std::vector<Vec4>& b,
                               const Vec4& pole) {
  const Stereographic proj(pole);
  std::vector<Vec3> pa, pb;
  for (const auto& x : a) pa.push_back(proj(x));
  for (const auto& x : b) pb.push_back(proj(x));
  return gauss_linking(pa, pb);
}

bool GeometryReport::all_passed() const {
  for (const auto& r : residuals) {
    if (!r.passed) return false;
  }
  for (const auto& i : integers) {
    if (!i.passed) return false;
  }
  return true;
}

IntegerCheck verify_hopf_fibre_linking(double p0, double z0, double p1, double z1, int segments) {
  if (segments < 64) throw Error(ErrorCode::InvalidInput, "segments must be at least 64");
  const auto a = sample_hopf_fibre(p0, z0, segments);
  const auto b = sample_hopf_fibre(p1, z1, segments);
  const auto poles = admissible_poles({a, b});
  if (poles.empty()) throw Error(ErrorCode::InvalidInput, "no admissible projection pole");
  std::ostringstream name;
  name << "lk(fibre(" << p0 << "," << z0 << "), fibre(" << p1 << "," << z1 << "))";
  return integer_check(name.str(), sphere_linking(a, b, poles.front()), -1);
}

GeometryReport run_geometry_checks(std::int64_t samples, std::uint64_t seed, int segments) {
  if (samples < 1) throw Error(ErrorCode::InvalidInput, "samples must be positive");
  if (segments < 64) throw Error(ErrorCode::InvalidInput, "segments must be at least 64");
  GeometryReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.segments = segments;

  constexpr std::int64_t kBlock = 4096;
  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockMax> results(static_cast<std::size_t>(blocks));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t workers = std::min<std::int64_t>(blocks, hw);
  std::vector<std::thread> pool;
  for (std::int64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t b = w; b < blocks; b += workers) {
        const std::int64_t count = std::min(kBlock, samples - b * kBlock);
        results[static_cast<std::size_t>(b)] = run_block(seed, static_cast<std::uint64_t>(b), count);
      }
    });
  }
  for (auto& t : pool) t.join();
  BlockMax all;
  for (const auto& r : results) {
    all.sphere = std::max(all.sphere, r.sphere);
    all.pullback = std::max(all.pullback, r.pullback);
    all.xy = std::max(all.xy, r.xy);
    all.uv = std::max(all.uv, r.uv);
    all.dp = std::max(all.dp, r.dp);
  }
  rep.residuals.push_back(residual_check("sphere constraint |f| = 1", samples, all.sphere, kIdentityTol));
  rep.residuals.push_back(residual_check("pullback f*alpha0 = lambda^2 (dz - p dq)", samples,
                                         all.pullback, kIdentityTol));
  rep.residuals.push_back(residual_check("coordinate change (q,x,y)", samples, all.xy, kIdentityTol));
  rep.residuals.push_back(residual_check("coordinate change (q,u,v)", samples, all.uv, kIdentityTol));
  rep.residuals.push_back(residual_check("pushforward f_*(d_p) = (lambda^2/2)(e2 - z e1)", samples,
                                         all.dp, kIdentityTol));

  double fd = 0;
  const Point3Jet fd_points[] = {{0.1, 0.5, -0.3}, {0.37, -2.0, 1.5}, {0.81, 4.0, 0.2}};
  for (const auto& pt : fd_points) fd = std::max(fd, jacobian_fd_discrepancy(pt));
  rep.residuals.push_back(residual_check("jacobian vs central differences", 3, fd, kFdTol));

  const auto k0 = sample_k0(segments);
  const auto k0p = sample_k0_prime(segments);
  const auto poles = admissible_poles({k0, k0p});
  if (poles.empty()) throw Error(ErrorCode::InvalidInput, "no admissible projection pole");
  rep.integers.push_back(integer_check("lk(K0, K0') = tb(K0)", sphere_linking(k0, k0p, poles.front()), -1));
  rep.integers.push_back(verify_hopf_fibre_linking(0, 0, 1, 0, segments));
  rep.integers.push_back(verify_hopf_fibre_linking(0, 0, 0, 1, segments));
  rep.integers.push_back(verify_hopf_fibre_linking(1, 1, -2, 0.5, segments));
  return rep;
}

std::string format_report_table(const GeometryReport& report) {
  std::ostringstream os;
  os << "samples " << report.samples << "  seed " << report.seed << "  segments "
     << report.segments << "\n";
  os << std::left << std::setw(50) << "check" << std::setw(14) << "max residual" << std::setw(10)
     << "tol" << "result\n";
  for (const auto& r : report.residuals) {
    os << std::left << std::setw(50) << r.name << std::setw(14) << std::setprecision(3)
       << std::scientific << r.max_residual << std::setw(10) << r.tolerance
       << (r.passed ? "pass" : "FAIL") << "\n";
  }
  os << std::defaultfloat;
  os << std::left << std::setw(50) << "linking" << std::setw(14) << "estimate" << std::setw(10)
     << "expected" << "result\n";
  for (const auto& i : report.integers) {
    os << std::left << std::setw(50) << i.name << std::setw(14) << std::setprecision(6)
       << std::fixed << i.estimate << std::setw(10) << i.expected << (i.passed ? "pass" : "FAIL")
       << "\n";
  }
  os << std::defaultfloat;
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

}  // namespace legendrian
