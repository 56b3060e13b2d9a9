#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "beltrami/errors.hpp"
#include "beltrami/geometry.hpp"
#include "beltrami/sampling.hpp"

namespace beltrami {

// Default clearance radius around a chart's excluded set, in chart coordinates.
// Keeps 1/sin(theta)- and 1/r-type factors below ~1e3.
inline constexpr double kChartClearance = 1e-3;

// An orthogonal curvilinear coordinate system with closed-form forward map,
// coordinate gradients and scale factors. All members are pure; Chart values
// are immutable and freely shareable across threads.
struct Chart {
  std::string name;
  std::array<std::string, 3> coord_names;
  // Cartesian point -> natural coordinate triple.
  std::function<Vec3(const Vec3&)> forward;
  // Natural coordinate triple -> Cartesian point.
  std::function<Vec3(const Vec3&)> inverse;
  // Cartesian gradients of the three natural coordinates.
  std::function<std::array<Vec3, 3>(const Vec3&)> coord_gradients;
  // Closed-form |grad q_i| for each natural coordinate.
  std::function<Vec3(const Vec3&)> scale_factors;
  std::string excluded_set;
  // Clearance predicate on Cartesian points (margin already applied).
  std::function<bool(const Vec3&)> cleared;
  double clearance = kChartClearance;
};

// Assigns the roles (zeta, beta, gamma) to the chart's natural coordinates:
// role k is natural coordinate idx[k].
struct Ordering {
  std::array<int, 3> idx{0, 1, 2};
  std::string label;
};

inline Chart cartesian_chart() {
  Chart c;
  c.name = "cartesian";
  c.coord_names = {"x", "y", "z"};
  c.forward = [](const Vec3& p) { return p; };
  c.inverse = [](const Vec3& q) { return q; };
  c.coord_gradients = [](const Vec3&) {
    return std::array<Vec3, 3>{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  };
  c.scale_factors = [](const Vec3&) { return Vec3{1, 1, 1}; };
  c.excluded_set = "none";
  c.cleared = [](const Vec3&) { return true; };
  return c;
}

inline Chart cylindrical_chart() {
  Chart c;
  c.name = "cylindrical";
  c.coord_names = {"r", "phi", "z"};
  c.forward = [](const Vec3& p) {
    return Vec3{std::hypot(p.x, p.y), std::atan2(p.y, p.x), p.z};
  };
  c.inverse = [](const Vec3& q) {
    return Vec3{q.x * std::cos(q.y), q.x * std::sin(q.y), q.z};
  };
  c.coord_gradients = [](const Vec3& p) {
    const double r2 = p.x * p.x + p.y * p.y;
    const double r = std::sqrt(r2);
    return std::array<Vec3, 3>{Vec3{p.x / r, p.y / r, 0},
                               Vec3{-p.y / r2, p.x / r2, 0},
                               Vec3{0, 0, 1}};
  };
  c.scale_factors = [](const Vec3& p) {
    return Vec3{1.0, 1.0 / std::hypot(p.x, p.y), 1.0};
  };
  c.excluded_set = "axis r = 0";
  c.cleared = [m = kChartClearance](const Vec3& p) { return std::hypot(p.x, p.y) >= m; };
  return c;
}

inline Chart spherical_chart() {
  Chart c;
  c.name = "spherical";
  c.coord_names = {"R", "theta", "phi"};
  c.forward = [](const Vec3& p) {
    const double rr = std::hypot(p.x, p.y);
    return Vec3{norm(p), std::atan2(rr, p.z), std::atan2(p.y, p.x)};
  };
  c.inverse = [](const Vec3& q) {
    const double st = std::sin(q.y), ct = std::cos(q.y);
    return Vec3{q.x * st * std::cos(q.z), q.x * st * std::sin(q.z), q.x * ct};
  };
  c.coord_gradients = [](const Vec3& p) {
    const double R2 = norm2(p);
    const double R = std::sqrt(R2);
    const double rr2 = p.x * p.x + p.y * p.y;
    const double rr = std::sqrt(rr2);
    return std::array<Vec3, 3>{
        Vec3{p.x / R, p.y / R, p.z / R},
        Vec3{p.z * p.x / (R2 * rr), p.z * p.y / (R2 * rr), -rr / R2},
        Vec3{-p.y / rr2, p.x / rr2, 0}};
  };
  c.scale_factors = [](const Vec3& p) {
    const double R = norm(p);
    return Vec3{1.0, 1.0 / R, 1.0 / std::hypot(p.x, p.y)};
  };
  c.excluded_set = "origin and polar axis sin(theta) = 0";
  c.cleared = [m = kChartClearance](const Vec3& p) {
    const double R = norm(p);
    if (R < m) return false;
    const double theta = std::atan2(std::hypot(p.x, p.y), p.z);
    return theta >= m && theta <= 3.14159265358979323846 - m;
  };
  return c;
}

enum class ToroidalBranch { outer, inner };  // sign of r - 1

// Toroidal coordinates (tau, eta, phi) about the unit circle r = 1, z = 0:
// tau = sqrt((1-r)^2 + z^2), eta = z/(r-1). The sign of r - 1 selects the
// branch, so each branch is its own sub-chart with its own clearance.
inline Chart toroidal_chart(ToroidalBranch branch = ToroidalBranch::outer) {
  const double sgn = branch == ToroidalBranch::outer ? 1.0 : -1.0;
  Chart c;
  c.name = branch == ToroidalBranch::outer ? "toroidal-outer" : "toroidal-inner";
  c.coord_names = {"tau", "eta", "phi"};
  c.forward = [](const Vec3& p) {
    const double r = std::hypot(p.x, p.y);
    return Vec3{std::hypot(r - 1.0, p.z), p.z / (r - 1.0), std::atan2(p.y, p.x)};
  };
  c.inverse = [sgn](const Vec3& q) {
    const double s = std::sqrt(1.0 + q.y * q.y);
    const double r = 1.0 + sgn * q.x / s;
    return Vec3{r * std::cos(q.z), r * std::sin(q.z), sgn * q.x * q.y / s};
  };
  c.coord_gradients = [](const Vec3& p) {
    const double r = std::hypot(p.x, p.y);
    const double d = r - 1.0;
    const double tau = std::hypot(d, p.z);
    const Vec3 grad_r{p.x / r, p.y / r, 0};
    const Vec3 grad_tau = (d / tau) * grad_r + Vec3{0, 0, p.z / tau};
    const Vec3 grad_eta = Vec3{0, 0, 1.0 / d} - (p.z / (d * d)) * grad_r;
    return std::array<Vec3, 3>{grad_tau, grad_eta, Vec3{-p.y / (r * r), p.x / (r * r), 0}};
  };
  c.scale_factors = [sgn](const Vec3& p) {
    const double r = std::hypot(p.x, p.y);
    const double d = r - 1.0;
    const double tau = std::hypot(d, p.z);
    const double eta = p.z / d;
    const double s = std::sqrt(1.0 + eta * eta);
    return Vec3{1.0, (1.0 + eta * eta) / tau, 1.0 / (1.0 + sgn * tau / s)};
  };
  c.excluded_set = "torus core circle tau = 0, branch boundary r = 1, axis r = 0";
  c.cleared = [sgn, m = kChartClearance](const Vec3& p) {
    const double r = std::hypot(p.x, p.y);
    const double d = r - 1.0;
    if (sgn * d < m || r < m) return false;
    return std::hypot(d, p.z) >= m;
  };
  return c;
}

inline Chart chart_by_name(const std::string& name) {
  if (name == "cartesian") return cartesian_chart();
  if (name == "cylindrical") return cylindrical_chart();
  if (name == "spherical") return spherical_chart();
  if (name == "toroidal" || name == "toroidal-outer") return toroidal_chart(ToroidalBranch::outer);
  if (name == "toroidal-inner") return toroidal_chart(ToroidalBranch::inner);
  throw UnsupportedChart("unknown chart: " + name);
}

// Natural coordinates of p; throws if p is inside the excluded set.
inline Vec3 evaluate_chart(const Chart& chart, const Vec3& p) {
  if (!chart.cleared(p)) throw SingularPoint(chart.name + ": point violates clearance");
  return chart.forward(p);
}

// Closed-form scale factors of the natural coordinates at p.
inline Vec3 scale_factors_at(const Chart& chart, const Vec3& p) {
  if (!chart.cleared(p)) throw SingularPoint(chart.name + ": point violates clearance");
  return chart.scale_factors(p);
}

// The ordering role coordinates (zeta, beta, gamma) for natural coords q.
inline Vec3 apply_ordering(const Ordering& o, const Vec3& q) {
  return {q[o.idx[0]], q[o.idx[1]], q[o.idx[2]]};
}

inline Vec3 unapply_ordering(const Ordering& o, const Vec3& role) {
  Vec3 q;
  q[o.idx[0]] = role.x;
  q[o.idx[1]] = role.y;
  q[o.idx[2]] = role.z;
  return q;
}

struct HypothesisResult {
  bool passes = false;
  double max_violation = 0.0;
};

// Checks the four conditions d_beta(|grad zeta|/|grad beta|) =
// d_gamma(|grad zeta|/|grad beta|) = d_zeta|grad gamma| = d_beta|grad gamma| = 0
// by central differences in the chart's own coordinates over a sample box
// given in ordered (zeta, beta, gamma) coordinates. A violation is a result,
// not an error.
inline HypothesisResult check_theorem1_hypothesis(const Chart& chart, const Ordering& ordering,
                                                  const Box3& region, int n_samples,
                                                  double tol = 1e-8, double step = 1e-5) {
  auto ratio_and_gamma = [&](const Vec3& role) -> Vec2 {
    const Vec3 p = chart.inverse(unapply_ordering(ordering, role));
    const Vec3 s = chart.scale_factors(p);
    const Vec3 sr = apply_ordering(ordering, s);
    return {sr.x / sr.y, sr.z};
  };
  auto d_along = [&](const Vec3& role, int axis) -> Vec2 {
    Vec3 hi = role, lo = role;
    hi[axis] += step;
    lo[axis] -= step;
    const Vec2 f_hi = ratio_and_gamma(hi), f_lo = ratio_and_gamma(lo);
    return {(f_hi.u - f_lo.u) / (2 * step), (f_hi.v - f_lo.v) / (2 * step)};
  };

  HaltonSampler sampler;
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const Vec3 role = sampler.next_in(region);
    const Vec2 d_beta = d_along(role, 1);   // d/d beta of (ratio, |grad gamma|)
    const Vec2 d_gamma = d_along(role, 2);  // d/d gamma of (ratio, |grad gamma|)
    const Vec2 d_zeta = d_along(role, 0);   // d/d zeta of |grad gamma| only
    const double v = std::max({std::abs(d_beta.u), std::abs(d_gamma.u),
                               std::abs(d_zeta.v), std::abs(d_beta.v)});
    worst = std::max(worst, v);
  }
  return {worst < tol, worst};
}

// Reparametrization alpha(zeta) with d alpha/d zeta = |grad beta|/|grad zeta|.
struct AlphaReparam {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::string form;
};

inline std::vector<Ordering> catalog_orderings(const Chart& chart) {
  if (chart.name == "cartesian") {
    // even permutations keep the Jacobian positive
    return {{{0, 1, 2}, "x,y,z"}, {{1, 2, 0}, "y,z,x"}, {{2, 0, 1}, "z,x,y"}};
  }
  if (chart.name == "cylindrical") return {{{0, 1, 2}, "r,phi,z"}};
  if (chart.name == "spherical") return {{{1, 2, 0}, "theta,phi,R"}};
  return {};
}

// Closed-form alpha for the catalogued (chart, ordering) combinations; the
// integration constant is set to zero. Cartesian admits any ordering.
inline AlphaReparam alpha_reparam(const Chart& chart, const Ordering& ordering) {
  if (chart.name == "cartesian") {
    return {[](double z) { return z; }, [](double) { return 1.0; }, "alpha = zeta"};
  }
  if (chart.name == "cylindrical" && ordering.idx == std::array<int, 3>{0, 1, 2}) {
    return {[](double r) { return std::log(r); }, [](double r) { return 1.0 / r; },
            "alpha = log r"};
  }
  if (chart.name == "spherical" && ordering.idx == std::array<int, 3>{1, 2, 0}) {
    // integral of d theta / sin theta = log(sin theta / (1 + cos theta))
    return {[](double t) { return std::log(std::sin(t) / (1.0 + std::cos(t))); },
            [](double t) { return 1.0 / std::sin(t); }, "alpha = log(sin th/(1+cos th))"};
  }
  throw UnsupportedChart("no catalogued alpha for chart " + chart.name + " with ordering " +
                         ordering.label);
}

}  // namespace beltrami
