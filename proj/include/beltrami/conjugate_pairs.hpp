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

// A harmonic-conjugate pair (l, psi) on the reduced (alpha, beta) plane,
// stored as closed forms with hand-written exact partial derivatives so the
// Cauchy-Riemann structure can be checked both analytically and by finite
// differences (the analytic path is the oracle for the numeric path).
//
// orientation = sign of det d(l,psi)/d(alpha,beta). For orientation +1 the
// pair satisfies l_a = psi_b, l_b = -psi_a; for -1 the relations flip sign.
// Either orientation yields equal gradient magnitudes, which is what the 3D
// construction needs; the orientation only decides the sign of the
// proportionality factor of the resulting field.
struct ConjugatePair {
  std::string name;
  std::function<double(double, double)> ell, psi;
  // exact partials (d/d alpha, d/d beta)
  std::function<std::array<double, 2>(double, double)> ell_grad, psi_grad;
  std::function<bool(double, double)> cleared;
  int orientation = +1;
  std::string excluded_set = "none";
};

// Clearance margin around pair singularities on the (alpha, beta) plane.
inline constexpr double kPairClearance = 1e-2;

inline ConjugatePair linear_pair() {
  ConjugatePair p;
  p.name = "linear";
  p.ell = [](double a, double) { return a; };
  p.psi = [](double, double b) { return b; };
  p.ell_grad = [](double, double) { return std::array<double, 2>{1.0, 0.0}; };
  p.psi_grad = [](double, double) { return std::array<double, 2>{0.0, 1.0}; };
  p.cleared = [](double, double) { return true; };
  return p;
}

inline ConjugatePair exponential_pair() {
  ConjugatePair p;
  p.name = "exponential";
  p.ell = [](double a, double b) { return -std::exp(a) * std::sin(b); };
  p.psi = [](double a, double b) { return std::exp(a) * std::cos(b); };
  p.ell_grad = [](double a, double b) {
    const double e = std::exp(a);
    return std::array<double, 2>{-e * std::sin(b), -e * std::cos(b)};
  };
  p.psi_grad = [](double a, double b) {
    const double e = std::exp(a);
    return std::array<double, 2>{e * std::cos(b), -e * std::sin(b)};
  };
  p.cleared = [](double, double) { return true; };
  return p;
}

inline ConjugatePair trig_hyperbolic_pair() {
  ConjugatePair p;
  p.name = "trig-hyperbolic";
  p.ell = [](double a, double b) { return std::sinh(b) * std::sin(a); };
  p.psi = [](double a, double b) { return std::cosh(b) * std::cos(a); };
  p.ell_grad = [](double a, double b) {
    return std::array<double, 2>{std::sinh(b) * std::cos(a), std::cosh(b) * std::sin(a)};
  };
  p.psi_grad = [](double a, double b) {
    return std::array<double, 2>{-std::cosh(b) * std::sin(a), std::sinh(b) * std::cos(a)};
  };
  // gradient magnitude sinh^2(b) + sin^2(a) vanishes at b = 0, a = k*pi
  p.cleared = [](double a, double b) {
    const double s = std::sin(a);
    return std::sinh(b) * std::sinh(b) + s * s >= kPairClearance * kPairClearance;
  };
  p.excluded_set = "gradient zeros at beta = 0, alpha = k*pi";
  return p;
}

inline ConjugatePair poisson_kernel_pair() {
  ConjugatePair p;
  p.name = "poisson-kernel";
  auto den = [](double a, double b) { return std::cosh(a) - std::cos(b); };
  p.ell = [den](double a, double b) { return std::sin(b) / den(a, b); };
  p.psi = [den](double a, double b) { return std::sinh(a) / den(a, b); };
  p.ell_grad = [den](double a, double b) {
    const double d = den(a, b);
    return std::array<double, 2>{-std::sin(b) * std::sinh(a) / (d * d),
                                 (std::cos(b) * std::cosh(a) - 1.0) / (d * d)};
  };
  p.psi_grad = [den](double a, double b) {
    const double d = den(a, b);
    return std::array<double, 2>{(1.0 - std::cosh(a) * std::cos(b)) / (d * d),
                                 -std::sinh(a) * std::sin(b) / (d * d)};
  };
  // singular where cosh(alpha) = cos(beta), i.e. alpha = 0, beta = 2*k*pi
  p.cleared = [](double a, double b) {
    const double bw = principal_angle(b);
    return a * a + bw * bw >= kPairClearance * kPairClearance;
  };
  p.excluded_set = "cosh(alpha) - cos(beta) = 0";
  return p;
}

// The beta-major linear pair used by the spherical shell flow of the figure
// catalog. Anti-oriented: the resulting proportionality factor flips sign.
inline ConjugatePair swapped_linear_pair() {
  ConjugatePair p;
  p.name = "linear-swapped";
  p.ell = [](double, double b) { return b; };
  p.psi = [](double a, double) { return a; };
  p.ell_grad = [](double, double) { return std::array<double, 2>{0.0, 1.0}; };
  p.psi_grad = [](double, double) { return std::array<double, 2>{1.0, 0.0}; };
  p.cleared = [](double, double) { return true; };
  p.orientation = -1;
  return p;
}

inline std::vector<ConjugatePair> pair_catalog() {
  return {linear_pair(), exponential_pair(), trig_hyperbolic_pair(), poisson_kernel_pair()};
}

inline ConjugatePair pair_by_name(const std::string& name) {
  if (name == "linear") return linear_pair();
  if (name == "exponential") return exponential_pair();
  if (name == "trig-hyperbolic") return trig_hyperbolic_pair();
  if (name == "poisson-kernel") return poisson_kernel_pair();
  if (name == "linear-swapped") return swapped_linear_pair();
  throw Error("unknown conjugate pair: " + name);
}

// Residual of the Cauchy-Riemann relations from the exact partials:
// |l_a - o*psi_b| + |l_b + o*psi_a| with o the pair orientation.
inline double cauchy_riemann_residual_exact(const ConjugatePair& p, double a, double b) {
  const auto lg = p.ell_grad(a, b);
  const auto pg = p.psi_grad(a, b);
  const double o = p.orientation;
  return std::abs(lg[0] - o * pg[1]) + std::abs(lg[1] + o * pg[0]);
}

// Same residual with central differences of the closed forms at step h;
// truncation O(h^2). Maximum over n low-discrepancy samples in the region.
inline double verify_cauchy_riemann(const ConjugatePair& p, const Box2& region, double h, int n) {
  HaltonSampler sampler;
  double worst = 0.0;
  int taken = 0;
  while (taken < n) {
    const Vec2 q = sampler.next_in(region);
    if (!p.cleared(q.u, q.v)) continue;
    ++taken;
    const double la = (p.ell(q.u + h, q.v) - p.ell(q.u - h, q.v)) / (2 * h);
    const double lb = (p.ell(q.u, q.v + h) - p.ell(q.u, q.v - h)) / (2 * h);
    const double pa = (p.psi(q.u + h, q.v) - p.psi(q.u - h, q.v)) / (2 * h);
    const double pb = (p.psi(q.u, q.v + h) - p.psi(q.u, q.v - h)) / (2 * h);
    const double o = p.orientation;
    worst = std::max(worst, std::abs(la - o * pb) + std::abs(lb + o * pa));
  }
  return worst;
}

}  // namespace beltrami
