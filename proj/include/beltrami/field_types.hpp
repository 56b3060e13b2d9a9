#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beltrami/chart.hpp"
#include "beltrami/geometry.hpp"
#include "beltrami/sampling.hpp"

namespace beltrami {

// Scalar function of position with hand-written exact gradient.
struct ScalarField {
  std::string name;
  std::function<double(const Vec3&)> value;
  std::function<Vec3(const Vec3&)> grad;
};

// Profile function sigma of one variable with its derivative.
struct Sigma {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::string label;
};

inline Sigma sigma_identity() {
  return {[](double t) { return t; }, [](double) { return 1.0; }, "sigma(t)=t"};
}

inline Sigma sigma_constant(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, "sigma(t)=const"};
}

// Named scalar invariant claimed conserved by a flow. Invariants built from a
// bare azimuth angle are multivalued across the atan2 branch cut; those take
// the continued (unwrapped) azimuth supplied by the caller instead of
// recomputing atan2, so drift measured along a trace is branch-free.
struct Invariant {
  std::string name;
  std::function<double(const Vec3&, double)> eval;  // (point, unwrapped azimuth)
  bool needs_unwrapped_azimuth = false;

  double eval_at(const Vec3& p) const { return eval(p, azimuth(p)); }
};

// Sampling box (in the chart's natural coordinates) plus the clearance
// predicate of the validity region. The box is strictly inside the region;
// stencils and traces gate on the predicate, samplers draw from the box.
struct Domain {
  Chart chart;
  Box3 box;
  std::function<bool(const Vec3&)> cleared;  // on Cartesian points
};

inline std::vector<Vec3> sample_points(const Domain& d, int n, std::uint64_t seed = 0) {
  HaltonSampler sampler(seed);
  std::vector<Vec3> pts;
  pts.reserve(n);
  int guard = 0;
  while (static_cast<int>(pts.size()) < n && guard < 100 * n + 1000) {
    ++guard;
    const Vec3 p = d.chart.inverse(sampler.next_in(d.box));
    if (d.cleared(p)) pts.push_back(p);
  }
  return pts;
}

// A pure evaluator mapping Cartesian points to field vectors, with an
// optional analytic-divergence companion and the invariants claimed for the
// generated flow. Evaluation is pure and concurrently safe.
struct VectorFieldEval {
  std::function<Vec3(const Vec3&)> eval;
  std::function<double(const Vec3&)> analytic_div;  // null when none is known
  std::vector<Invariant> invariants;
  Domain domain;
};

}  // namespace beltrami
