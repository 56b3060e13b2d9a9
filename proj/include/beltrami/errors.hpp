#pragma once

#include <stdexcept>
#include <string>

namespace beltrami {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point lies inside a chart's excluded set (axis, torus core circle, ...).
struct SingularPoint : Error { using Error::Error; };

// No closed-form alpha reparametrization is catalogued for this (chart, ordering).
struct UnsupportedChart : Error { using Error::Error; };

// Chart ordering violates the scale-factor hypothesis required by the construction.
struct HypothesisViolated : Error { using Error::Error; };

// Supplied coordinates fail the |grad l| = |grad psi| (= |alpha|^(1-2k)) requirement.
struct ScaleFactorMismatch : Error { using Error::Error; };

// Radicand of the lambda closed form goes negative on the requested domain.
struct NegativeRadicand : Error { using Error::Error; };

// Supplied coordinate triple is not orthogonal within tolerance.
struct NonOrthogonal : Error { using Error::Error; };

// Pressure gradient vanishes where the construction requires grad P != 0.
struct ZeroPressureGradient : Error { using Error::Error; };

// Bernoulli constant fails c - P >= margin somewhere on the domain.
struct ConstantViolation : Error { using Error::Error; };

// |grad P| fell under the floor along a characteristic trace.
struct CriticalPoint : Error { using Error::Error; };

// A characteristic left the tracing box before reaching the seed curve.
struct EscapedDomain : Error { using Error::Error; };

// A finite-difference stencil point violates the clearance predicate.
struct StencilEscape : Error { using Error::Error; };

// |w|^2 under the floor where a normalized quantity is requested.
struct DegenerateField : Error { using Error::Error; };

// grad(chi) x grad(pi) under the floor.
struct DegeneratePair : Error { using Error::Error; };

// Requested sampling bounds leave the recipe's cleared domain.
struct BoundsOutsideDomain : Error { using Error::Error; };

// Closed-form surface parametrization left the chart's cleared region.
struct ParamOutOfRange : Error { using Error::Error; };

}  // namespace beltrami
