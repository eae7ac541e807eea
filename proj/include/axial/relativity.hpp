#pragma once

// Lorentz kinematics of null momenta and of beams (a direction plus a
// signed-κ profile along it).
//
// A boost with velocity v along unit axis b̂ acts on k = (k0, k) as
//   k'_par = γ(k_par - v k0),  k0' = γ(k0 - v k_par),  k'_perp = k_perp.
// Profiles transform as scalars: φ'(k') = φ(k).

#include <array>
#include <vector>

#include "axial/grid.hpp"

namespace axial {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double length(const Vec3& a);
Vec3 normalized(const Vec3& a);
Vec3 operator*(double s, const Vec3& a);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);

struct FourMomentum {
  double k0 = 0.0;
  Vec3 k{0.0, 0.0, 0.0};
};

/// (|k|, k); throws for a zero vector.
FourMomentum null_momentum(const Vec3& k);
/// |k0 - |k|| <= tol * k0.
bool is_null(const FourMomentum& k, double tol = 1e-12);

class BoostParams {
 public:
  /// Axis is normalized; throws for |v| >= 1, non-finite v or a zero axis.
  BoostParams(double v, const Vec3& axis);

  double v() const noexcept { return v_; }
  const Vec3& axis() const noexcept { return axis_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double v_;
  Vec3 axis_;
  double gamma_;
};

/// Boost of a null four-momentum; throws if the input is not null.
FourMomentum boost_four_momentum(const FourMomentum& k, const BoostParams& b);

/// Propagation direction after the boost: normalized spatial part of the
/// boosted (1, k̂).
Vec3 aberrate_direction(const Vec3& khat, const BoostParams& b);

/// Direction from which the light is seen, ô = -k̂, after the boost.
Vec3 observed_direction(const Vec3& ohat, const BoostParams& b);

/// cos θ' = (cos θ + v)/(1 + v cos θ), θ measured between the observation
/// direction and the boost axis.
double aberration_cos(double cos_theta, double v);

/// k'/k = γ(1 - v k̂·b̂).
double doppler_factor(const Vec3& khat, const BoostParams& b);

struct BeamState {
  Vec3 direction;
  SpectralProfile profile;
};

/// Boosted beam(s). The κ > 0 branch (momenta along +n̂) and the κ < 0 branch
/// (along -n̂) aberrate separately; when they stay on one axis the result is
/// a single beam, otherwise one beam per branch, each with its content on
/// κ' > 0. Profiles are resampled with cubic Lagrange interpolation; targets
/// outside the sampled source range are set to zero, with a warning when the
/// source does not vanish there.
std::vector<BeamState> boost_beam(const BeamState& beam, const BoostParams& b);

enum class DerivativeMethod { Spectral, FiniteDifference };

/// N_k φ = i |κ| dφ/dκ (the generator of boosts along the beam axis:
/// boost(δv) φ = (1 - iδv N_k) φ + O(δv²)). FiniteDifference is the
/// sixth-order central rule, zero beyond the grid.
SpectralProfile momentum_boost_generator(const SpectralProfile& profile,
                                         DerivativeMethod method = DerivativeMethod::Spectral);

}  // namespace axial
