#pragma once

// Time propagation on the axis: the first-order equation i∂_t ψ = pbar0 ψ,
// the second-order wave equation, the axial Weyl equation and the axial
// Maxwell system, plus the conserved density and current of the scalar
// equation.
//
// All spectral propagators work on G samples, where the symbol of pbar0 is
// |κ| and that of pbar is κ.

#include <optional>
#include <string>
#include <vector>

#include "axial/grid.hpp"

namespace axial {

enum class Method { Spectral, Rk4 };

/// Two-component field. On the axis σ·pbar is diagonal: the upper component
/// evolves with symbol +κ, the lower with -κ.
struct SpinorField {
  AxialField upper;
  AxialField lower;
};

/// Complex Maxwell field F = E + iB along the axis n̂ = ẑ.
struct VectorField3 {
  AxialField f1;
  AxialField f2;
  AxialField f3;
};

struct SnapshotDiagnostics {
  double time = 0.0;
  double norm = 0.0;  ///< 1/r norm, summed over components
  double min_density = 0.0;
  double max_density = 0.0;
  /// Relative discrete continuity residual; NaN where it is not defined
  /// (first and last snapshot, non-scalar fields).
  double continuity_residual = 0.0;
};

struct EvolutionResult {
  RealVector times;
  /// snapshots[t][c]: component c at times[t]. Scalar runs have one
  /// component, wave runs carry (ψ, ∂_t ψ), Weyl two, Maxwell three.
  std::vector<std::vector<AxialField>> snapshots;
  std::vector<SnapshotDiagnostics> diagnostics;
};

/// Largest stable RK4 step for pbar0 on this grid: the spectral radius of
/// the discrete pbar0 is π/h and classical RK4 is stable on the imaginary
/// axis up to 2√2, so Δt ≤ 2√2 h / π.
double rk4_step_bound(const AxisGrid& grid);

struct Rk4Options {
  /// Largest substep; 0 means h/4.
  double max_step = 0.0;
};

EvolutionResult propagate_scalar(const AxialField& psi0, const RealVector& times,
                                 Method method = Method::Spectral, Rk4Options rk4 = {});

EvolutionResult propagate_wave(const AxialField& psi0, const AxialField& dpsi0_dt,
                               const RealVector& times);

EvolutionResult propagate_weyl(const SpinorField& psi0, const RealVector& times);

/// Requires F³ = 0 (the axial form of pbar·F = 0).
EvolutionResult propagate_maxwell(const VectorField3& f0, const RealVector& times);

/// Weyl Hamiltonian σ³ pbar on the two components.
SpinorField weyl_hamiltonian(const SpinorField& psi);

struct DensityCurrent {
  RealVector rho;
  RealVector current;
};

/// Line density ρ = |g|² + |H+ g|² and axial current J = 2 Im(conj(Hg) g)
/// of a scalar G field, H the full-line Hilbert transform.
DensityCurrent density_current(const AxialField& psi);

/// Relative residual of ∂_t ρ + ∂_λ J at the middle of three equally spaced
/// snapshots, both derivatives by centered differences, over the interior
/// fraction of nodes: max|residual| / max|∂_t ρ|.
double continuity_residual(const AxialField& before, const AxialField& at, const AxialField& after,
                           double dt, double fraction = 0.8);

/// The indefinite density i(g* ∂_t g - ∂_t g* g) of the second-order equation.
RealVector sigma_density(const AxialField& psi, const AxialField& dpsi_dt);

/// Σ λ |g|² / Σ |g|² over all components.
double centroid(const std::vector<AxialField>& components);

/// Translate the G samples by `nodes` grid points (positive moves toward
/// +λ); vacated nodes are zero. Returned in the input rep.
AxialField shift_nodes(const AxialField& field, long nodes);

/// Uniformly spaced times 0, t_max/(count-1), ..., t_max.
RealVector uniform_times(double t_max, std::size_t count);

}  // namespace axial
