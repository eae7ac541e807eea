#pragma once

// Test fields: Gaussian band-pass packets, random probe suites and tapered
// plane waves standing in for the delta-normalized eigenfunctions.

#include <cstdint>
#include <vector>

#include "axial/grid.hpp"

namespace axial {

struct PacketSpec {
  double center = 0.0;
  double width = 1.0;  ///< Gaussian σ
  double k0 = 4.0;     ///< carrier; its sign sets the travel direction
  Complex amplitude{1.0, 0.0};
};

/// g(λ) = A exp(-(λ - c)²/(2σ²)) exp(i k0 λ), returned in `rep`
/// (the G samples are the Gaussian; F samples are g / sqrt|λ|).
AxialField gaussian_packet(const AxisGrid& grid, const PacketSpec& spec, Rep rep = Rep::G);

struct ProbeSuiteSpec {
  std::size_t count = 12;
  std::uint64_t seed = 1;
  double min_k = 3.0;
  double max_k = 6.0;
  /// Smallest |k0| σ; keeps the spectrum near κ = 0 negligible so Hilbert
  /// transforms of the probes decay.
  double min_k_width = 6.0;
  /// Centers lie in [-spread, spread] * extent.
  double spread = 0.15;
  /// Probes mix both carrier signs unless single_sided is set.
  bool single_sided = false;
  /// When positive, every packet satisfies |center| >= clearance * σ, so the
  /// probe vanishes to rounding near the origin. Needed where an operator
  /// such as 1/|λ| or sgn(λ) would otherwise manufacture a singularity.
  double origin_clearance = 0.0;
};

/// Deterministic random suite: each probe is a sum of two packets with
/// random centers, widths, carriers and complex amplitudes.
std::vector<AxialField> probe_suite(const AxisGrid& grid, const ProbeSuiteSpec& spec);

struct CompactSpec {
  double center = 0.0;
  double half_width = 4.0;
  double k0 = 6.0;
  int power = 4;  ///< cos^power envelope; power 4 is C³ at the support edge
  Complex amplitude{1.0, 0.0};
};

/// G samples A cos^p(π(λ - c)/(2a)) exp(i k0 λ) on |λ - c| < a, zero outside.
/// Finite smoothness makes spectral discretization errors visible, which
/// refinement studies need.
AxialField compact_packet(const AxisGrid& grid, const CompactSpec& spec, Rep rep = Rep::G);

struct CompactSuiteSpec {
  std::size_t count = 10;
  std::uint64_t seed = 1;
  double min_k = 6.0;
  double max_k = 9.0;
  double min_half_width = 4.0;
  double max_half_width = 6.0;
  /// Centers lie in [-spread, spread] * extent, shifted outward by
  /// half_width + clearance when clearance >= 0.
  double spread = 0.1;
  double clearance = -1.0;
};

std::vector<AxialField> compact_suite(const AxisGrid& grid, const CompactSuiteSpec& spec);

/// Raised-cosine window: 1 on |λ - c| ≤ width/2 - ramp, cosine roll-off to 0
/// at |λ - c| = width/2.
double cosine_taper(double lambda, double width, double ramp, double center = 0.0);

struct WindowSpec {
  double width = 0.0;  ///< 0 means extent/4
  double ramp = 0.0;   ///< 0 means 3/8 of the width
  double center = 0.0;
};

/// G samples taper(λ) exp(i k λ); the smeared stand-in for w_k.
AxialField windowed_plane_wave(const AxisGrid& grid, double k, const WindowSpec& window = {},
                               Rep rep = Rep::G);

/// Resolved window with defaults filled in.
WindowSpec resolve_window(const AxisGrid& grid, const WindowSpec& window);

/// Index range of nodes on the flat top of the window.
std::pair<std::size_t, std::size_t> window_plateau(const AxisGrid& grid, const WindowSpec& window);

}  // namespace axial
