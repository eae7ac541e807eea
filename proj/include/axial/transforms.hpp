#pragma once

// Half-line Fourier cosine/sine transforms and the Hilbert transforms of
// even, odd and parity-mixed functions.
//
// On the half-offset grids the cosine kernel cos(k_m r_j) is the DCT-IV
// matrix, which is orthogonal, so the discrete pairs invert exactly.
//
// Hilbert transforms have two backends. SPECTRAL composes the trig pairs
// (He = -Fs~ Fc, Ho = Fc~ Fs). QUADRATURE evaluates the principal value
// integral directly with the alternate-point rule on the full line, with
// the singular value subtracted. Either serves as the other's oracle.

#include <cstddef>

#include "axial/grid.hpp"

namespace axial {

enum class Domain { Radius, Momentum };
enum class TrigKind { Cos, Sin };
enum class Direction { Forward, Inverse };
enum class HilbertBackend { Spectral, Quadrature };
enum class Sign { Plus, Minus };

/// Samples on the positive half of an AxisGrid: r_j = (j + 1/2) h, or on
/// the positive half of its conjugate grid, k_j = (j + 1/2) Δκ.
class HalfLineFunction {
 public:
  HalfLineFunction(AxisGrid grid, Domain domain);
  HalfLineFunction(AxisGrid grid, Domain domain, ComplexVector values);

  const AxisGrid& grid() const noexcept { return grid_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return values_.size(); }
  double coordinate(std::size_t j) const noexcept {
    return domain_ == Domain::Radius ? grid_.radius(j) : grid_.half_kappa(j);
  }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t j) const noexcept { return values_[j]; }
  Complex& operator[](std::size_t j) noexcept { return values_[j]; }

 private:
  AxisGrid grid_;
  Domain domain_;
  ComplexVector values_;
};

HalfLineFunction sample_half_line(const FieldGenerator& generator, const AxisGrid& grid,
                                  Domain domain = Domain::Radius);

/// The two halves of an axial field as half-line functions:
/// plus(r) = f(+r), minus(r) = f(-r).
HalfLineFunction plus_half(const AxialField& field);
HalfLineFunction minus_half(const AxialField& field);

/// FORWARD maps radius samples to momentum samples:
///   Fc f(k) = sqrt(2/π) Σ_j f(r_j) cos(k r_j) h.
/// INVERSE is the same kernel from momentum to radius with weight Δκ.
/// The direction must match the input domain.
HalfLineFunction trig_transform(const HalfLineFunction& f, TrigKind kind, Direction direction);

struct HilbertOptions {
  HilbertBackend backend = HilbertBackend::Spectral;
  /// Warn when max|f| over the outer 5% of nodes exceeds this fraction of max|f|.
  double edge_threshold = 1e-3;
};

/// He f(r) = -(2r/π) p.v.∫ f(t)/(r² - t²) dt.
HalfLineFunction hilbert_even(const HalfLineFunction& f, const HilbertOptions& options = {});
/// Ho f(r) = -(2/π) p.v.∫ t f(t)/(r² - t²) dt.
HalfLineFunction hilbert_odd(const HalfLineFunction& f, const HilbertOptions& options = {});

/// Per-node quadrature error estimate |Q_h - Q_2h| plus a rounding bound,
/// where Q_2h is the same rule on every other node.
RealVector hilbert_error_estimate(const HalfLineFunction& f, bool even);

struct HilbertCrossCheck {
  double max_difference = 0.0;  ///< max |spectral - quadrature| over the interior
  double max_estimate = 0.0;    ///< max quadrature error estimate over the interior
  bool agree = false;           ///< max_difference <= 2 * max_estimate
};

/// Compares the two backends on the interior fraction of the half-line and
/// warns when they disagree by more than twice the error estimate.
HilbertCrossCheck cross_check_hilbert(const HalfLineFunction& f, bool even,
                                      double fraction = 0.8);

/// H+ = ½[(He + Ho) + (He - Ho)P] and H- = ½[(He + Ho) - (He - Ho)P],
/// applied on each side of the origin in that side's own orientation.
/// Acts on raw samples; the rep is passed through.
AxialField hilbert_signed(const AxialField& f, Sign sign, const HilbertOptions& options = {});

/// Full-line Hilbert transform (1/π) p.v.∫ f(t)/(λ - t) dt of raw samples.
ComplexVector hilbert_line(std::span<const Complex> values, const AxisGrid& grid,
                           HilbertBackend backend = HilbertBackend::Spectral);

/// Warns if |values| on the outer 5% of nodes exceeds threshold * max|values|.
/// Returns true when the samples decay.
bool check_edge_decay(std::span<const Complex> values, double threshold, const char* what);

}  // namespace axial
