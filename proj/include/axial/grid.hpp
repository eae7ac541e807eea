#pragma once

// Symmetric axial grids, field containers and the weighted inner products.
//
// A field lives on a line r = λ n̂ through the origin. Nodes sit at
// λ = ±(j + 1/2) h so the origin is never sampled and every factor 1/λ,
// 1/sqrt|λ| is finite. Two sample representations are carried:
//
//   F  physical samples f(λ)
//   G  weighted samples g(λ) = sqrt|λ| f(λ)
//
// In G the operator pbar is a plain derivative and the 1/r inner product
// is a flat sum.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace axial {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

enum class Rep { F, G };

/// Line restrictions of the 3-D measures with the solid angle stripped:
/// Unit is r^2 dr (the usual product), InvR is r dr (the 1/r product).
enum class Weight { Unit, InvR };

/// Momentum-space line measures. K is k dk, the partner of InvR under the
/// analysis map; InvK is dk/k, the boost-invariant line measure.
enum class SpectralWeight { K, InvK };

class AxisGrid {
 public:
  static constexpr std::size_t kMinHalf = 8;

  AxisGrid(std::size_t n_half, double extent);

  std::size_t n_half() const noexcept { return n_half_; }
  std::size_t size() const noexcept { return 2 * n_half_; }
  double spacing() const noexcept { return h_; }
  double extent() const noexcept { return h_ * static_cast<double>(n_half_); }

  /// λ_i for i in [0, 2 n_half), strictly increasing.
  double node(std::size_t i) const noexcept {
    return (static_cast<double>(i) - static_cast<double>(n_half_) + 0.5) * h_;
  }
  /// Conjugate momentum κ_m, same half-offset pattern, Δκ = π / extent.
  double kappa(std::size_t m) const noexcept {
    return (static_cast<double>(m) - static_cast<double>(n_half_) + 0.5) * dkappa();
  }
  double dkappa() const noexcept;

  /// Half-line radius r_j = (j + 1/2) h and conjugate k_j.
  double radius(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * h_; }
  double half_kappa(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * dkappa(); }

  /// Index of the node at +r_j (resp. -r_j).
  std::size_t plus_index(std::size_t j) const noexcept { return n_half_ + j; }
  std::size_t minus_index(std::size_t j) const noexcept { return n_half_ - 1 - j; }
  std::size_t mirror(std::size_t i) const noexcept { return size() - 1 - i; }

  RealVector nodes() const;
  RealVector kappas() const;

  /// Index range [first, last) of nodes with |λ| < fraction * extent.
  std::pair<std::size_t, std::size_t> interior(double fraction) const;
  std::pair<std::size_t, std::size_t> kappa_interior(double fraction) const;

  friend bool operator==(const AxisGrid& a, const AxisGrid& b) noexcept {
    return a.n_half_ == b.n_half_ && a.h_ == b.h_;
  }

 private:
  std::size_t n_half_;
  double h_;
};

AxisGrid make_grid(std::size_t n_half, double extent);

class AxialField {
 public:
  AxialField(AxisGrid grid, Rep rep);
  AxialField(AxisGrid grid, Rep rep, ComplexVector values);

  const AxisGrid& grid() const noexcept { return grid_; }
  Rep rep() const noexcept { return rep_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t i) const noexcept { return values_[i]; }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }

 private:
  AxisGrid grid_;
  Rep rep_;
  ComplexVector values_;
};

/// Signed-κ momentum profile: κ > 0 is magnitude κ along +n̂, κ < 0 is
/// magnitude |κ| along -n̂.
class SpectralProfile {
 public:
  explicit SpectralProfile(AxisGrid grid);
  SpectralProfile(AxisGrid grid, ComplexVector values);

  const AxisGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  double kappa(std::size_t m) const noexcept { return grid_.kappa(m); }
  double dkappa() const noexcept { return grid_.dkappa(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t i) const noexcept { return values_[i]; }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }

 private:
  AxisGrid grid_;
  ComplexVector values_;
};

using FieldGenerator = std::function<Complex(double)>;

AxialField sample_field(const FieldGenerator& generator, const AxisGrid& grid, Rep rep);
SpectralProfile sample_profile(const FieldGenerator& generator, const AxisGrid& grid);

AxialField convert_rep(const AxialField& field, Rep target);

Complex inner_product(const AxialField& a, const AxialField& b, Weight weight);
double norm(const AxialField& f, Weight weight);
Complex spectral_inner_product(const SpectralProfile& a, const SpectralProfile& b,
                               SpectralWeight weight = SpectralWeight::InvK);

AxialField apply_parity(const AxialField& field);

/// Pointwise density w(λ)|f(λ)|^2; with InvR this is |g|^2.
RealVector line_density(const AxialField& field, Weight weight = Weight::InvR);

// Linear combinations. The right operand is converted to the left's rep.
AxialField operator+(const AxialField& a, const AxialField& b);
AxialField operator-(const AxialField& a, const AxialField& b);
AxialField operator*(Complex s, const AxialField& a);

/// max_i |a_i - b_i| / max_i |b_i| over the interior fraction of nodes
/// (both compared in G).
double interior_relative_error(const AxialField& actual, const AxialField& expected,
                               double fraction);
/// Plain 2-norm of G samples over the interior fraction, times sqrt(h).
double interior_norm(const AxialField& f, double fraction);

void require_same_grid(const AxisGrid& a, const AxisGrid& b);

}  // namespace axial
