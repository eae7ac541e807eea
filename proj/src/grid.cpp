#include "axial/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace axial {

AxisGrid::AxisGrid(std::size_t n_half, double extent) : n_half_(n_half), h_(0.0) {
  if (n_half < kMinHalf) {
    throw std::invalid_argument("grid too coarse: n_half = " + std::to_string(n_half) +
                                " < " + std::to_string(kMinHalf));
  }
  if (!std::isfinite(extent) || extent <= 0.0) {
    throw std::invalid_argument("grid extent must be finite and positive");
  }
  h_ = extent / static_cast<double>(n_half);
}

double AxisGrid::dkappa() const noexcept {
  return std::numbers::pi / extent();
}

RealVector AxisGrid::nodes() const {
  RealVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = node(i);
  return out;
}

RealVector AxisGrid::kappas() const {
  RealVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = kappa(i);
  return out;
}

std::pair<std::size_t, std::size_t> AxisGrid::interior(double fraction) const {
  const double cut = fraction * extent();
  std::size_t first = 0;
  while (first < size() && std::abs(node(first)) >= cut) ++first;
  return {first, size() - first};
}

std::pair<std::size_t, std::size_t> AxisGrid::kappa_interior(double fraction) const {
  const double cut = fraction * static_cast<double>(n_half_) * dkappa();
  std::size_t first = 0;
  while (first < size() && std::abs(kappa(first)) >= cut) ++first;
  return {first, size() - first};
}

AxisGrid make_grid(std::size_t n_half, double extent) {
  return AxisGrid(n_half, extent);
}

void require_same_grid(const AxisGrid& a, const AxisGrid& b) {
  if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

AxialField::AxialField(AxisGrid grid, Rep rep)
    : grid_(grid), rep_(rep), values_(grid.size(), Complex{}) {}

AxialField::AxialField(AxisGrid grid, Rep rep, ComplexVector values)
    : grid_(grid), rep_(rep), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("field length " + std::to_string(values_.size()) +
                                " does not match node count " + std::to_string(grid_.size()));
  }
}

SpectralProfile::SpectralProfile(AxisGrid grid) : grid_(grid), values_(grid.size(), Complex{}) {}

SpectralProfile::SpectralProfile(AxisGrid grid, ComplexVector values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("profile length does not match kappa node count");
  }
}

AxialField sample_field(const FieldGenerator& generator, const AxisGrid& grid, Rep rep) {
  AxialField out(grid, rep);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Complex v = generator(grid.node(i));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("generator is not finite at node " + std::to_string(i));
    }
    out[i] = v;
  }
  return out;
}

SpectralProfile sample_profile(const FieldGenerator& generator, const AxisGrid& grid) {
  SpectralProfile out(grid);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    const Complex v = generator(grid.kappa(m));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("generator is not finite at kappa node " + std::to_string(m));
    }
    out[m] = v;
  }
  return out;
}

AxialField convert_rep(const AxialField& field, Rep target) {
  if (field.rep() == target) return field;
  AxialField out(field.grid(), target);
  const auto& grid = field.grid();
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double w = std::sqrt(std::abs(grid.node(i)));
    out[i] = target == Rep::G ? field[i] * w : field[i] / w;
  }
  return out;
}

namespace {

double weight_at(double lambda, Weight weight) {
  return weight == Weight::Unit ? lambda * lambda : std::abs(lambda);
}

}  // namespace

Complex inner_product(const AxialField& a, const AxialField& b, Weight weight) {
  require_same_grid(a.grid(), b.grid());
  const AxialField fa = convert_rep(a, Rep::F);
  const AxialField fb = convert_rep(b, Rep::F);
  const auto& grid = a.grid();
  Complex sum{};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sum += weight_at(grid.node(i), weight) * std::conj(fa[i]) * fb[i];
  }
  return sum * grid.spacing();
}

double norm(const AxialField& f, Weight weight) {
  return std::sqrt(std::max(0.0, inner_product(f, f, weight).real()));
}

Complex spectral_inner_product(const SpectralProfile& a, const SpectralProfile& b,
                               SpectralWeight weight) {
  require_same_grid(a.grid(), b.grid());
  Complex sum{};
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double k = std::abs(a.kappa(m));
    const double w = weight == SpectralWeight::K ? k : 1.0 / k;
    sum += w * std::conj(a[m]) * b[m];
  }
  return sum * a.dkappa();
}

AxialField apply_parity(const AxialField& field) {
  AxialField out(field.grid(), field.rep());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = field[field.grid().mirror(i)];
  return out;
}

RealVector line_density(const AxialField& field, Weight weight) {
  const AxialField f = convert_rep(field, Rep::F);
  RealVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = weight_at(f.grid().node(i), weight) * std::norm(f[i]);
  }
  return out;
}

AxialField operator+(const AxialField& a, const AxialField& b) {
  require_same_grid(a.grid(), b.grid());
  const AxialField bb = convert_rep(b, a.rep());
  AxialField out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bb[i];
  return out;
}

AxialField operator-(const AxialField& a, const AxialField& b) {
  require_same_grid(a.grid(), b.grid());
  const AxialField bb = convert_rep(b, a.rep());
  AxialField out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= bb[i];
  return out;
}

AxialField operator*(Complex s, const AxialField& a) {
  AxialField out = a;
  for (auto& v : out.values()) v *= s;
  return out;
}

double interior_relative_error(const AxialField& actual, const AxialField& expected,
                               double fraction) {
  require_same_grid(actual.grid(), expected.grid());
  const AxialField a = convert_rep(actual, Rep::G);
  const AxialField e = convert_rep(expected, Rep::G);
  const auto [first, last] = a.grid().interior(fraction);
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    diff = std::max(diff, std::abs(a[i] - e[i]));
    scale = std::max(scale, std::abs(e[i]));
  }
  if (scale == 0.0) return diff;
  return diff / scale;
}

double interior_norm(const AxialField& f, double fraction) {
  const AxialField g = convert_rep(f, Rep::G);
  const auto [first, last] = g.grid().interior(fraction);
  double sum = 0.0;
  for (std::size_t i = first; i < last; ++i) sum += std::norm(g[i]);
  return std::sqrt(sum * g.grid().spacing());
}

}  // namespace axial
