#include "axial/spectral_map.hpp"

#include <cmath>

#include "axial/fourier.hpp"
#include "axial/transforms.hpp"

namespace axial {

namespace {

const Complex kI{0.0, 1.0};

}  // namespace

SpectralProfile analyze(const AxialField& psi) {
  const AxialField g = convert_rep(psi, Rep::G);
  const auto& grid = g.grid();
  const HalfLineFunction gp = plus_half(g);
  const HalfLineFunction gm = minus_half(g);
  const HalfLineFunction cp = trig_transform(gp, TrigKind::Cos, Direction::Forward);
  const HalfLineFunction sp = trig_transform(gp, TrigKind::Sin, Direction::Forward);
  const HalfLineFunction cm = trig_transform(gm, TrigKind::Cos, Direction::Forward);
  const HalfLineFunction sm = trig_transform(gm, TrigKind::Sin, Direction::Forward);

  SpectralProfile phi(grid);
  for (std::size_t m = 0; m < grid.n_half(); ++m) {
    const double scale = 0.5 / std::sqrt(grid.half_kappa(m));
    phi[grid.plus_index(m)] = scale * ((cp[m] - kI * sp[m]) + (cm[m] + kI * sm[m]));
    phi[grid.minus_index(m)] = scale * ((cm[m] - kI * sm[m]) + (cp[m] + kI * sp[m]));
  }
  return phi;
}

AxialField synthesize(const SpectralProfile& phi) {
  const auto& grid = phi.grid();
  HalfLineFunction ap(grid, Domain::Momentum);
  HalfLineFunction am(grid, Domain::Momentum);
  for (std::size_t m = 0; m < grid.n_half(); ++m) {
    const double w = std::sqrt(grid.half_kappa(m));
    ap[m] = w * phi[grid.plus_index(m)];
    am[m] = w * phi[grid.minus_index(m)];
  }
  const HalfLineFunction cp = trig_transform(ap, TrigKind::Cos, Direction::Inverse);
  const HalfLineFunction sp = trig_transform(ap, TrigKind::Sin, Direction::Inverse);
  const HalfLineFunction cm = trig_transform(am, TrigKind::Cos, Direction::Inverse);
  const HalfLineFunction sm = trig_transform(am, TrigKind::Sin, Direction::Inverse);

  AxialField g(grid, Rep::G);
  for (std::size_t j = 0; j < grid.n_half(); ++j) {
    g[grid.plus_index(j)] = 0.5 * ((cp[j] + kI * sp[j]) + (cm[j] - kI * sm[j]));
    g[grid.minus_index(j)] = 0.5 * ((cm[j] + kI * sm[j]) + (cp[j] - kI * sp[j]));
  }
  return convert_rep(g, Rep::F);
}

SpectralProfile analyze_fast(const AxialField& psi) {
  const AxialField g = convert_rep(psi, Rep::G);
  const auto& grid = g.grid();
  ComplexVector spec = fourier::forward(g.values(), grid);
  for (std::size_t m = 0; m < spec.size(); ++m) spec[m] /= std::sqrt(std::abs(grid.kappa(m)));
  return SpectralProfile(grid, std::move(spec));
}

AxialField synthesize_fast(const SpectralProfile& phi) {
  const auto& grid = phi.grid();
  ComplexVector spec(phi.values().begin(), phi.values().end());
  for (std::size_t m = 0; m < spec.size(); ++m) spec[m] *= std::sqrt(std::abs(grid.kappa(m)));
  return AxialField(grid, Rep::G, fourier::inverse(spec, grid));
}

AxialField apply_spectral_multiplier(const AxialField& psi,
                                     const std::function<Complex(double)>& multiplier) {
  const AxialField g = convert_rep(psi, Rep::G);
  AxialField out(g.grid(), Rep::G, fourier::apply_symbol(g.values(), g.grid(), multiplier));
  return convert_rep(out, psi.rep());
}

}  // namespace axial
