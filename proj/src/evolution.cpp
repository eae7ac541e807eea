#include "axial/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "axial/fourier.hpp"
#include "axial/operators.hpp"

namespace axial {

namespace {

const Complex kI{0.0, 1.0};
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_times(const RealVector& times) {
  if (times.empty()) throw std::invalid_argument("time grid is empty");
  if (!(times.front() >= 0.0)) throw std::invalid_argument("time grid must start at t >= 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("time grid is not increasing");
  }
}

ComplexVector spectrum_of(const AxialField& f) {
  const AxialField g = convert_rep(f, Rep::G);
  return fourier::forward(g.values(), g.grid());
}

AxialField field_from_spectrum(const ComplexVector& spec, const AxisGrid& grid, Rep rep) {
  return convert_rep(AxialField(grid, Rep::G, fourier::inverse(spec, grid)), rep);
}

// Evolves the spectrum with a per-mode phase symbol(κ) t.
AxialField evolve_phase(const ComplexVector& spec0, const AxisGrid& grid, Rep rep, double t,
                        double sign_of_symbol(double)) {
  ComplexVector spec = spec0;
  for (std::size_t m = 0; m < spec.size(); ++m) {
    spec[m] *= std::polar(1.0, -sign_of_symbol(grid.kappa(m)) * t);
  }
  return field_from_spectrum(spec, grid, rep);
}

double abs_symbol(double k) { return std::abs(k); }
double plus_symbol(double k) { return k; }
double minus_symbol(double k) { return -k; }

double total_norm(const std::vector<AxialField>& components) {
  double s = 0.0;
  for (const auto& c : components) {
    const double n = norm(c, Weight::InvR);
    s += n * n;
  }
  return std::sqrt(s);
}

void summed_density(const std::vector<AxialField>& components, SnapshotDiagnostics& d) {
  RealVector rho(components.front().size(), 0.0);
  for (const auto& c : components) {
    const RealVector r = line_density(c, Weight::InvR);
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += r[i];
  }
  d.min_density = *std::min_element(rho.begin(), rho.end());
  d.max_density = *std::max_element(rho.begin(), rho.end());
}

EvolutionResult with_plain_diagnostics(EvolutionResult result) {
  for (std::size_t t = 0; t < result.times.size(); ++t) {
    SnapshotDiagnostics d;
    d.time = result.times[t];
    d.norm = total_norm(result.snapshots[t]);
    summed_density(result.snapshots[t], d);
    d.continuity_residual = kNaN;
    result.diagnostics.push_back(d);
  }
  return result;
}

}  // namespace

double rk4_step_bound(const AxisGrid& grid) {
  return 2.0 * std::numbers::sqrt2 * grid.spacing() / std::numbers::pi;
}

EvolutionResult propagate_scalar(const AxialField& psi0, const RealVector& times, Method method,
                                 Rk4Options rk4) {
  validate_times(times);
  const auto& grid = psi0.grid();
  EvolutionResult result;
  result.times = times;

  if (method == Method::Spectral) {
    const ComplexVector spec0 = spectrum_of(psi0);
    for (double t : times) {
      result.snapshots.push_back({evolve_phase(spec0, grid, psi0.rep(), t, abs_symbol)});
    }
  } else {
    const double max_step = rk4.max_step > 0.0 ? rk4.max_step : 0.25 * grid.spacing();
    const double bound = rk4_step_bound(grid);
    if (max_step > bound) {
      std::ostringstream msg;
      msg << "RK4 step " << max_step << " violates the stability bound 2*sqrt(2)*h/pi = " << bound;
      throw std::invalid_argument(msg.str());
    }
    const LinearOperator h = pbar0(Pbar0Form::Left);
    auto rhs = [&h](const AxialField& g) { return Complex(0.0, -1.0) * h(g); };
    AxialField g = convert_rep(psi0, Rep::G);
    double now = 0.0;
    for (double target : times) {
      const double span = target - now;
      if (span > 0.0) {
        const auto steps = static_cast<std::size_t>(std::ceil(span / max_step - 1e-12));
        const double dt = span / static_cast<double>(steps);
        for (std::size_t s = 0; s < steps; ++s) {
          const AxialField k1 = rhs(g);
          const AxialField k2 = rhs(g + Complex(0.5 * dt) * k1);
          const AxialField k3 = rhs(g + Complex(0.5 * dt) * k2);
          const AxialField k4 = rhs(g + Complex(dt) * k3);
          g = g + Complex(dt / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
        }
      }
      now = target;
      result.snapshots.push_back({convert_rep(g, psi0.rep())});
    }
  }

  for (std::size_t t = 0; t < times.size(); ++t) {
    SnapshotDiagnostics d;
    d.time = times[t];
    d.norm = norm(result.snapshots[t][0], Weight::InvR);
    const DensityCurrent dc = density_current(result.snapshots[t][0]);
    d.min_density = *std::min_element(dc.rho.begin(), dc.rho.end());
    d.max_density = *std::max_element(dc.rho.begin(), dc.rho.end());
    d.continuity_residual = kNaN;
    if (t > 0 && t + 1 < times.size()) {
      const double dt = 0.5 * (times[t + 1] - times[t - 1]);
      d.continuity_residual = continuity_residual(result.snapshots[t - 1][0], result.snapshots[t][0],
                                                  result.snapshots[t + 1][0], dt);
    }
    result.diagnostics.push_back(d);
  }
  return result;
}

EvolutionResult propagate_wave(const AxialField& psi0, const AxialField& dpsi0_dt,
                               const RealVector& times) {
  validate_times(times);
  require_same_grid(psi0.grid(), dpsi0_dt.grid());
  const auto& grid = psi0.grid();
  const ComplexVector a = spectrum_of(psi0);
  const ComplexVector b = spectrum_of(dpsi0_dt);
  EvolutionResult result;
  result.times = times;
  for (double t : times) {
    ComplexVector x(a.size());
    ComplexVector v(a.size());
    for (std::size_t m = 0; m < a.size(); ++m) {
      const double k = std::abs(grid.kappa(m));
      const double c = std::cos(k * t);
      const double s = std::sin(k * t);
      x[m] = c * a[m] + (s / k) * b[m];
      v[m] = -k * s * a[m] + c * b[m];
    }
    result.snapshots.push_back(
        {field_from_spectrum(x, grid, psi0.rep()), field_from_spectrum(v, grid, psi0.rep())});
  }
  for (std::size_t t = 0; t < times.size(); ++t) {
    SnapshotDiagnostics d;
    d.time = times[t];
    d.norm = norm(result.snapshots[t][0], Weight::InvR);
    const RealVector sigma = sigma_density(result.snapshots[t][0], result.snapshots[t][1]);
    d.min_density = *std::min_element(sigma.begin(), sigma.end());
    d.max_density = *std::max_element(sigma.begin(), sigma.end());
    d.continuity_residual = kNaN;
    result.diagnostics.push_back(d);
  }
  return result;
}

EvolutionResult propagate_weyl(const SpinorField& psi0, const RealVector& times) {
  validate_times(times);
  require_same_grid(psi0.upper.grid(), psi0.lower.grid());
  const auto& grid = psi0.upper.grid();
  const ComplexVector up = spectrum_of(psi0.upper);
  const ComplexVector down = spectrum_of(psi0.lower);
  EvolutionResult result;
  result.times = times;
  for (double t : times) {
    result.snapshots.push_back({evolve_phase(up, grid, psi0.upper.rep(), t, plus_symbol),
                                evolve_phase(down, grid, psi0.lower.rep(), t, minus_symbol)});
  }
  return with_plain_diagnostics(std::move(result));
}

EvolutionResult propagate_maxwell(const VectorField3& f0, const RealVector& times) {
  validate_times(times);
  require_same_grid(f0.f1.grid(), f0.f2.grid());
  require_same_grid(f0.f1.grid(), f0.f3.grid());
  double peak = 0.0;
  double axial = 0.0;
  for (std::size_t i = 0; i < f0.f1.size(); ++i) {
    peak = std::max({peak, std::abs(f0.f1[i]), std::abs(f0.f2[i]), std::abs(f0.f3[i])});
    axial = std::max(axial, std::abs(f0.f3[i]));
  }
  if (axial > 1e-12 * peak) {
    throw std::invalid_argument(
        "maxwell: the axial component F3 must vanish (transversality pbar·F = 0 on the axis)");
  }
  const auto& grid = f0.f1.grid();
  const Rep rep = f0.f1.rep();
  const ComplexVector s1 = spectrum_of(f0.f1);
  const ComplexVector s2 = spectrum_of(f0.f2);
  // ∂_t F¹ = -κ F², ∂_t F² = κ F¹: C∓ = F¹ ∓ iF² evolve as exp(∓iκt).
  ComplexVector cm(s1.size());
  ComplexVector cp(s1.size());
  for (std::size_t m = 0; m < s1.size(); ++m) {
    cm[m] = s1[m] - kI * s2[m];
    cp[m] = s1[m] + kI * s2[m];
  }
  EvolutionResult result;
  result.times = times;
  for (double t : times) {
    ComplexVector a(s1.size());
    ComplexVector b(s1.size());
    for (std::size_t m = 0; m < s1.size(); ++m) {
      const double k = grid.kappa(m);
      const Complex em = cm[m] * std::polar(1.0, -k * t);
      const Complex ep = cp[m] * std::polar(1.0, k * t);
      a[m] = 0.5 * (em + ep);
      b[m] = (ep - em) / (2.0 * kI);
    }
    result.snapshots.push_back({field_from_spectrum(a, grid, rep), field_from_spectrum(b, grid, rep),
                                AxialField(grid, rep)});
  }
  return with_plain_diagnostics(std::move(result));
}

SpinorField weyl_hamiltonian(const SpinorField& psi) {
  const LinearOperator p = pbar();
  return {p(psi.upper), Complex(-1.0) * p(psi.lower)};
}

DensityCurrent density_current(const AxialField& psi) {
  const AxialField g = convert_rep(psi, Rep::G);
  const ComplexVector hg = fourier::hilbert(g.values(), g.grid());
  DensityCurrent out{RealVector(g.size()), RealVector(g.size())};
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.rho[i] = std::norm(g[i]) + std::norm(hg[i]);
    out.current[i] = 2.0 * (std::conj(hg[i]) * g[i]).imag();
  }
  return out;
}

double continuity_residual(const AxialField& before, const AxialField& at, const AxialField& after,
                           double dt, double fraction) {
  const RealVector rb = density_current(before).rho;
  const RealVector ra = density_current(after).rho;
  const RealVector j = density_current(at).current;
  const auto& grid = at.grid();
  const double h = grid.spacing();
  auto [first, last] = grid.interior(fraction);
  first = std::max<std::size_t>(first, 1);
  last = std::min(last, grid.size() - 1);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    const double drho = (ra[i] - rb[i]) / (2.0 * dt);
    const double dj = (j[i + 1] - j[i - 1]) / (2.0 * h);
    worst = std::max(worst, std::abs(drho + dj));
    scale = std::max(scale, std::abs(drho));
  }
  return scale == 0.0 ? worst : worst / scale;
}

RealVector sigma_density(const AxialField& psi, const AxialField& dpsi_dt) {
  const AxialField g = convert_rep(psi, Rep::G);
  const AxialField v = convert_rep(dpsi_dt, Rep::G);
  RealVector out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = -2.0 * (std::conj(g[i]) * v[i]).imag();
  return out;
}

double centroid(const std::vector<AxialField>& components) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& c : components) {
    const AxialField g = convert_rep(c, Rep::G);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double w = std::norm(g[i]);
      num += g.grid().node(i) * w;
      den += w;
    }
  }
  if (den == 0.0) throw std::invalid_argument("centroid of a zero field");
  return num / den;
}

AxialField shift_nodes(const AxialField& field, long nodes) {
  const AxialField g = convert_rep(field, Rep::G);
  AxialField out(g.grid(), Rep::G);
  const long size = static_cast<long>(g.size());
  for (long i = 0; i < size; ++i) {
    const long src = i - nodes;
    if (src >= 0 && src < size) out[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(src)];
  }
  return convert_rep(out, field.rep());
}

RealVector uniform_times(double t_max, std::size_t count) {
  if (count == 0) throw std::invalid_argument("snapshot count must be positive");
  RealVector out(count, 0.0);
  for (std::size_t i = 1; i < count; ++i) {
    out[i] = t_max * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace axial
