#include "axial/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace axial::fourier {

namespace {

// FFTW plans are created once per length and reused. The planner is not
// thread-safe, and the shared buffer is not either, so every use is locked.
struct Plan {
  explicit Plan(int n) : size(n) {
    buffer = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n)));
    if (buffer == nullptr) throw std::bad_alloc();
    fwd = fftw_plan_dft_1d(n, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Plan() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buffer);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  int size;
  fftw_complex* buffer = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

Plan& plan_for(int n) {
  static std::map<int, std::unique_ptr<Plan>> plans;
  auto& slot = plans[n];
  if (!slot) slot = std::make_unique<Plan>(n);
  return *slot;
}

// (-1)^j exp(-iπ j / (2n)): the index-dependent half of the twiddle.
Complex index_twiddle(std::size_t j, std::size_t n_half) {
  const double angle = -std::numbers::pi * static_cast<double>(j) / (2.0 * static_cast<double>(n_half));
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::polar(1.0, angle);
}

// exp(-iπ c²/n) with c = 1/2 - n.
Complex constant_twiddle(std::size_t n_half) {
  const double sign = (n_half % 2 == 0) ? -1.0 : 1.0;
  return sign * std::polar(1.0, -std::numbers::pi / (4.0 * static_cast<double>(n_half)));
}

ComplexVector transform(std::span<const Complex> in, const AxisGrid& grid, bool forward_dir) {
  const std::size_t n = grid.size();
  if (in.size() != n) throw std::invalid_argument("fourier: sample count does not match grid");
  const std::size_t nh = grid.n_half();
  const double scale =
      (forward_dir ? grid.spacing() : grid.dkappa()) / std::sqrt(2.0 * std::numbers::pi);
  const Complex c0 = forward_dir ? constant_twiddle(nh) : std::conj(constant_twiddle(nh));

  ComplexVector out(n);
  std::lock_guard lock(plan_mutex());
  Plan& plan = plan_for(static_cast<int>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Complex t = forward_dir ? index_twiddle(j, nh) : std::conj(index_twiddle(j, nh));
    const Complex v = in[j] * t;
    plan.buffer[j][0] = v.real();
    plan.buffer[j][1] = v.imag();
  }
  fftw_execute(forward_dir ? plan.fwd : plan.bwd);
  for (std::size_t m = 0; m < n; ++m) {
    const Complex t = forward_dir ? index_twiddle(m, nh) : std::conj(index_twiddle(m, nh));
    out[m] = scale * c0 * t * Complex(plan.buffer[m][0], plan.buffer[m][1]);
  }
  return out;
}

}  // namespace

ComplexVector forward(std::span<const Complex> samples, const AxisGrid& grid) {
  return transform(samples, grid, true);
}

ComplexVector inverse(std::span<const Complex> spectrum, const AxisGrid& grid) {
  return transform(spectrum, grid, false);
}

ComplexVector apply_symbol(std::span<const Complex> samples, const AxisGrid& grid,
                           const std::function<Complex(double)>& symbol) {
  ComplexVector spec = forward(samples, grid);
  for (std::size_t m = 0; m < spec.size(); ++m) spec[m] *= symbol(grid.kappa(m));
  return inverse(spec, grid);
}

ComplexVector derivative(std::span<const Complex> samples, const AxisGrid& grid) {
  return apply_symbol(samples, grid, [](double k) { return Complex(0.0, k); });
}

ComplexVector hilbert(std::span<const Complex> samples, const AxisGrid& grid) {
  return apply_symbol(samples, grid, [](double k) { return Complex(0.0, k > 0.0 ? -1.0 : 1.0); });
}

ComplexVector kappa_derivative(std::span<const Complex> profile, const AxisGrid& grid) {
  // profile = forward(q) for q = inverse(profile); d/dκ forward(q) = forward(-iλ q).
  ComplexVector q = inverse(profile, grid);
  for (std::size_t j = 0; j < q.size(); ++j) q[j] *= Complex(0.0, -grid.node(j));
  return forward(q, grid);
}

}  // namespace axial::fourier
