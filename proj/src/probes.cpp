#include "axial/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace axial {

AxialField gaussian_packet(const AxisGrid& grid, const PacketSpec& spec, Rep rep) {
  const AxialField g = sample_field(
      [&](double x) {
        const double d = (x - spec.center) / spec.width;
        return spec.amplitude * std::exp(-0.5 * d * d) * std::polar(1.0, spec.k0 * x);
      },
      grid, Rep::G);
  return convert_rep(g, rep);
}

std::vector<AxialField> probe_suite(const AxisGrid& grid, const ProbeSuiteSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double span = spec.spread * grid.extent();
  auto packet = [&]() {
    PacketSpec p;
    p.center = span * (2.0 * unit(rng) - 1.0);
    const double k = spec.min_k + (spec.max_k - spec.min_k) * unit(rng);
    const bool negative = !spec.single_sided && unit(rng) < 0.5;
    p.k0 = negative ? -k : k;
    const double min_width = spec.min_k_width / k;
    p.width = min_width * (1.0 + 0.5 * unit(rng));
    if (spec.origin_clearance > 0.0) {
      const double side = p.center < 0.0 ? -1.0 : 1.0;
      p.center = side * (spec.origin_clearance * p.width + std::abs(p.center));
    }
    p.amplitude = std::polar(0.5 + unit(rng), 2.0 * std::numbers::pi * unit(rng));
    return p;
  };
  std::vector<AxialField> out;
  out.reserve(spec.count);
  for (std::size_t n = 0; n < spec.count; ++n) {
    const PacketSpec a = packet();
    const PacketSpec b = packet();
    out.push_back(gaussian_packet(grid, a) + gaussian_packet(grid, b));
  }
  return out;
}

AxialField compact_packet(const AxisGrid& grid, const CompactSpec& spec, Rep rep) {
  const AxialField g = sample_field(
      [&](double x) {
        const double d = (x - spec.center) / spec.half_width;
        if (std::abs(d) >= 1.0) return Complex{};
        const double w = std::pow(std::cos(0.5 * std::numbers::pi * d), spec.power);
        return spec.amplitude * w * std::polar(1.0, spec.k0 * x);
      },
      grid, Rep::G);
  return convert_rep(g, rep);
}

std::vector<AxialField> compact_suite(const AxisGrid& grid, const CompactSuiteSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<AxialField> out;
  out.reserve(spec.count);
  for (std::size_t n = 0; n < spec.count; ++n) {
    CompactSpec c;
    c.half_width = spec.min_half_width + (spec.max_half_width - spec.min_half_width) * unit(rng);
    c.k0 = spec.min_k + (spec.max_k - spec.min_k) * unit(rng);
    if (unit(rng) < 0.5) c.k0 = -c.k0;
    c.center = spec.spread * grid.extent() * (2.0 * unit(rng) - 1.0);
    if (spec.clearance >= 0.0) {
      const double side = c.center < 0.0 ? -1.0 : 1.0;
      c.center = side * (std::abs(c.center) + c.half_width + spec.clearance);
    }
    c.amplitude = std::polar(0.5 + unit(rng), 2.0 * std::numbers::pi * unit(rng));
    out.push_back(compact_packet(grid, c));
  }
  return out;
}

double cosine_taper(double lambda, double width, double ramp, double center) {
  const double d = std::abs(lambda - center);
  const double flat = 0.5 * width - ramp;
  if (d <= flat) return 1.0;
  if (d >= 0.5 * width) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (d - flat) / ramp));
}

WindowSpec resolve_window(const AxisGrid& grid, const WindowSpec& window) {
  WindowSpec w = window;
  if (w.width <= 0.0) w.width = grid.extent() / 4.0;
  if (w.ramp <= 0.0) w.ramp = 0.375 * w.width;
  w.ramp = std::min(w.ramp, 0.5 * w.width);
  return w;
}

AxialField windowed_plane_wave(const AxisGrid& grid, double k, const WindowSpec& window, Rep rep) {
  const WindowSpec w = resolve_window(grid, window);
  const AxialField g = sample_field(
      [&](double x) { return cosine_taper(x, w.width, w.ramp, w.center) * std::polar(1.0, k * x); },
      grid, Rep::G);
  return convert_rep(g, rep);
}

std::pair<std::size_t, std::size_t> window_plateau(const AxisGrid& grid, const WindowSpec& window) {
  const WindowSpec w = resolve_window(grid, window);
  const double flat = 0.5 * w.width - w.ramp;
  std::size_t first = 0;
  while (first < grid.size() && grid.node(first) < w.center - flat) ++first;
  std::size_t last = first;
  while (last < grid.size() && grid.node(last) <= w.center + flat) ++last;
  return {first, last};
}

}  // namespace axial
