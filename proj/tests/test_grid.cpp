#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "axial/grid.hpp"

using namespace axial;

namespace {

AxialField random_field(const AxisGrid& grid, Rep rep, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  AxialField f(grid, rep);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {n(rng), n(rng)};
  return f;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("nodes are half-offset and symmetric") {
  const AxisGrid g = make_grid(16, 4.0);
  CHECK(g.size() == 32);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.node(g.plus_index(0)) == doctest::Approx(0.125));
  CHECK(g.node(g.minus_index(0)) == doctest::Approx(-0.125));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.node(i) == doctest::Approx(-g.node(g.mirror(i))));
    CHECK(g.node(i) != 0.0);
  }
  CHECK(g.spacing() * g.dkappa() == doctest::Approx(std::numbers::pi / 16.0));
  CHECK(g.kappa(g.size() - 1) == doctest::Approx(15.5 * g.dkappa()));
}

TEST_CASE("grid rejects tiny or degenerate sizes") {
  CHECK_THROWS(make_grid(2, 1.0));
  CHECK_THROWS(make_grid(64, 0.0));
  CHECK_THROWS(make_grid(64, -1.0));
}

TEST_CASE("1/r product of F samples is the flat sum of G samples") {
  const AxisGrid g = make_grid(64, 8.0);
  const AxialField a = random_field(g, Rep::F, 1);
  const AxialField b = random_field(g, Rep::F, 2);
  const AxialField ga = convert_rep(a, Rep::G);
  const AxialField gb = convert_rep(b, Rep::G);
  Complex flat{};
  for (std::size_t i = 0; i < g.size(); ++i) flat += std::conj(ga[i]) * gb[i] * g.spacing();
  const Complex weighted = inner_product(a, b, Weight::InvR);
  CHECK(std::abs(weighted - flat) <= 1e-12 * std::abs(flat));
  CHECK(std::abs(inner_product(ga, gb, Weight::InvR) - flat) <= 1e-12 * std::abs(flat));
}

TEST_CASE("Gaussian norms match closed forms") {
  const AxisGrid g = make_grid(256, 10.0);
  // g = exp(-λ²): ∫ exp(-2λ²) dλ = sqrt(π/2)
  const AxialField gg =
      sample_field([](double x) { return Complex(std::exp(-x * x)); }, g, Rep::G);
  CHECK(std::pow(norm(gg, Weight::InvR), 2) == doctest::Approx(std::sqrt(std::numbers::pi / 2)).epsilon(1e-12));
  // f = exp(-λ²/2): ∫ λ² exp(-λ²) dλ = sqrt(π)/2
  const AxialField f =
      sample_field([](double x) { return Complex(std::exp(-0.5 * x * x)); }, g, Rep::F);
  CHECK(std::pow(norm(f, Weight::Unit), 2) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
}

TEST_CASE("spectral products use k dk or dk/k") {
  const AxisGrid g = make_grid(256, 40.0);
  // ∫ |k| exp(-2k²) dk over the line = 1/2
  const SpectralProfile a = sample_profile([](double k) { return Complex(std::exp(-k * k)); }, g);
  CHECK(spectral_inner_product(a, a, SpectralWeight::K).real() == doctest::Approx(0.5).epsilon(1e-3));
  const SpectralProfile b =
      sample_profile([](double k) { return Complex(std::abs(k) * std::exp(-k * k)); }, g);
  CHECK(spectral_inner_product(b, b, SpectralWeight::InvK).real() == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("rep conversion and parity round-trip") {
  const AxisGrid g = make_grid(32, 4.0);
  const AxialField f = random_field(g, Rep::F, 3);
  const AxialField back = convert_rep(convert_rep(f, Rep::G), Rep::F);
  const AxialField twice = apply_parity(apply_parity(f));
  const AxialField once = apply_parity(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(back[i] - f[i]) <= 1e-14 * std::abs(f[i]));
    CHECK(twice[i] == f[i]);
    CHECK(once[i] == f[g.mirror(i)]);
  }
}

TEST_CASE("line density and arithmetic") {
  const AxisGrid g = make_grid(32, 4.0);
  const AxialField f = random_field(g, Rep::F, 4);
  const RealVector rho = line_density(f);
  const AxialField gf = convert_rep(f, Rep::G);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(rho[i] == doctest::Approx(std::norm(gf[i])));
  const AxialField z = f - f;
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i]) == 0.0);
  const AxialField two = Complex(2.0, 0.0) * f;
  CHECK(interior_relative_error(two, f + f, 1.0) <= 1e-15);
}

TEST_CASE("interior ranges and grid mismatch") {
  const AxisGrid g = make_grid(100, 10.0);
  const auto [first, last] = g.interior(0.5);
  for (std::size_t i = first; i < last; ++i) CHECK(std::abs(g.node(i)) < 5.0);
  CHECK(std::abs(g.node(first - 1)) >= 5.0);
  CHECK(last - first == 100);
  const AxialField a(g, Rep::G);
  const AxialField b(make_grid(64, 10.0), Rep::G);
  CHECK_THROWS_AS(inner_product(a, b, Weight::InvR), std::invalid_argument);
}

}
