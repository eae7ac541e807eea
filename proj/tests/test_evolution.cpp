#include <doctest.h>

#include <cmath>
#include <string>

#include "axial/evolution.hpp"
#include "axial/operators.hpp"
#include "axial/probes.hpp"

using namespace axial;

namespace {

const Complex kI{0.0, 1.0};

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("spectral scalar propagation conserves the norm and moves at speed 1") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField psi = gaussian_packet(g, {-5.0, 1.5, 5.0});
  const EvolutionResult r = propagate_scalar(psi, uniform_times(10.0, 6));
  REQUIRE(r.snapshots.size() == 6);
  for (const auto& d : r.diagnostics) CHECK(std::abs(d.norm / r.diagnostics[0].norm - 1.0) < 1e-10);
  const double speed = (centroid(r.snapshots.back()) - centroid(r.snapshots.front())) / 10.0;
  CHECK(speed == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::isnan(r.diagnostics.front().continuity_residual));
}

TEST_CASE("single-sided packets translate without dispersion") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField psi = gaussian_packet(g, {-5.0, 1.5, 5.0});
  const long nodes = 64;
  const double t = nodes * g.spacing();
  const EvolutionResult r = propagate_scalar(psi, {0.0, t});
  CHECK(interior_relative_error(r.snapshots.back()[0], shift_nodes(psi, nodes), 0.8) < 1e-8);
}

TEST_CASE("density stays non-negative for a mixed packet") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField psi =
      gaussian_packet(g, {-4.0, 1.5, 5.0}) + gaussian_packet(g, {4.0, 1.2, -6.0, {0.3, 0.8}});
  const EvolutionResult r = propagate_scalar(psi, uniform_times(8.0, 9));
  for (const auto& d : r.diagnostics) CHECK(d.min_density >= -1e-6 * d.max_density);
}

TEST_CASE("density of the zero field is zero") {
  const AxisGrid g = make_grid(64, 10.0);
  const DensityCurrent dc = density_current(AxialField(g, Rep::G));
  for (std::size_t i = 0; i < dc.rho.size(); ++i) {
    CHECK(dc.rho[i] == 0.0);
    CHECK(dc.current[i] == 0.0);
  }
}

TEST_CASE("windowed plane wave carries uniform density and forward current") {
  const AxisGrid g = make_grid(256, 40.0);
  const WindowSpec w = resolve_window(g, {});
  const auto [first, last] = window_plateau(g, w);
  const DensityCurrent dc = density_current(windowed_plane_wave(g, 4.0, w));
  for (std::size_t i = first; i < last; ++i) {
    CHECK(dc.rho[i] == doctest::Approx(2.0).epsilon(0.03));
    CHECK(dc.current[i] == doctest::Approx(2.0).epsilon(0.03));
  }
}

TEST_CASE("continuity residual is second order under joint refinement") {
  double previous = 0.0;
  for (std::size_t n : {128, 256, 512}) {
    const AxisGrid g = make_grid(n, 40.0);
    const AxialField q =
        gaussian_packet(g, {-2.0, 1.5, 5.0}) + gaussian_packet(g, {3.0, 1.2, -6.0, {0.3, 0.8}});
    const double dt = 0.5 * g.spacing();
    const double e = propagate_scalar(q, {0.0, dt, 2.0 * dt}).diagnostics[1].continuity_residual;
    if (previous > 0.0) CHECK(std::log2(previous / e) > 1.8);
    previous = e;
  }
}

TEST_CASE("RK4 agrees with the spectral propagator and respects its step bound") {
  const AxisGrid g = make_grid(256, 40.0);
  CHECK(rk4_step_bound(g) == doctest::Approx(2.0 * std::sqrt(2.0) * g.spacing() / M_PI));
  const AxialField psi = gaussian_packet(g, {-5.0, 1.5, 5.0});
  const RealVector t = uniform_times(1.0, 3);
  const EvolutionResult a = propagate_scalar(psi, t, Method::Spectral);
  const EvolutionResult b = propagate_scalar(psi, t, Method::Rk4);
  CHECK(interior_relative_error(b.snapshots.back()[0], a.snapshots.back()[0], 0.8) < 1e-2);
  CHECK_THROWS_AS(propagate_scalar(psi, t, Method::Rk4, {1.0 * g.spacing()}), std::invalid_argument);
  CHECK_NOTHROW(propagate_scalar(psi, t, Method::Rk4, {0.85 * g.spacing()}));
}

TEST_CASE("time grids are validated") {
  const AxisGrid g = make_grid(64, 10.0);
  const AxialField psi = gaussian_packet(g, {0.0, 1.0, 3.0});
  CHECK_THROWS_AS(propagate_scalar(psi, {}), std::invalid_argument);
  CHECK_THROWS_AS(propagate_scalar(psi, {0.0, 1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(uniform_times(1.0, 0), std::invalid_argument);
}

TEST_CASE("wave equation from positive-frequency data matches the scalar equation") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField psi = gaussian_packet(g, {-3.0, 1.5, 5.0});
  const AxialField dpsi = -kI * pbar0(Pbar0Form::Spectral)(psi);
  const RealVector t = uniform_times(4.0, 3);
  const EvolutionResult w = propagate_wave(psi, dpsi, t);
  const EvolutionResult s = propagate_scalar(psi, t);
  REQUIRE(w.snapshots.back().size() == 2);
  CHECK(interior_relative_error(w.snapshots.back()[0], s.snapshots.back()[0], 0.8) < 1e-10);
}

TEST_CASE("second-order density is indefinite") {
  const AxisGrid g = make_grid(128, 20.0);
  const AxialField psi = gaussian_packet(g, {-3.0, 1.0, 4.0}) + gaussian_packet(g, {3.0, 1.0, 4.0});
  const AxialField p0psi = pbar0(Pbar0Form::Spectral)(psi);
  // Positive frequency on the left packet, negative on the right.
  AxialField dpsi(g, Rep::G);
  for (std::size_t i = 0; i < g.size(); ++i) {
    dpsi[i] = (g.node(i) < 0 ? -kI : kI) * p0psi[i];
  }
  const RealVector sigma = sigma_density(psi, dpsi);
  double lo = 0.0;
  double hi = 0.0;
  for (double v : sigma) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo < -0.1 * hi);
  CHECK(hi > 0.0);
}

TEST_CASE("Weyl components move in opposite directions and square to pbar^2") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField u = gaussian_packet(g, {0.0, 1.5, 5.0});
  const EvolutionResult r = propagate_weyl({u, u}, {0.0, 8.0});
  CHECK(centroid({r.snapshots.back()[0]}) == doctest::Approx(8.0).epsilon(0.02));
  CHECK(centroid({r.snapshots.back()[1]}) == doctest::Approx(-8.0).epsilon(0.02));
  CHECK(std::abs(r.diagnostics.back().norm / r.diagnostics.front().norm - 1.0) < 1e-10);

  const SpinorField h2 = weyl_hamiltonian(weyl_hamiltonian({u, 2.0 * u}));
  const AxialField p2 = pbar()(pbar()(u));
  CHECK(interior_relative_error(h2.upper, p2, 0.8) < 1e-12);
  CHECK(interior_relative_error(h2.lower, 2.0 * p2, 0.8) < 1e-12);
}

TEST_CASE("Maxwell: (w, iw, 0) travels forward, (w, -iw, 0) does not") {
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField u = gaussian_packet(g, {-5.0, 1.5, 5.0});
  const AxialField zero(g, Rep::G);
  const long nodes = 64;
  const double t = nodes * g.spacing();
  const EvolutionResult fwd = propagate_maxwell({u, kI * u, zero}, {0.0, t});
  CHECK(interior_relative_error(fwd.snapshots.back()[0], shift_nodes(u, nodes), 0.8) < 1e-8);
  CHECK(interior_relative_error(fwd.snapshots.back()[1], shift_nodes(kI * u, nodes), 0.8) < 1e-8);
  for (const auto& v : fwd.snapshots.back()[2].values()) CHECK(v == Complex{});

  const EvolutionResult bwd = propagate_maxwell({u, -kI * u, zero}, {0.0, t});
  CHECK(centroid({bwd.snapshots.back()[0]}) == doctest::Approx(-5.0 - t).epsilon(0.02));
}

TEST_CASE("Maxwell rejects a nonzero axial component") {
  const AxisGrid g = make_grid(64, 10.0);
  const AxialField u = gaussian_packet(g, {0.0, 1.0, 3.0});
  try {
    (void)propagate_maxwell({u, u, 0.1 * u}, {0.0, 1.0});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("F3") != std::string::npos);
  }
}

TEST_CASE("shift_nodes zero-fills and keeps the rep") {
  const AxisGrid g = make_grid(32, 4.0);
  const AxialField f = convert_rep(gaussian_packet(g, {0.0, 0.5, 2.0}), Rep::F);
  const AxialField s = shift_nodes(f, 3);
  CHECK(s.rep() == Rep::F);
  const AxialField sg = convert_rep(s, Rep::G);
  const AxialField fg = convert_rep(f, Rep::G);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sg[i] == Complex{});
  for (std::size_t i = 3; i < g.size(); ++i) CHECK(std::abs(sg[i] - fg[i - 3]) < 1e-14);
}

}
