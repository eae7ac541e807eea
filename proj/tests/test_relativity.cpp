#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "axial/diagnostics.hpp"
#include "axial/probes.hpp"
#include "axial/relativity.hpp"
#include "axial/spectral_map.hpp"

using namespace axial;

TEST_SUITE("relativity") {

TEST_CASE("boost parameters are validated") {
  CHECK_THROWS_AS(BoostParams(1.0, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BoostParams(-1.5, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BoostParams(0.5, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BoostParams(std::nan(""), {0, 0, 1}), std::invalid_argument);
  const BoostParams b(0.6, {0, 0, 2});
  CHECK(b.gamma() == doctest::Approx(1.25));
  CHECK(b.axis()[2] == 1.0);
}

TEST_CASE("boosts preserve null momenta and reject massive ones") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> v(-0.99, 0.99);
  for (int i = 0; i < 200; ++i) {
    const FourMomentum k = null_momentum({n(rng), n(rng), n(rng)});
    const FourMomentum kb = boost_four_momentum(k, BoostParams(v(rng), {n(rng), n(rng), n(rng)}));
    CHECK(is_null(kb, 1e-10));
  }
  CHECK_THROWS_AS(boost_four_momentum({2.0, {1.0, 0.0, 0.0}}, BoostParams(0.1, {1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("aberration and Doppler closed forms") {
  const BoostParams b(0.5, {0, 0, 1});
  // Light arriving along the axis is seen straight ahead either way.
  const Vec3 ahead = observed_direction({0, 0, 1}, b);
  CHECK(ahead[2] == doctest::Approx(1.0));
  // θ = 90° maps to cos θ' = v.
  const Vec3 side = observed_direction({1, 0, 0}, b);
  CHECK(side[2] == doctest::Approx(0.5));
  CHECK(aberration_cos(0.0, 0.5) == doctest::Approx(0.5));
  const double g = b.gamma();
  CHECK(doppler_factor({0, 0, 1}, b) == doctest::Approx(g * 0.5).epsilon(1e-14));
  CHECK(doppler_factor({0, 0, -1}, b) == doctest::Approx(g * 1.5).epsilon(1e-14));
  CHECK(aberrate_direction({0, 0, 1}, BoostParams(0.0, {1, 0, 0}))[2] == 1.0);
}

TEST_CASE("zero boost copies the beam") {
  const AxisGrid g = make_grid(128, 20.0);
  const SpectralProfile phi = analyze_fast(gaussian_packet(g, {0.0, 1.0, 4.0}));
  const auto out = boost_beam({{0, 0, 1}, phi}, BoostParams(0.0, {0, 0, 1}));
  REQUIRE(out.size() == 1);
  for (std::size_t m = 0; m < phi.size(); ++m) CHECK(out[0].profile[m] == phi[m]);
}

TEST_CASE("parallel boost keeps one beam and the dk/k norm") {
  const AxisGrid g = make_grid(512, 40.0);
  const SpectralProfile phi = analyze_fast(gaussian_packet(g, {0.0, 1.0, 8.0}));
  const double before = spectral_inner_product(phi, phi).real();
  for (double v : {0.6, -0.6}) {
    const auto out = boost_beam({{0, 0, 1}, phi}, BoostParams(v, {0, 0, 1}));
    REQUIRE(out.size() == 1);
    const double after = spectral_inner_product(out[0].profile, out[0].profile).real();
    CHECK(std::abs(after / before - 1.0) < 5e-3);
  }
}

TEST_CASE("oblique boost splits the beam into two") {
  const AxisGrid g = make_grid(256, 40.0);
  const SpectralProfile phi = analyze_fast(gaussian_packet(g, {0.0, 1.5, 4.0}) +
                                           gaussian_packet(g, {0.0, 1.5, -4.0}));
  const auto out = boost_beam({{0, 0, 1}, phi}, BoostParams(0.5, {1, 0, 0}));
  REQUIRE(out.size() == 2);
  CHECK(out[0].direction[0] < 0.0);
  CHECK(out[1].direction[0] < 0.0);
  CHECK(out[0].direction[2] > 0.0);
  CHECK(out[1].direction[2] < 0.0);
  double total = 0.0;
  for (const auto& b : out) {
    for (std::size_t m = 0; m < g.n_half(); ++m) CHECK(b.profile[g.minus_index(m)] == Complex{});
    total += spectral_inner_product(b.profile, b.profile).real();
  }
  CHECK(total == doctest::Approx(spectral_inner_product(phi, phi).real()).epsilon(5e-3));
}

TEST_CASE("resampling past the sampled range warns") {
  const AxisGrid g = make_grid(64, 10.0);
  const SpectralProfile flat = sample_profile([](double) { return Complex(1.0); }, g);
  std::vector<std::string> warnings;
  ScopedWarningSink sink([&](const std::string& m) { warnings.push_back(m); });
  (void)boost_beam({{0, 0, 1}, flat}, BoostParams(-0.5, {0, 0, 1}));
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("momentum boost generator: spectral and finite difference agree") {
  const AxisGrid g = make_grid(512, 40.0);
  const SpectralProfile phi = analyze_fast(gaussian_packet(g, {0.0, 1.0, 8.0}));
  const SpectralProfile a = momentum_boost_generator(phi);
  const SpectralProfile b = momentum_boost_generator(phi, DerivativeMethod::FiniteDifference);
  double diff = 0.0;
  double peak = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    diff = std::max(diff, std::abs(a[m] - b[m]));
    peak = std::max(peak, std::abs(a[m]));
  }
  CHECK(diff / peak < 1e-6);
}

TEST_CASE("small boosts are generated by N_k at second order") {
  const AxisGrid g = make_grid(512, 40.0);
  const SpectralProfile phi = analyze_fast(gaussian_packet(g, {0.0, 1.0, 8.0}));
  const SpectralProfile nk = momentum_boost_generator(phi);
  std::vector<double> c;
  for (double dv : {1e-2, 5e-3, 2.5e-3}) {
    const SpectralProfile b = boost_beam({{0, 0, 1}, phi}, BoostParams(dv, {0, 0, 1}))[0].profile;
    double r = 0.0;
    double n = 0.0;
    for (std::size_t m = 0; m < phi.size(); ++m) {
      r += std::norm(b[m] - (phi[m] - Complex(0.0, dv) * nk[m]));
      n += std::norm(phi[m]);
    }
    c.push_back(std::sqrt(r / n) / (dv * dv));
  }
  CHECK(c[1] / c[0] == doctest::Approx(1.0).epsilon(0.1));
  CHECK(c[2] / c[1] == doctest::Approx(1.0).epsilon(0.1));
}

}
