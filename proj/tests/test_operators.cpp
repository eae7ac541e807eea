#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "axial/diagnostics.hpp"
#include "axial/operators.hpp"
#include "axial/probes.hpp"

using namespace axial;

namespace {

const Complex kI{0.0, 1.0};

std::vector<std::pair<AxialField, AxialField>> pairs_of(const std::vector<AxialField>& p) {
  std::vector<std::pair<AxialField, AxialField>> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  return out;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("the three pbar0 forms agree") {
  const AxisGrid g = make_grid(256, 40.0);
  const auto probes = probe_suite(g, {});
  for (HilbertBackend backend : {HilbertBackend::Spectral, HilbertBackend::Quadrature}) {
    const LinearOperator left = pbar0(Pbar0Form::Left, backend);
    const LinearOperator right = pbar0(Pbar0Form::Right, backend);
    const LinearOperator spec = pbar0(Pbar0Form::Spectral);
    for (const auto& f : probes) {
      const AxialField s = spec(f);
      CHECK(interior_relative_error(left(f), s, kHilbertInterior) < 1e-4);
      CHECK(interior_relative_error(right(f), s, kHilbertInterior) < 1e-4);
    }
  }
}

TEST_CASE("form disagreement above tolerance is reported") {
  const AxisGrid g = make_grid(128, 20.0);
  const AxialField f = probe_suite(g, {})[0];
  std::vector<std::string> warnings;
  ScopedWarningSink sink([&](const std::string& m) { warnings.push_back(m); });
  const double d = pbar0_form_disagreement(f, 0.0);
  CHECK(d > 0.0);
  CHECK(warnings.size() == 1);
  warnings.clear();
  CHECK(pbar0_form_disagreement(f, 0.02) < 0.02);
  CHECK(warnings.empty());
}

TEST_CASE("pbar0 acts as |k| on windowed plane waves") {
  const AxisGrid g = make_grid(256, 40.0);
  const WindowSpec w = resolve_window(g, {});
  const auto [first, last] = window_plateau(g, w);
  REQUIRE(first < last);
  for (double k : {-4.0, 2.0, 6.0}) {
    const AxialField wave = windowed_plane_wave(g, k, w);
    const AxialField out = pbar0(Pbar0Form::Left)(wave);
    double err = 0.0;
    for (std::size_t i = first; i < last; ++i) err = std::max(err, std::abs(out[i] - std::abs(k) * wave[i]));
    CHECK(err / std::abs(k) < 2e-2);
  }
}

TEST_CASE("pbar0 is positive and linear") {
  const AxisGrid g = make_grid(128, 20.0);
  const auto probes = probe_suite(g, {});
  const LinearOperator op = pbar0(Pbar0Form::Left);
  for (const auto& f : probes) CHECK(rayleigh_quotient(op, f, AdjointWeight::InvR) > 0.0);
  CHECK(linearity_residual(op, probes[0], probes[1], {0.3, -1.2}, {2.0, 0.5}) < 1e-13);
}

TEST_CASE("pbar is symmetric and conjugated H+ and H- are negative adjoints") {
  const AxisGrid g = make_grid(256, 40.0);
  const auto probes = probe_suite(g, {});
  const auto pairs = pairs_of(probes);
  CHECK(adjoint_residual(pbar(), pbar(), AdjointWeight::InvR, pairs) < 1e-12);
  const LinearOperator hp = hilbert_conjugated(Sign::Plus);
  const LinearOperator hm = hilbert_conjugated(Sign::Minus);
  CHECK(adjoint_residual(hp, scale(-1.0, hm), AdjointWeight::InvR, pairs) < 1e-12);
  // The declared adjoint of H+ is -H-.
  CHECK(interior_relative_error(hp.adjoint()(probes[0]), -1.0 * hm(probes[0]), 1.0) < 1e-14);
}

TEST_CASE("declared adjoints") {
  CHECK(pbar().has_declared_adjoint());
  CHECK(pbar().adjoint().label() == pbar().label());
  const LinearOperator m = multiplication("x", [](double x) { return Complex(x); });
  CHECK_FALSE(m.has_declared_adjoint());
  CHECK_THROWS_AS(m.adjoint(), std::logic_error);
  CHECK(commutator(m, pbar()).label() == "[x, " + pbar().label() + "]");
}

TEST_CASE("p~ is symmetric for continuous fields") {
  const AxisGrid g = make_grid(256, 20.0);
  std::vector<AxialField> fields;
  for (double c : {-1.0, 0.0, 0.7}) {
    fields.push_back(sample_field(
        [=](double x) { return std::exp(-0.5 * (x - c) * (x - c)) * std::polar(1.0, c * x); }, g,
        Rep::F));
  }
  const LinearOperator pt = radial_momentum_tilde();
  CHECK(adjoint_residual(pt, pt, AdjointWeight::Unit, pairs_of(fields)) < 1e-3);
}

TEST_CASE("broken continuity reproduces the surface term 2i") {
  // λ a = sgn(λ) exp(-λ²) jumps from -1 to 1; λ b = exp(-λ²) is continuous
  // with value 1, so i[(λa)* (λb)] from 0- to 0+ equals 2i.
  const AxisGrid g = make_grid(256, 20.0);
  const AxialField a =
      sample_field([](double x) { return Complex(std::exp(-x * x) / std::abs(x)); }, g, Rep::F);
  const AxialField b = sample_field([](double x) { return Complex(std::exp(-x * x) / x); }, g, Rep::F);
  const Complex expected(0.0, 2.0);
  CHECK(std::abs(tilde_boundary_term(a, b) - expected) < 1e-3);
  const Complex defect = adjoint_defect(radial_momentum_tilde(), a, b, AdjointWeight::Unit);
  CHECK(std::abs(defect - expected) < 0.1 * std::abs(expected));
}

TEST_CASE("canonical commutator and the noncommuting factors of pbar0") {
  const AxisGrid g = make_grid(256, 40.0);
  const auto probes = probe_suite(g, {});
  const LinearOperator x = multiplication("x", [](double v) { return Complex(v); });
  CHECK(commutator_residual(x, pbar(), identity_operator(), kI, probes) < 1e-10);
  const double witness = commutator_residual(radial_derivative_op(OriginBehavior::Continuous),
                                             hilbert_conjugated(Sign::Plus), zero_operator(), 1.0,
                                             probes);
  CHECK(witness > 0.5);
}

TEST_CASE("boost generator commutators improve under refinement") {
  double previous = 1.0;
  for (std::size_t n : {256, 512}) {
    const AxisGrid g = make_grid(n, 40.0);
    const auto probes = compact_suite(g, {});
    const double r = commutator_residual(boost_generator(), pbar0(Pbar0Form::Spectral), pbar(), kI,
                                         probes);
    CHECK(r < 5e-2);
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("local boost commutes into the four-vectors away from the origin") {
  const AxisGrid g = make_grid(512, 40.0);
  CompactSuiteSpec spec;
  spec.clearance = 1.0;
  const auto probes = compact_suite(g, spec);
  for (FourVector which : {FourVector::S, FourVector::T}) {
    const OperatorPair v = four_vector_ops(which);
    CHECK(commutator_residual(local_boost(), v.time, v.axial, kI, probes) < 1e-3);
    CHECK(commutator_residual(local_boost(), v.axial, v.time, kI, probes) < 1e-3);
  }
}

TEST_CASE("the two boost orderings agree on smooth probes") {
  const AxisGrid g = make_grid(512, 40.0);
  for (const auto& f : compact_suite(g, {})) CHECK(boost_ordering_disagreement(f, 1.0) < 1e-2);
}

TEST_CASE("origin limit extrapolates quadratics exactly") {
  const AxisGrid g = make_grid(64, 8.0);
  ComplexVector u(g.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = g.node(i);
    u[i] = x > 0 ? 1.0 + 2.0 * x + 3.0 * x * x : -4.0 + x * x;
  }
  CHECK(std::abs(origin_limit(u, g, true) - 1.0) < 1e-12);
  CHECK(std::abs(origin_limit(u, g, false) + 4.0) < 1e-12);
}

}
