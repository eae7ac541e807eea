#include "axial/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "axial/diagnostics.hpp"
#include "axial/evolution.hpp"
#include "axial/fourier.hpp"
#include "axial/operators.hpp"
#include "axial/probes.hpp"
#include "axial/relativity.hpp"
#include "axial/spectral_map.hpp"
#include "axial/transforms.hpp"

namespace axial {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kHalfInterior = 0.8;
// Below this a commutator residual is rounding, and "decreasing under
// refinement" is measured against the floor instead.
constexpr double kRoundingFloor = 1e-9;

class Ledger {
 public:
  Ledger(const RunConfig& config, VerificationReport& report) : config_(config), report_(report) {}

  void group(std::string name) { group_ = std::move(name); }

  void add(std::string label, std::string anchor, double residual, double tolerance,
           const AxisGrid& grid) {
    VerificationEntry e;
    e.label = std::move(label);
    e.anchor = std::move(anchor);
    e.group = group_;
    e.residual = residual;
    e.tolerance = tolerance * config_.tol_scale;
    e.pass = residual <= e.tolerance;
    e.n_half = grid.n_half();
    e.extent = grid.extent();
    report_.entries.push_back(std::move(e));
  }

 private:
  const RunConfig& config_;
  VerificationReport& report_;
  std::string group_;
};

struct Suites {
  AxisGrid grid;
  AxisGrid fine;
  std::vector<AxialField> probes;        // band-pass pairs, both sides of the origin
  std::vector<AxialField> clear;         // same, vanishing near the origin
  std::vector<AxialField> compact;       // finite-smoothness bumps
  std::vector<AxialField> compact_fine;
  std::vector<AxialField> compact_clear;
  std::vector<AxialField> compact_clear_fine;
  WindowSpec window;
};

Suites make_suites(const RunConfig& c) {
  Suites s{make_grid(c.n_half, c.extent), make_grid(2 * c.n_half, c.extent), {}, {}, {}, {},
           {}, {}, {}};
  ProbeSuiteSpec ps;
  ps.count = c.probe_count;
  ps.seed = c.seed;
  s.probes = probe_suite(s.grid, ps);
  ps.origin_clearance = 8.0;
  s.clear = probe_suite(s.grid, ps);

  CompactSuiteSpec cs;
  cs.count = c.probe_count;
  cs.seed = c.seed;
  s.compact = compact_suite(s.grid, cs);
  s.compact_fine = compact_suite(s.fine, cs);
  cs.clearance = 1.0;
  s.compact_clear = compact_suite(s.grid, cs);
  s.compact_clear_fine = compact_suite(s.fine, cs);
  s.window = WindowSpec{c.window_width, c.window_ramp, 0.0};
  return s;
}

std::vector<std::pair<AxialField, AxialField>> neighbour_pairs(const std::vector<AxialField>& p) {
  std::vector<std::pair<AxialField, AxialField>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(p[i], p[(i + 1) % p.size()]);
  return out;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

double relative_max(std::span<const Complex> actual, std::span<const Complex> expected) {
  double d = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) d = std::max(d, std::abs(actual[i] - expected[i]));
  const double s = max_abs(expected);
  return s > 0.0 ? d / s : d;
}

// Relative sup error over r < fraction * extent.
double half_error(const HalfLineFunction& actual, const HalfLineFunction& expected,
                  double fraction) {
  const auto last = static_cast<std::size_t>(fraction * static_cast<double>(actual.size()));
  return relative_max(actual.values().subspan(0, last), expected.values().subspan(0, last));
}

HalfLineFunction combine(const HalfLineFunction& a, Complex alpha, const HalfLineFunction& b,
                         Complex beta) {
  HalfLineFunction out(a.grid(), a.domain());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = alpha * a[j] + beta * b[j];
  return out;
}

// d/dr of a half-line radius function extended evenly or oddly through r = 0.
HalfLineFunction half_derivative(const HalfLineFunction& f, bool even) {
  const auto& grid = f.grid();
  ComplexVector full(grid.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    full[grid.plus_index(j)] = f[j];
    full[grid.minus_index(j)] = even ? f[j] : -f[j];
  }
  const ComplexVector d = fourier::derivative(full, grid);
  HalfLineFunction out(grid, Domain::Radius);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = d[grid.plus_index(j)];
  return out;
}

HilbertOptions quadrature() { return HilbertOptions{HilbertBackend::Quadrature}; }

// ---------------------------------------------------------------------------

void check_unitarity(Ledger& ledger, const Suites& s, const Tolerances& tol) {
  ledger.group("unitarity");
  double roundtrip = 0.0;
  double roundtrip_fast = 0.0;
  double agree = 0.0;
  double parity = 0.0;
  for (const auto& p : s.probes) {
    const SpectralProfile phi = analyze(p);
    roundtrip = std::max(roundtrip, interior_relative_error(synthesize(phi), p, kHalfInterior));
    roundtrip_fast = std::max(
        roundtrip_fast, interior_relative_error(synthesize_fast(analyze_fast(p)), p, kHalfInterior));
    agree = std::max(agree, relative_max(analyze_fast(p).values(), phi.values()));
    const SpectralProfile mirrored = analyze(apply_parity(p));
    ComplexVector flipped(phi.size());
    for (std::size_t m = 0; m < phi.size(); ++m) flipped[m] = phi[s.grid.mirror(m)];
    parity = std::max(parity, relative_max(mirrored.values(), flipped));
  }
  double parseval = 0.0;
  for (const auto& [a, b] : neighbour_pairs(s.probes)) {
    const Complex lhs = spectral_inner_product(analyze(a), analyze(b), SpectralWeight::K);
    const Complex rhs = inner_product(a, b, Weight::InvR);
    parseval = std::max(parseval, std::abs(lhs - rhs) / (norm(a, Weight::InvR) * norm(b, Weight::InvR)));
  }
  ledger.add("synthesis inverts analysis", "U~ U psi = psi", roundtrip, tol.transform, s.grid);
  ledger.add("fast synthesis inverts fast analysis", "U~ U psi = psi (FFT route)", roundtrip_fast,
             tol.transform, s.grid);
  ledger.add("trig and FFT analysis agree", "U psi via Fc, Fs = U psi via FFT", agree,
             2.0 * tol.transform, s.grid);
  ledger.add("Parseval, r dr against k dk", "<Ua, Ub>_(k dk) = <a, b>_(r dr)", parseval,
             tol.transform, s.grid);
  ledger.add("parity covariance", "U(P psi)(kappa) = U psi(-kappa)", parity, tol.transform, s.grid);

  // Continuum accuracy on g = exp(-|λ|), whose transform is known in closed
  // form; the kink at the origin limits the discrete map to second order.
  auto continuum_error = [](const AxisGrid& grid) {
    const AxialField psi =
        sample_field([](double x) { return Complex(std::exp(-std::abs(x))); }, grid, Rep::G);
    const SpectralProfile phi = analyze(psi);
    ComplexVector got;
    ComplexVector want;
    for (std::size_t m = 0; m < phi.size(); ++m) {
      const double k = std::abs(phi.kappa(m));
      if (k > 5.0) continue;
      got.push_back(phi[m]);
      want.emplace_back(std::sqrt(2.0 / std::numbers::pi) / (1.0 + k * k) / std::sqrt(k));
    }
    return relative_max(got, want);
  };
  const double coarse = continuum_error(s.grid);
  const double fine = continuum_error(s.fine);
  ledger.add("analysis of exp(-|r|) against closed form",
             "U psi = sqrt(2/pi) / ((1 + k^2) sqrt|k|)", coarse, tol.transform, s.grid);
  ledger.add("analysis error ratio under grid doubling", "U psi = sqrt(2/pi) / ((1 + k^2) sqrt|k|)",
             fine / coarse, tol.order, s.fine);
}

void check_transforms(Ledger& ledger, const Suites& s, const Tolerances& tol,
                      std::uint64_t seed) {
  ledger.group("transforms");
  // Both halves of every probe, skipping halves that carry no signal.
  std::vector<HalfLineFunction> half;
  for (const auto& p : s.clear) {
    const double peak = max_abs(p.values());
    for (const HalfLineFunction& f : {plus_half(p), minus_half(p)}) {
      if (max_abs(f.values()) > 1e-3 * peak) half.push_back(f);
    }
  }

  double cos_pair = 0.0;
  double sin_pair = 0.0;
  double sc = 0.0;
  double cs = 0.0;
  double he_ho = 0.0;
  double ho_he = 0.0;
  double backend = 0.0;
  for (const auto& f : half) {
    const HalfLineFunction fc = trig_transform(f, TrigKind::Cos, Direction::Forward);
    const HalfLineFunction fs = trig_transform(f, TrigKind::Sin, Direction::Forward);
    cos_pair = std::max(cos_pair, half_error(trig_transform(fc, TrigKind::Cos, Direction::Inverse),
                                             f, 1.0));
    sin_pair = std::max(sin_pair, half_error(trig_transform(fs, TrigKind::Sin, Direction::Inverse),
                                             f, 1.0));
    const HalfLineFunction he = hilbert_even(f, quadrature());
    const HalfLineFunction ho = hilbert_odd(f, quadrature());
    sc = std::max(sc, half_error(trig_transform(fc, TrigKind::Sin, Direction::Inverse),
                                 combine(he, -1.0, he, 0.0), kHalfInterior));
    cs = std::max(cs, half_error(trig_transform(fs, TrigKind::Cos, Direction::Inverse), ho,
                                 kHalfInterior));
    const HalfLineFunction minus_f = combine(f, -1.0, f, 0.0);
    he_ho = std::max(he_ho, half_error(hilbert_even(ho, quadrature()), minus_f, kHilbertInterior));
    ho_he = std::max(ho_he, half_error(hilbert_odd(he, quadrature()), minus_f, kHilbertInterior));
    for (bool even : {true, false}) {
      const HilbertCrossCheck c = cross_check_hilbert(f, even, kHalfInterior);
      backend = std::max(backend, c.max_difference / (2.0 * c.max_estimate));
    }
  }
  ledger.add("cosine pair inverts", "Fc~ Fc = 1", cos_pair, tol.transform, s.grid);
  ledger.add("sine pair inverts", "Fs~ Fs = 1", sin_pair, tol.transform, s.grid);
  ledger.add("sine after cosine is minus even Hilbert", "Fs~ Fc = -He", sc, tol.transform, s.grid);
  ledger.add("cosine after sine is odd Hilbert", "Fc~ Fs = Ho", cs, tol.transform, s.grid);
  ledger.add("even Hilbert inverts odd Hilbert", "He Ho = -1", he_ho, tol.transform, s.grid);
  ledger.add("odd Hilbert inverts even Hilbert", "Ho He = -1", ho_he, tol.transform, s.grid);

  double pm = 0.0;
  double mp = 0.0;
  for (const auto& p : s.clear) {
    const AxialField minus_p = -1.0 * p;
    pm = std::max(pm, interior_relative_error(
                          hilbert_signed(hilbert_signed(p, Sign::Minus, quadrature()), Sign::Plus,
                                         quadrature()),
                          minus_p, kHilbertInterior));
    mp = std::max(mp, interior_relative_error(
                          hilbert_signed(hilbert_signed(p, Sign::Plus, quadrature()), Sign::Minus,
                                         quadrature()),
                          minus_p, kHilbertInterior));
  }
  ledger.add("H+ inverts H-", "H+ H- = -1", pm, tol.transform, s.grid);
  ledger.add("H- inverts H+", "H- H+ = -1", mp, tol.transform, s.grid);
  ledger.add("spectral and quadrature Hilbert backends agree",
             "|He, Ho (trig) - He, Ho (quadrature)| <= 2 estimate", backend, tol.estimate, s.grid);

  // Intertwining on smooth momentum-space bumps.
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_real_distribution<double> centre(3.0, 6.0);
  std::uniform_real_distribution<double> width(0.3, 0.5);
  double inter_plus = 0.0;
  double inter_minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double kc = centre(rng);
    const double w = width(rng);
    const HalfLineFunction f = sample_half_line(
        [=](double k) { return Complex(std::exp(-0.5 * (k - kc) * (k - kc) / (w * w))); }, s.grid,
        Domain::Momentum);
    HalfLineFunction kf(s.grid, Domain::Momentum);
    for (std::size_t j = 0; j < kf.size(); ++j) kf[j] = f.coordinate(j) * f[j];
    const HalfLineFunction c = trig_transform(f, TrigKind::Cos, Direction::Inverse);
    const HalfLineFunction sn = trig_transform(f, TrigKind::Sin, Direction::Inverse);
    const HalfLineFunction ck = trig_transform(kf, TrigKind::Cos, Direction::Inverse);
    const HalfLineFunction sk = trig_transform(kf, TrigKind::Sin, Direction::Inverse);
    const HalfLineFunction dc = half_derivative(c, true);
    const HalfLineFunction ds = half_derivative(sn, false);
    for (double sgn : {1.0, -1.0}) {
      const HalfLineFunction lhs = combine(ck, 1.0, sk, sgn * kI);
      const HalfLineFunction rhs = combine(dc, -sgn * kI, ds, -sgn * kI * sgn * kI);
      double& slot = sgn > 0 ? inter_plus : inter_minus;
      slot = std::max(slot, half_error(lhs, rhs, kHalfInterior));
    }
  }
  ledger.add("F+~ intertwines k with -i d/dr", "F+~ (k f) = -i d/dr F+~ f", inter_plus,
             tol.transform, s.grid);
  ledger.add("F-~ intertwines k with +i d/dr", "F-~ (k f) = +i d/dr F-~ f", inter_minus,
             tol.transform, s.grid);
}

void check_hamiltonian(Ledger& ledger, const Suites& s, const Tolerances& tol) {
  ledger.group("hamiltonian");
  const LinearOperator left = pbar0(Pbar0Form::Left, HilbertBackend::Quadrature);
  const LinearOperator right = pbar0(Pbar0Form::Right, HilbertBackend::Quadrature);
  const LinearOperator spectral = pbar0(Pbar0Form::Spectral);
  const LinearOperator p = pbar();
  double lr = 0.0;
  double ls = 0.0;
  double rs = 0.0;
  double square = 0.0;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& f : s.probes) {
    const AxialField a = left(f);
    const AxialField b = right(f);
    const AxialField c = spectral(f);
    lr = std::max(lr, interior_relative_error(a, b, kHilbertInterior));
    ls = std::max(ls, interior_relative_error(a, c, kHilbertInterior));
    rs = std::max(rs, interior_relative_error(b, c, kHilbertInterior));
    square = std::max(square, interior_relative_error(left(b), p(p(f)), kHilbertInterior));
    lowest = std::min(lowest, rayleigh_quotient(left, f, AdjointWeight::InvR));
  }
  ledger.add("pbar0 left and right forms agree", "-d_r H+ = -H- d_r", lr, tol.hamiltonian, s.grid);
  ledger.add("pbar0 left form equals |k| multiplier", "-d_r H+ = U~ |k| U", ls, tol.hamiltonian,
             s.grid);
  ledger.add("pbar0 right form equals |k| multiplier", "-H- d_r = U~ |k| U", rs, tol.hamiltonian,
             s.grid);
  ledger.add("pbar0 squares to pbar squared", "(pbar0)^2 = pbar^2", square, tol.hamiltonian, s.grid);
  ledger.add("pbar0 is positive", "<f, pbar0 f>_(r dr) >= 0", std::max(0.0, -lowest),
             tol.positivity, s.grid);

  const WindowSpec window = resolve_window(s.grid, s.window);
  const auto [first, last] = window_plateau(s.grid, window);
  if (first >= last) throw std::invalid_argument("probe window has no flat top");
  double eigen = 0.0;
  const double k_min = 20.0 / window.width;
  for (double k : {-2.0 * k_min, -k_min, k_min, 1.5 * k_min, 3.0 * k_min}) {
    const AxialField w = windowed_plane_wave(s.grid, k, window);
    for (const LinearOperator* op : {&left, &right, &spectral}) {
      const AxialField out = (*op)(w);
      double diff = 0.0;
      double scale = 0.0;
      for (std::size_t i = first; i < last; ++i) {
        diff = std::max(diff, std::abs(out[i] - std::abs(k) * w[i]));
        scale = std::max(scale, std::abs(k) * std::abs(w[i]));
      }
      eigen = std::max(eigen, diff / scale);
    }
  }
  ledger.add("windowed plane wave is a pbar0 eigenfunction", "pbar0 w_k = |k| w_k", eigen,
             tol.hamiltonian, s.grid);
}

// Pairs for the p~ checks, in F samples. Continuous pairs are smooth
// through the origin; broken pairs make λ f jump there.
std::vector<std::pair<AxialField, AxialField>> smooth_f_pairs(const AxisGrid& grid, std::size_t count,
                                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xf00dULL);
  std::uniform_real_distribution<double> centre(-2.0, 2.0);
  std::uniform_real_distribution<double> width(1.0, 2.0);
  std::uniform_real_distribution<double> carrier(-2.0, 2.0);
  std::vector<AxialField> fields;
  for (std::size_t i = 0; i < count; ++i) {
    const double c = centre(rng);
    const double w = width(rng);
    const double k = carrier(rng);
    fields.push_back(sample_field(
        [=](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (w * w)) * std::polar(1.0, k * x); },
        grid, Rep::F));
  }
  return neighbour_pairs(fields);
}

std::vector<std::pair<AxialField, AxialField>> broken_f_pairs(const AxisGrid& grid) {
  std::vector<std::pair<AxialField, AxialField>> out;
  for (double w : {1.0, 1.5, 2.0}) {
    const AxialField a = sample_field(
        [=](double x) { return Complex(std::exp(-0.5 * x * x / (w * w)) / std::abs(x)); }, grid,
        Rep::F);
    const AxialField b = sample_field(
        [=](double x) { return std::exp(-0.5 * x * x) * std::polar(1.0, w * x) / x; }, grid, Rep::F);
    out.emplace_back(a, b);
  }
  return out;
}

void check_adjoints(Ledger& ledger, const Suites& s, const Tolerances& tol, std::uint64_t seed,
                    std::size_t count) {
  ledger.group("adjoint");
  const LinearOperator pt = radial_momentum_tilde();
  ledger.add("p~ symmetric for continuous r f", "<a, p~ b>_(r^2 dr) = <p~ a, b>_(r^2 dr)",
             adjoint_residual(pt, pt, AdjointWeight::Unit, smooth_f_pairs(s.grid, count, seed)),
             tol.symmetry, s.grid);

  double surface = 0.0;
  for (const auto& [a, b] : broken_f_pairs(s.grid)) {
    const Complex defect = adjoint_defect(pt, a, b, AdjointWeight::Unit);
    const Complex expected = tilde_boundary_term(a, b);
    surface = std::max(surface, std::abs(defect - expected) / std::abs(expected));
  }
  ledger.add("p~ defect equals the origin surface term",
             "<a, p~ b> - <p~ a, b> = i [(r a)* (r b)] at 0", surface, tol.boundary, s.grid);

  const auto pairs = neighbour_pairs(s.probes);
  const LinearOperator p = pbar();
  ledger.add("pbar symmetric", "<a, pbar b>_(r dr) = <pbar a, b>_(r dr)",
             adjoint_residual(p, p, AdjointWeight::InvR, pairs), tol.adjoint, s.grid);
  const LinearOperator hp = hilbert_conjugated(Sign::Plus, HilbertBackend::Quadrature);
  const LinearOperator hm = hilbert_conjugated(Sign::Minus, HilbertBackend::Quadrature);
  ledger.add("adjoint of H+ is -H-", "<a, H+ b>_(r dr) = <-H- a, b>_(r dr)",
             adjoint_residual(hp, scale(-1.0, hm), AdjointWeight::InvR, pairs), tol.adjoint, s.grid);
  ledger.add("adjoint of H- is -H+", "<a, H- b>_(r dr) = <-H+ a, b>_(r dr)",
             adjoint_residual(hm, scale(-1.0, hp), AdjointWeight::InvR, pairs), tol.adjoint, s.grid);
  double ordering = 0.0;
  for (const auto& f : s.probes) ordering = std::max(ordering, boost_ordering_disagreement(f, tol.adjoint));
  ledger.add("boost generator orderings agree", "H- P = P H+", ordering, tol.adjoint, s.grid);
  const LinearOperator n = boost_generator();
  ledger.add("boost generator Hermitian", "<a, N b>_(r dr) = <N a, b>_(r dr)",
             adjoint_residual(n, n, AdjointWeight::InvR, pairs), tol.hermitian, s.grid);
}

void check_poincare(Ledger& ledger, const Suites& s, const Tolerances& tol) {
  ledger.group("poincare");
  struct Case {
    const char* label;
    const char* anchor;
    LinearOperator a, b, expected;
    bool clear;
  };
  const LinearOperator n = boost_generator();
  const LinearOperator local = local_boost();
  const LinearOperator p0 = pbar0(Pbar0Form::Spectral);
  const LinearOperator p = pbar();
  const OperatorPair sv = four_vector_ops(FourVector::S);
  const OperatorPair tv = four_vector_ops(FourVector::T);
  const std::vector<Case> cases{
      {"boost generator against pbar0", "[N, pbar0] = i pbar", n, p0, p, false},
      {"boost generator against pbar", "[N, pbar] = i pbar0", n, p, p0, false},
      {"local boost against s0", "[N', s0] = i s", local, sv.time, sv.axial, true},
      {"local boost against s", "[N', s] = i s0", local, sv.axial, sv.time, true},
      {"local boost against t0", "[N', t0] = i t", local, tv.time, tv.axial, true},
      {"local boost against t", "[N', t] = i t0", local, tv.axial, tv.time, true},
  };
  for (const auto& c : cases) {
    const double coarse =
        commutator_residual(c.a, c.b, c.expected, kI, c.clear ? s.compact_clear : s.compact);
    const double fine =
        commutator_residual(c.a, c.b, c.expected, kI, c.clear ? s.compact_clear_fine : s.compact_fine);
    ledger.add(c.label, c.anchor, fine, tol.poincare, s.fine);
    ledger.add(std::string(c.label) + ", refinement ratio", c.anchor,
               fine / std::max(coarse, kRoundingFloor), tol.refinement, s.fine);
  }
  const double witness =
      commutator_residual(radial_derivative_op(OriginBehavior::Continuous),
                          hilbert_conjugated(Sign::Plus), zero_operator(), 1.0, s.probes);
  ledger.add("d_r and H+ do not commute (inverse witness)", "[d_r, H+] != 0", 1.0 / witness,
             tol.witness, s.grid);
}

void check_evolution(Ledger& ledger, const Suites& s, const Tolerances& tol) {
  ledger.group("evolution");
  const AxisGrid& grid = s.grid;
  const double h = grid.spacing();
  const long travel_nodes = static_cast<long>(grid.n_half() / 4);
  const double t_max = static_cast<double>(travel_nodes) * h;
  const RealVector times = uniform_times(t_max, 11);
  const double start = -0.125 * grid.extent();
  const AxialField right = gaussian_packet(grid, {start, 1.5, 5.0});
  const AxialField mixed = right + gaussian_packet(grid, {-start, 1.2, -6.0, {0.3, 0.8}});

  auto drift = [](const EvolutionResult& r) {
    double d = 0.0;
    for (const auto& x : r.diagnostics) d = std::max(d, std::abs(x.norm / r.diagnostics[0].norm - 1.0));
    return d;
  };
  auto speed = [&](const EvolutionResult& r, std::size_t component) {
    const double x0 = centroid({r.snapshots.front()[component]});
    const double x1 = centroid({r.snapshots.back()[component]});
    return (x1 - x0) / t_max;
  };

  const EvolutionResult scalar = propagate_scalar(mixed, times);
  double min_rho = 0.0;
  double max_rho = 0.0;
  for (const auto& d : scalar.diagnostics) {
    min_rho = std::min(min_rho, d.min_density);
    max_rho = std::max(max_rho, d.max_density);
  }
  ledger.add("scalar norm conserved", "d/dt <psi, psi>_(r dr) = 0", drift(scalar), tol.norm, grid);
  ledger.add("scalar density non-negative", "rho = |g|^2 + |H g|^2 >= 0",
             std::max(0.0, -min_rho) / max_rho,
             tol.density, grid);

  auto continuity = [&](const AxisGrid& g) {
    const double e = g.extent();
    const AxialField q = gaussian_packet(g, {-0.05 * e, 1.5, 5.0}) +
                         gaussian_packet(g, {0.075 * e, 1.2, -6.0, {0.3, 0.8}});
    const double dt = 0.5 * g.spacing();
    const EvolutionResult r = propagate_scalar(q, {0.0, dt, 2.0 * dt});
    return r.diagnostics[1].continuity_residual;
  };
  const double c_coarse = continuity(grid);
  const double c_fine = continuity(s.fine);
  ledger.add("continuity residual ratio under joint refinement", "d_t rho + d_r J = 0",
             c_fine / c_coarse, tol.order, s.fine);

  const EvolutionResult one_way = propagate_scalar(right, times);
  ledger.add("scalar packet speed", "|v| = 1 for pbar0", std::abs(speed(one_way, 0) - 1.0), tol.speed,
             grid);

  const EvolutionResult weyl = propagate_weyl({right, right}, times);
  ledger.add("Weyl norm conserved", "d/dt <psi, psi>_(r dr) = 0", drift(weyl), tol.norm, grid);
  ledger.add("Weyl components move at +1 and -1", "i d_t psi = sigma3 pbar psi",
             std::max(std::abs(speed(weyl, 0) - 1.0), std::abs(speed(weyl, 1) + 1.0)), tol.speed,
             grid);

  const AxialField zero(grid, Rep::G);
  const EvolutionResult maxwell = propagate_maxwell({right, kI * right, zero}, times);
  ledger.add("Maxwell packet speed", "i d_t F = i pbar x F, F3 = 0", std::abs(speed(maxwell, 0) - 1.0),
             tol.speed, grid);
  ledger.add("Maxwell packet translates without dispersion", "F(r, t) = F(r - t, 0)",
             std::max(interior_relative_error(maxwell.snapshots.back()[0],
                                              shift_nodes(right, travel_nodes), kHalfInterior),
                      interior_relative_error(maxwell.snapshots.back()[1],
                                              shift_nodes(kI * right, travel_nodes), kHalfInterior)),
             tol.shape, grid);

  const RealVector short_times = uniform_times(1.0, 5);
  const EvolutionResult a = propagate_scalar(right, short_times, Method::Spectral);
  const EvolutionResult b = propagate_scalar(right, short_times, Method::Rk4);
  ledger.add("RK4 matches spectral propagation", "i d_t psi = pbar0 psi",
             interior_relative_error(b.snapshots.back()[0], a.snapshots.back()[0], kHalfInterior),
             tol.rk4, grid);
  // RK4 damps |R(iz)| = 1 - z^6/144 per step, so its norm check uses a
  // carrier at a fifth of the largest grid momentum.
  const double k_rk4 = 0.2 * std::numbers::pi / h;
  const AxialField moderate = gaussian_packet(grid, {start, 6.0 / k_rk4, k_rk4});
  ledger.add("RK4 norm conserved", "d/dt <psi, psi>_(r dr) = 0",
             drift(propagate_scalar(moderate, times, Method::Rk4)), tol.norm_rk4, grid);
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    if (length(v) > 1e-3) return normalized(v);
  }
}

void check_kinematics(Ledger& ledger, const Suites& s, const Tolerances& tol, std::uint64_t seed) {
  ledger.group("kinematics");
  std::mt19937_64 rng(seed ^ 0xabe1ULL);
  std::uniform_real_distribution<double> speed(-0.95, 0.95);
  std::uniform_real_distribution<double> magnitude(0.1, 10.0);
  double null_err = 0.0;
  double aberration = 0.0;
  double doppler = 0.0;
  double composition = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vec3 khat = random_unit(rng);
    const Vec3 axis = random_unit(rng);
    const double v = speed(rng);
    const double mag = magnitude(rng);
    const BoostParams b(v, axis);
    const FourMomentum k = null_momentum(mag * khat);
    const FourMomentum kb = boost_four_momentum(k, b);
    null_err = std::max(null_err, std::abs(kb.k0 - length(kb.k)) / kb.k0);

    const Vec3 seen = observed_direction(khat, b);
    aberration = std::max(aberration,
                          std::abs(dot(seen, b.axis()) - aberration_cos(dot(khat, b.axis()), v)));

    const double g = b.gamma();
    for (double side : {1.0, -1.0}) {
      const FourMomentum kp = boost_four_momentum(null_momentum(side * mag * b.axis()), b);
      const double exact = g * (1.0 - side * v);
      doppler = std::max(doppler, std::abs(kp.k0 / mag - exact) / exact);
      doppler = std::max(doppler,
                         std::abs(doppler_factor(side * b.axis(), b) - exact) / exact);
    }

    const double v2 = speed(rng);
    const FourMomentum twice = boost_four_momentum(kb, BoostParams(v2, axis));
    const FourMomentum once = boost_four_momentum(k, BoostParams((v + v2) / (1.0 + v * v2), axis));
    composition = std::max(composition, length(twice.k - once.k) / once.k0);
    composition = std::max(composition, std::abs(twice.k0 - once.k0) / once.k0);
  }
  ledger.add("boosts keep null momenta null", "k0' = |k'|", null_err, tol.kinematics, s.grid);
  ledger.add("aberration formula matches boosted direction",
             "cos t' = (cos t + v) / (1 + v cos t)", aberration, tol.aberration, s.grid);
  ledger.add("parallel Doppler factor", "k'/k = gamma (1 - v)", doppler, tol.doppler, s.grid);
  ledger.add("collinear boosts compose", "B(v2) B(v1) = B((v1 + v2) / (1 + v1 v2))", composition,
             tol.kinematics, s.grid);

  // Carrier at a fifth of the grid's largest momentum, so a Doppler factor
  // of 2 keeps the spectrum on the grid.
  const double k0 = 0.2 * std::numbers::pi / s.grid.spacing();
  const SpectralProfile phi = analyze_fast(gaussian_packet(s.grid, {0.0, 6.0 / k0, k0}));
  const double before = spectral_inner_product(phi, phi).real();
  double beam_drift = 0.0;
  const std::vector<std::pair<double, Vec3>> boosts{
      {0.6, {0.0, 0.0, 1.0}}, {-0.6, {0.0, 0.0, 1.0}}, {0.5, {1.0, 1.0, 1.0}}};
  for (const auto& [v, axis] : boosts) {
    double after = 0.0;
    for (const auto& beam : boost_beam({{0.0, 0.0, 1.0}, phi}, BoostParams(v, axis))) {
      after += spectral_inner_product(beam.profile, beam.profile).real();
    }
    beam_drift = std::max(beam_drift, std::abs(after / before - 1.0));
  }
  ledger.add("boosted beam keeps its dk/k norm", "int |phi'|^2 dk'/k' = int |phi|^2 dk/k",
             beam_drift, tol.beam_norm, s.grid);
}

void check_lorentz_scalar(Ledger& ledger, const Suites& s, const Tolerances& tol) {
  ledger.group("lorentz-scalar");
  const AxisGrid& grid = s.fine;
  const AxialField psi = gaussian_packet(grid, {0.0, 1.0, 8.0});
  const SpectralProfile phi = analyze_fast(psi);
  const BeamState beam{{0.0, 0.0, 1.0}, phi};
  const Vec3 axis{0.0, 0.0, 1.0};
  const SpectralProfile nk = momentum_boost_generator(phi);

  ledger.add("N_k spectral against finite difference", "N_k phi = i |k| d phi/dk",
             relative_max(momentum_boost_generator(phi, DerivativeMethod::FiniteDifference).values(),
                          nk.values()),
             tol.derivative, grid);

  double norm0 = 0.0;
  for (std::size_t m = 0; m < phi.size(); ++m) norm0 += std::norm(phi[m]) / std::abs(phi.kappa(m));
  std::vector<double> constants;
  for (double dv : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
    const SpectralProfile boosted = boost_beam(beam, BoostParams(dv, axis))[0].profile;
    double r = 0.0;
    for (std::size_t m = 0; m < phi.size(); ++m) {
      const Complex linear = phi[m] - kI * dv * nk[m];
      r += std::norm(boosted[m] - linear) / std::abs(phi.kappa(m));
    }
    constants.push_back(std::sqrt(r / norm0) / (dv * dv));
  }
  double stability = 0.0;
  for (std::size_t i = 1; i < constants.size(); ++i) {
    stability = std::max(stability, std::abs(constants[i] / constants[i - 1] - 1.0));
  }
  ledger.add("finite boost minus generator is O(dv^2), constant stable",
             "B(dv) phi = (1 - i dv N_k) phi + C dv^2", stability, tol.stability, grid);

  const double dv = 1e-2;
  const SpectralProfile plus = boost_beam(beam, BoostParams(dv, axis))[0].profile;
  const SpectralProfile minus = boost_beam(beam, BoostParams(-dv, axis))[0].profile;
  SpectralProfile diff(grid);
  for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = (plus[m] - minus[m]) / (2.0 * dv);
  const AxialField lhs = synthesize_fast(diff);
  const AxialField rhs = -kI * boost_generator()(convert_rep(psi, Rep::G));
  ledger.add("momentum and configuration boost generators match", "U~ N_k U = N",
             interior_relative_error(lhs, rhs, kHilbertInterior), tol.generator, grid);
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n_half < 32) throw std::invalid_argument("grid size must be at least 32");
  if (!(c.extent > 0.0) || !std::isfinite(c.extent)) {
    throw std::invalid_argument("extent must be positive");
  }
  if (c.probe_count < 2) throw std::invalid_argument("probe count must be at least 2");
  if (!(c.tol_scale >= 0.0) || !std::isfinite(c.tol_scale)) {
    throw std::invalid_argument("tolerance scale must be non-negative");
  }
  if (c.window_width < 0.0 || c.window_width > c.extent) {
    throw std::invalid_argument("window width must lie in [0, extent]");
  }
  const double width = c.window_width > 0.0 ? c.window_width : 0.25 * c.extent;
  if (c.window_ramp < 0.0 || 2.0 * c.window_ramp >= width) {
    throw std::invalid_argument("window ramp must lie in [0, width/2)");
  }
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

std::size_t VerificationReport::failed() const { return entries.size() - passed(); }

const VerificationEntry* VerificationReport::find(const std::string& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

VerificationReport run_verification(const RunConfig& config) {
  validate(config);
  VerificationReport report;
  report.config = config;
  ScopedWarningSink sink([&report](const std::string& message) {
    if (std::find(report.warnings.begin(), report.warnings.end(), message) == report.warnings.end()) {
      report.warnings.push_back(message);
    }
  });
  Ledger ledger(config, report);
  const Suites suites = make_suites(config);
  const Tolerances& tol = config.tolerances;
  check_unitarity(ledger, suites, tol);
  check_transforms(ledger, suites, tol, config.seed);
  check_hamiltonian(ledger, suites, tol);
  check_adjoints(ledger, suites, tol, config.seed, config.probe_count);
  check_poincare(ledger, suites, tol);
  check_evolution(ledger, suites, tol);
  check_kinematics(ledger, suites, tol, config.seed);
  check_lorentz_scalar(ledger, suites, tol);
  return report;
}

std::string report_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  const RunConfig& c = report.config;
  ordered_json j;
  j["config"] = {{"n_half", c.n_half},           {"extent", c.extent},
                 {"seed", c.seed},               {"probe_count", c.probe_count},
                 {"window_width", c.window_width}, {"window_ramp", c.window_ramp},
                 {"tol_scale", c.tol_scale}};
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"label", e.label},
                       {"anchor", e.anchor},
                       {"group", e.group},
                       {"residual", e.residual},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass},
                       {"n_half", e.n_half},
                       {"extent", e.extent}});
  }
  j["entries"] = std::move(entries);
  j["summary"] = {{"total", report.entries.size()},
                  {"passed", report.passed()},
                  {"failed", report.failed()}};
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

void print_report(std::ostream& out, const VerificationReport& report) {
  std::string group;
  char line[256];
  for (const auto& e : report.entries) {
    if (e.group != group) {
      group = e.group;
      out << "\n[" << group << "]\n";
    }
    std::snprintf(line, sizeof line, "  %-62s %11.3e %11.3e  %s\n", e.label.c_str(), e.residual,
                  e.tolerance, e.pass ? "pass" : "FAIL");
    out << line;
  }
  out << "\n" << report.passed() << " passed, " << report.failed() << " failed, "
      << report.entries.size() << " total\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
}

void write_report(const VerificationReport& report) {
  const auto& dir = report.config.out;
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream json(dir / "report.json", std::ios::binary);
  std::ofstream text(dir / "report.txt", std::ios::binary);
  if (!json || !text) throw std::runtime_error("cannot write report into " + dir.string());
  json << report_json(report);
  print_report(text, report);
  if (!json || !text) throw std::runtime_error("failed writing report into " + dir.string());
}

}  // namespace axial
