// axial: command-line front end.
//
//   axial verify    [--probes N --window-width W --window-ramp R]
//   axial propagate --kind scalar|wave|weyl|maxwell [--in FILE ...]
//   axial boost     --v V --axis x|y|z|X,Y,Z --in beams.json --out out.json
//   axial transform --in state.csv --out spectral.csv [--inverse [--rep F|G]]
//
// Exit status: 0 success, 1 verification failure or runtime error, 2 usage.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axial/evolution.hpp"
#include "axial/grid.hpp"
#include "axial/io.hpp"
#include "axial/operators.hpp"
#include "axial/probes.hpp"
#include "axial/relativity.hpp"
#include "axial/spectral_map.hpp"
#include "axial/verify.hpp"

namespace fs = std::filesystem;
using namespace axial;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::size_t grid_size = 256;
  double extent = 40.0;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  std::string out;
};

struct VerifyArgs {
  std::size_t probes = 12;
  double window_width = 0.0;
  double window_ramp = 0.0;
};

struct PropagateArgs {
  std::string kind = "scalar";
  double k0 = 8.0;
  double width = 4.0;
  double t_max = 5.0;
  std::size_t snapshots = 6;
  std::string method = "spectral";
  std::vector<std::string> inputs;
};

struct BoostArgs {
  double v = 0.0;
  std::string axis = "z";
  std::string in;
};

struct TransformArgs {
  std::string in;
  bool inverse = false;
  std::string rep = "F";
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  RunConfig config;
  config.n_half = g.grid_size;
  config.extent = g.extent;
  config.seed = g.seed;
  config.tol_scale = g.tol_scale;
  config.probe_count = a.probes;
  config.window_width = a.window_width;
  config.window_ramp = a.window_ramp;
  config.out = g.out;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = run_verification(config);
  print_report(std::cout, report);
  write_report(report);
  return report.all_passed() ? 0 : 1;
}

std::string snapshot_name(std::size_t t, const std::string& component) {
  char buf[64];
  if (component.empty()) {
    std::snprintf(buf, sizeof buf, "snapshot_%03zu.csv", t);
  } else {
    std::snprintf(buf, sizeof buf, "snapshot_%03zu_%s.csv", t, component.c_str());
  }
  return buf;
}

std::vector<AxialField> load_inputs(const std::vector<std::string>& paths, std::size_t expected,
                                    const std::string& kind) {
  if (paths.size() != expected) {
    throw UsageError("--kind " + kind + " takes " + std::to_string(expected) + " --in file(s), got " +
                     std::to_string(paths.size()));
  }
  std::vector<AxialField> out;
  for (const auto& p : paths) out.push_back(convert_rep(load_field(p), Rep::G));
  for (std::size_t i = 1; i < out.size(); ++i) require_same_grid(out[0].grid(), out[i].grid());
  return out;
}

int run_propagate(const Globals& g, const PropagateArgs& a) {
  if (a.snapshots == 0) throw UsageError("--snapshots must be positive");
  if (!(a.t_max >= 0.0)) throw UsageError("--t-max must be non-negative");
  if (!(a.width > 0.0)) throw UsageError("--width must be positive");
  const Method method = a.method == "rk4" ? Method::Rk4 : Method::Spectral;
  if (method == Method::Rk4 && a.kind != "scalar") {
    throw UsageError("--method rk4 is available for --kind scalar only");
  }
  const RealVector times = uniform_times(a.t_max, a.snapshots);
  const AxisGrid grid = make_grid(g.grid_size, g.extent);
  auto packet = [&] { return gaussian_packet(grid, {0.0, a.width, a.k0}); };

  EvolutionResult result;
  std::vector<std::string> names;
  if (a.kind == "scalar") {
    const AxialField psi = a.inputs.empty() ? packet() : load_inputs(a.inputs, 1, a.kind)[0];
    result = propagate_scalar(psi, times, method);
    names = {""};
  } else if (a.kind == "wave") {
    // ψ alone starts a positive-frequency solution, ∂_t ψ = -i pbar0 ψ.
    const AxialField psi = a.inputs.empty() ? packet() : load_inputs(a.inputs, 1, a.kind)[0];
    result = propagate_wave(psi, Complex(0.0, -1.0) * pbar0(Pbar0Form::Spectral)(psi), times);
    names = {"psi", "dpsi_dt"};
  } else if (a.kind == "weyl") {
    SpinorField s{packet(), AxialField(grid, Rep::G)};
    if (!a.inputs.empty()) {
      auto in = load_inputs(a.inputs, 2, a.kind);
      s = {in[0], in[1]};
    }
    result = propagate_weyl(s, times);
    names = {"upper", "lower"};
  } else if (a.kind == "maxwell") {
    VectorField3 f{packet(), Complex(0.0, 1.0) * packet(), AxialField(grid, Rep::G)};
    if (!a.inputs.empty()) {
      auto in = load_inputs(a.inputs, 3, a.kind);
      f = {in[0], in[1], in[2]};
    }
    result = propagate_maxwell(f, times);
    names = {"f1", "f2", "f3"};
  } else {
    throw UsageError("--kind must be scalar, wave, weyl or maxwell");
  }

  const fs::path dir = g.out.empty() ? fs::path("propagate_out") : fs::path(g.out);
  fs::create_directories(dir);
  for (std::size_t t = 0; t < result.snapshots.size(); ++t) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      save_field(dir / snapshot_name(t, names[c]), result.snapshots[t][c]);
    }
  }
  std::ofstream diag(dir / "diagnostics.csv", std::ios::binary);
  if (!diag) throw std::runtime_error("cannot write " + (dir / "diagnostics.csv").string());
  write_diagnostics_csv(diag, result);
  std::cout << "wrote " << result.snapshots.size() << " snapshots to " << dir.string() << "\n";
  return 0;
}

Vec3 parse_axis(const std::string& text) {
  if (text == "x") return {1.0, 0.0, 0.0};
  if (text == "y") return {0.0, 1.0, 0.0};
  if (text == "z") return {0.0, 0.0, 1.0};
  Vec3 v{};
  std::stringstream ss(text);
  std::string part;
  std::size_t n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) throw UsageError("--axis takes x, y, z or three comma-separated numbers");
    try {
      std::size_t used = 0;
      v[n] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--axis component is not a number: '" + part + "'");
    }
    ++n;
  }
  if (n != 3) throw UsageError("--axis takes x, y, z or three comma-separated numbers");
  return v;
}

int run_boost(const Globals& g, const BoostArgs& a) {
  if (a.in.empty() || g.out.empty()) throw UsageError("boost needs --in and --out");
  const Vec3 axis = parse_axis(a.axis);
  std::optional<BoostParams> params;
  try {
    params.emplace(a.v, axis);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<BeamState> out;
  for (const auto& beam : load_beams(a.in)) {
    for (auto& b : boost_beam(beam, *params)) out.push_back(std::move(b));
  }
  save_beams(g.out, out);
  std::cout << "wrote " << out.size() << " beam(s) to " << g.out << "\n";
  return 0;
}

int run_transform(const Globals& g, const TransformArgs& a) {
  if (a.in.empty() || g.out.empty()) throw UsageError("transform needs --in and --out");
  if (a.rep != "F" && a.rep != "G") throw UsageError("--rep must be F or G");
  if (a.inverse) {
    const AxialField psi = synthesize(load_profile(a.in));
    save_field(g.out, convert_rep(psi, a.rep == "F" ? Rep::F : Rep::G));
  } else {
    save_profile(g.out, analyze(load_field(a.in)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axial energy-momentum operators: verification, propagation, boosts, transforms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--grid-size", g.grid_size, "Half-grid node count n_half")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20));
  app.add_option("--extent", g.extent, "Half-length L of the axis")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Probe suite seed");
  app.add_option("--tol-scale", g.tol_scale, "Multiplier on every tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Output directory (verify, propagate) or file (boost, transform)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the identity ledger");
  verify->add_option("--probes", va.probes, "Probe count")->check(CLI::Range(2, 1000));
  verify->add_option("--window-width", va.window_width, "Plane-wave window width (0: extent/4)");
  verify->add_option("--window-ramp", va.window_ramp, "Window taper length (0: 3/8 of width)");

  PropagateArgs pa;
  auto* propagate = app.add_subcommand("propagate", "Evolve a packet and write snapshots");
  propagate->add_option("--kind", pa.kind, "scalar, wave, weyl or maxwell")
      ->check(CLI::IsMember({"scalar", "wave", "weyl", "maxwell"}));
  propagate->add_option("--k0", pa.k0, "Packet carrier");
  propagate->add_option("--width", pa.width, "Packet Gaussian width");
  propagate->add_option("--t-max", pa.t_max, "Final time");
  propagate->add_option("--snapshots", pa.snapshots, "Number of snapshots, including t = 0");
  propagate->add_option("--method", pa.method, "spectral or rk4")
      ->check(CLI::IsMember({"spectral", "rk4"}));
  propagate->add_option("--in", pa.inputs, "Initial state CSV, one per component");

  BoostArgs ba;
  auto* boost = app.add_subcommand("boost", "Boost a beam file");
  boost->add_option("--v", ba.v, "Boost speed, |v| < 1")->required();
  boost->add_option("--axis", ba.axis, "x, y, z or X,Y,Z");
  boost->add_option("--in", ba.in, "Input beams JSON")->required();

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "State CSV to spectral CSV and back");
  transform->add_option("--in", ta.in, "Input file")->required();
  transform->add_flag("--inverse", ta.inverse, "Spectral CSV to state CSV");
  transform->add_option("--rep", ta.rep, "Rep of the inverse output, F or G");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return run_verify(g, va);
    if (*propagate) return run_propagate(g, pa);
    if (*boost) return run_boost(g, ba);
    if (*transform) return run_transform(g, ta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
