#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "axial/io.hpp"
#include "axial/probes.hpp"
#include "axial/spectral_map.hpp"

namespace fs = std::filesystem;
using namespace axial;

namespace {

struct Run {
  int code;
  std::string output;
};

// Runs the CLI with stdout and stderr captured to a file.
Run cli(const std::string& args) {
  const fs::path log = "cli_test_output.txt";
  const std::string cmd = std::string(AXIAL_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("cli_test_work") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

double max_abs_diff(const AxialField& a, const AxialField& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs(const AxialField& a) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i]));
  return d;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("propagate writes snapshots and diagnostics") {
  const fs::path dir = fresh_dir("propagate");
  const Run r = cli("--out " + dir.string() + " propagate --kind scalar --t-max 5 --snapshots 6");
  REQUIRE(r.code == 0);
  for (int t = 0; t < 6; ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%03d.csv", t);
    CHECK(fs::exists(dir / name));
  }
  std::ifstream diag(dir / "diagnostics.csv");
  std::string line;
  std::getline(diag, line);
  CHECK(line.rfind("time", 0) == 0);
  double previous = -1.0;
  int rows = 0;
  while (std::getline(diag, line)) {
    const double t = std::stod(line.substr(0, line.find(',')));
    CHECK(t > previous);
    previous = t;
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(previous == doctest::Approx(5.0));
}

TEST_CASE("multi-component kinds name their files") {
  for (const std::string kind : {"wave", "weyl", "maxwell"}) {
    const fs::path dir = fresh_dir("kind_" + kind);
    REQUIRE(cli("--out " + dir.string() + " propagate --kind " + kind + " --snapshots 3").code == 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".csv";
    const std::size_t components = kind == "maxwell" ? 3 : 2;
    CHECK(files == 3 * components + 1);
  }
}

TEST_CASE("maxwell rejects a longitudinal component") {
  const fs::path dir = fresh_dir("maxwell_bad");
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField u = gaussian_packet(g, {0.0, 4.0, 8.0});
  save_field(dir / "f1.csv", u);
  save_field(dir / "f2.csv", Complex(0.0, 1.0) * u);
  save_field(dir / "f3.csv", 0.1 * u);
  const Run r = cli("--out " + (dir / "out").string() + " propagate --kind maxwell --in " +
                    (dir / "f1.csv").string() + " --in " + (dir / "f2.csv").string() + " --in " +
                    (dir / "f3.csv").string());
  CHECK(r.code == 1);
  CHECK(r.output.find("F3") != std::string::npos);
}

TEST_CASE("rk4 and spectral propagation agree") {
  const fs::path a = fresh_dir("spectral");
  const fs::path b = fresh_dir("rk4");
  const std::string common = " propagate --kind scalar --k0 4 --t-max 4 --snapshots 3";
  REQUIRE(cli("--out " + a.string() + common).code == 0);
  REQUIRE(cli("--out " + b.string() + common + " --method rk4").code == 0);
  const AxialField s = load_field(a / "snapshot_002.csv");
  const AxialField k = load_field(b / "snapshot_002.csv");
  CHECK(max_abs_diff(s, k) / max_abs(s) < 1e-2);
}

TEST_CASE("boost with v = 0 returns the input beam") {
  const fs::path dir = fresh_dir("boost");
  const AxisGrid g = make_grid(128, 20.0);
  const SpectralProfile p = analyze_fast(gaussian_packet(g, {0.0, 1.0, 4.0}));
  save_beams(dir / "in.json", {{{0.0, 0.0, 1.0}, p}});
  REQUIRE(cli("--out " + (dir / "out.json").string() + " boost --v 0 --in " +
              (dir / "in.json").string()).code == 0);
  const auto out = load_beams(dir / "out.json");
  REQUIRE(out.size() == 1);
  for (std::size_t m = 0; m < p.size(); ++m) CHECK(std::abs(out[0].profile[m] - p[m]) <= 1e-14);

  REQUIRE(cli("--out " + (dir / "side.json").string() + " boost --v 0.5 --axis 1,0,0 --in " +
              (dir / "in.json").string()).code == 0);
  CHECK(load_beams(dir / "side.json").size() == 2);
  CHECK(cli("--out " + (dir / "x.json").string() + " boost --v 1.2 --in " +
            (dir / "in.json").string()).code == 2);
}

TEST_CASE("transform round trip") {
  const fs::path dir = fresh_dir("transform");
  const AxisGrid g = make_grid(256, 40.0);
  const AxialField psi = gaussian_packet(g, {3.0, 1.5, 2.0}, Rep::F);
  save_field(dir / "state.csv", psi);
  REQUIRE(cli("--grid-size 256 --out " + (dir / "spec.csv").string() + " transform --in " +
              (dir / "state.csv").string()).code == 0);
  REQUIRE(cli("--out " + (dir / "back.csv").string() + " transform --inverse --in " +
              (dir / "spec.csv").string()).code == 0);
  const AxialField back = load_field(dir / "back.csv");
  CHECK(back.rep() == Rep::F);
  CHECK(interior_relative_error(back, psi, 0.8) < 1e-2);
}

TEST_CASE("malformed input names the line") {
  const fs::path dir = fresh_dir("malformed");
  {
    std::ofstream f(dir / "bad.csv");
    f << "# rep=G n_half=8 h=0.5\nlambda,re,im\n-3.75,1,0\n-3.25,oops,0\n";
  }
  const Run r = cli("--out " + (dir / "o.csv").string() + " transform --in " + (dir / "bad.csv").string());
  CHECK(r.code == 1);
  CHECK(r.output.find("bad.csv:4:") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("--help").code == 0);
  CHECK(cli("").code == 2);
  CHECK(cli("verify --no-such-flag").code == 2);
  CHECK(cli("--grid-size 4 verify").code == 2);
  CHECK(cli("propagate --kind photon").code == 2);
  CHECK(cli("--tol-scale -1 verify").code == 2);
  CHECK(cli("--tol-scale 0 verify").code == 1);
}

}
