#pragma once

// The identity ledger: every operator identity of the library evaluated on
// deterministic probe suites, with a residual, a tolerance and a verdict.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace axial {

/// Tolerances per identity class, before scaling by RunConfig::tol_scale.
struct Tolerances {
  double transform = 1e-2;     ///< unitarity, trig pairs, Hilbert algebra
  double estimate = 1.0;       ///< backend difference over twice the error estimate
  double hamiltonian = 2e-2;   ///< pbar0 forms, square, eigen-relation
  double positivity = 1e-3;    ///< negative part of Rayleigh quotients
  double symmetry = 1e-3;      ///< p~ under the r² dr product
  double boundary = 0.1;       ///< surface term reproduction
  double adjoint = 1e-2;       ///< pbar, conjugated H± adjoints
  double hermitian = 5e-2;     ///< boost generator under the r dr product
  double poincare = 5e-2;      ///< boost commutators
  double refinement = 1.0;     ///< residual ratio fine/coarse
  double witness = 2.0;        ///< 1/residual of a nonzero commutator, i.e. > 10 × poincare
  double order = 0.2872;       ///< error ratio under grid doubling, 2^-1.8
  double norm = 1e-10;         ///< norm drift of spectral propagation
  double norm_rk4 = 1e-4;      ///< norm drift of RK4 at step h/4
  double density = 1e-6;       ///< negative part of ρ relative to max ρ
  double speed = 2e-2;         ///< |speed - 1|
  double shape = 1e-8;         ///< dispersionless translation
  double rk4 = 1e-2;           ///< RK4 against spectral propagation
  double kinematics = 1e-10;   ///< null preservation, composition
  double aberration = 1e-12;
  double doppler = 1e-12;
  double beam_norm = 5e-3;     ///< 1/k norm drift of boosted beams
  double stability = 0.1;      ///< |C(δv/2)/C(δv) - 1|
  double generator = 5e-2;     ///< configuration vs momentum generator
  double derivative = 1e-6;    ///< spectral vs finite-difference N_k
};

struct RunConfig {
  std::size_t n_half = 256;  ///< refinement checks also use 2 n_half
  double extent = 40.0;
  std::uint64_t seed = 1;
  std::size_t probe_count = 12;
  double window_width = 0.0;  ///< 0 means extent/4
  double window_ramp = 0.0;   ///< 0 means 3/8 of the width
  double tol_scale = 1.0;
  Tolerances tolerances{};
  std::filesystem::path out;  ///< empty: no files written
};

/// Throws std::invalid_argument for out-of-range values.
void validate(const RunConfig& config);

struct VerificationEntry {
  std::string label;
  std::string anchor;  ///< the identity checked, as a formula
  std::string group;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;  ///< residual <= tolerance (false for NaN)
  std::size_t n_half = 0;
  double extent = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<VerificationEntry> entries;
  std::vector<std::string> warnings;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  const VerificationEntry* find(const std::string& label) const;
};

VerificationReport run_verification(const RunConfig& config);

/// Machine-readable report; identical inputs give identical bytes.
std::string report_json(const VerificationReport& report);
/// Human table: label, residual, tolerance, verdict.
void print_report(std::ostream& out, const VerificationReport& report);

/// Writes report.json and report.txt into config.out (created if needed).
void write_report(const VerificationReport& report);

}  // namespace axial
