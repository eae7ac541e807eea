#pragma once

// CSV state files, spectral CSV files and beam JSON files.
//
// State CSV:     "# rep=F|G n_half=<int> h=<float>" then "lambda,re,im" rows
// Spectral CSV:  "# dk=<float>" then "kappa,re,im" rows
// Beams JSON:    {"beams":[{"direction":[x,y,z],"kappa":[...],"re":[...],"im":[...]}]}

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "axial/evolution.hpp"
#include "axial/grid.hpp"
#include "axial/relativity.hpp"

namespace axial {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// %.17g, so values round-trip exactly.
std::string format_double(double x);

void write_field_csv(std::ostream& out, const AxialField& field);
AxialField read_field_csv(std::istream& in, const std::string& source = "<stream>");

void write_profile_csv(std::ostream& out, const SpectralProfile& profile);
SpectralProfile read_profile_csv(std::istream& in, const std::string& source = "<stream>");

void write_beams_json(std::ostream& out, const std::vector<BeamState>& beams);
std::vector<BeamState> read_beams_json(std::istream& in, const std::string& source = "<stream>");

/// "time,norm,min_rho,continuity_residual" rows.
void write_diagnostics_csv(std::ostream& out, const EvolutionResult& result);

// File wrappers; throw std::runtime_error on I/O failure.
void save_field(const std::filesystem::path& path, const AxialField& field);
AxialField load_field(const std::filesystem::path& path);
void save_profile(const std::filesystem::path& path, const SpectralProfile& profile);
SpectralProfile load_profile(const std::filesystem::path& path);
void save_beams(const std::filesystem::path& path, const std::vector<BeamState>& beams);
std::vector<BeamState> load_beams(const std::filesystem::path& path);

}  // namespace axial
