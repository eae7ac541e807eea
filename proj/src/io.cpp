#include "axial/io.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace axial {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// Values from the "key=value" tokens of a header line.
std::string header_value(const std::string& header, const std::string& key, const std::string& source) {
  std::istringstream tokens(header.substr(1));
  std::string tok;
  while (tokens >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos && tok.substr(0, eq) == key) return tok.substr(eq + 1);
  }
  throw ParseError(source, 1, "header is missing '" + key + "='");
}

double parse_number(const std::string& text, const std::string& source, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(source, line, "not a number: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw ParseError(source, line, "not a number: '" + text + "'");
  return v;
}

struct Row {
  double x;
  Complex v;
  std::size_t line;
};

// Reads "x,re,im" rows after the header. Blank lines are skipped; a line
// starting with a letter is accepted once as a column header.
std::vector<Row> read_rows(std::istream& in, const std::string& source, std::string& header) {
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) throw ParseError(source, 1, "empty file");
  ++number;
  if (line.empty() || line[0] != '#') throw ParseError(source, 1, "expected a '#' header line");
  header = line;
  std::vector<Row> rows;
  bool seen_columns = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!seen_columns && rows.empty() && std::isalpha(static_cast<unsigned char>(line[0]))) {
      seen_columns = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 3) {
      throw ParseError(source, number, "expected 3 comma-separated values, found " +
                                           std::to_string(cells.size()));
    }
    rows.push_back({parse_number(cells[0], source, number),
                    {parse_number(cells[1], source, number), parse_number(cells[2], source, number)},
                    number});
  }
  return rows;
}

}  // namespace

void write_field_csv(std::ostream& out, const AxialField& field) {
  const auto& grid = field.grid();
  out << "# rep=" << (field.rep() == Rep::F ? "F" : "G") << " n_half=" << grid.n_half()
      << " h=" << format_double(grid.spacing()) << "\n";
  out << "lambda,re,im\n";
  for (std::size_t i = 0; i < field.size(); ++i) {
    out << format_double(grid.node(i)) << "," << format_double(field[i].real()) << ","
        << format_double(field[i].imag()) << "\n";
  }
}

AxialField read_field_csv(std::istream& in, const std::string& source) {
  std::string header;
  const std::vector<Row> rows = read_rows(in, source, header);
  const std::string rep_text = header_value(header, "rep", source);
  if (rep_text != "F" && rep_text != "G") throw ParseError(source, 1, "rep must be F or G");
  const double n_value = parse_number(header_value(header, "n_half", source), source, 1);
  const double h = parse_number(header_value(header, "h", source), source, 1);
  if (!(n_value >= 1.0) || n_value != std::floor(n_value)) {
    throw ParseError(source, 1, "n_half must be a positive integer");
  }
  const auto n_half = static_cast<std::size_t>(n_value);
  if (!(h > 0.0)) throw ParseError(source, 1, "h must be positive");
  AxisGrid grid = [&]() {
    try {
      return AxisGrid(n_half, h * static_cast<double>(n_half));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, 1, e.what());
    }
  }();
  if (rows.size() != grid.size()) {
    throw ParseError(source, rows.empty() ? 1 : rows.back().line,
                     "expected " + std::to_string(grid.size()) + " rows, found " +
                         std::to_string(rows.size()));
  }
  ComplexVector values(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i].x - grid.node(i)) > 1e-9 * h) {
      throw ParseError(source, rows[i].line, "lambda does not match grid node " + format_double(grid.node(i)));
    }
    values[i] = rows[i].v;
  }
  return AxialField(grid, rep_text == "F" ? Rep::F : Rep::G, std::move(values));
}

void write_profile_csv(std::ostream& out, const SpectralProfile& profile) {
  out << "# dk=" << format_double(profile.dkappa()) << "\n";
  out << "kappa,re,im\n";
  for (std::size_t m = 0; m < profile.size(); ++m) {
    out << format_double(profile.kappa(m)) << "," << format_double(profile[m].real()) << ","
        << format_double(profile[m].imag()) << "\n";
  }
}

SpectralProfile read_profile_csv(std::istream& in, const std::string& source) {
  std::string header;
  const std::vector<Row> rows = read_rows(in, source, header);
  const double dk = parse_number(header_value(header, "dk", source), source, 1);
  if (!(dk > 0.0)) throw ParseError(source, 1, "dk must be positive");
  if (rows.size() % 2 != 0 || rows.empty()) {
    throw ParseError(source, rows.empty() ? 1 : rows.back().line, "spectral file needs an even, nonzero row count");
  }
  const std::size_t n_half = rows.size() / 2;
  AxisGrid grid = [&]() {
    try {
      return AxisGrid(n_half, std::numbers::pi / dk);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, 1, e.what());
    }
  }();
  ComplexVector values(rows.size());
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (std::abs(rows[m].x - grid.kappa(m)) > 1e-9 * dk) {
      throw ParseError(source, rows[m].line, "kappa does not match grid node " + format_double(grid.kappa(m)));
    }
    values[m] = rows[m].v;
  }
  return SpectralProfile(grid, std::move(values));
}

void write_beams_json(std::ostream& out, const std::vector<BeamState>& beams) {
  nlohmann::ordered_json doc;
  doc["beams"] = nlohmann::ordered_json::array();
  for (const auto& b : beams) {
    nlohmann::ordered_json j;
    j["direction"] = {b.direction[0], b.direction[1], b.direction[2]};
    std::vector<double> kappa, re, im;
    for (std::size_t m = 0; m < b.profile.size(); ++m) {
      kappa.push_back(b.profile.kappa(m));
      re.push_back(b.profile[m].real());
      im.push_back(b.profile[m].imag());
    }
    j["kappa"] = kappa;
    j["re"] = re;
    j["im"] = im;
    doc["beams"].push_back(j);
  }
  out << doc.dump(1) << "\n";
}

std::vector<BeamState> read_beams_json(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t end = std::min(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(end), '\n'));
    throw ParseError(source, line, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("beams") || !doc["beams"].is_array()) {
    throw ParseError(source, 0, "expected an object with a \"beams\" array");
  }
  std::vector<BeamState> out;
  for (std::size_t b = 0; b < doc["beams"].size(); ++b) {
    const auto& j = doc["beams"][b];
    const std::string where = "beam " + std::to_string(b) + ": ";
    try {
      const auto dir = j.at("direction").get<std::vector<double>>();
      const auto kappa = j.at("kappa").get<std::vector<double>>();
      const auto re = j.at("re").get<std::vector<double>>();
      const auto im = j.at("im").get<std::vector<double>>();
      if (dir.size() != 3) throw ParseError(source, 0, where + "direction needs 3 entries");
      if (kappa.size() != re.size() || kappa.size() != im.size() || kappa.size() % 2 != 0 ||
          kappa.size() < 2) {
        throw ParseError(source, 0, where + "kappa/re/im lengths disagree or are odd");
      }
      const std::size_t n_half = kappa.size() / 2;
      const double dk = kappa[n_half] * 2.0;
      if (!(dk > 0.0)) throw ParseError(source, 0, where + "kappa grid must be symmetric about 0");
      const AxisGrid grid(n_half, std::numbers::pi / dk);
      ComplexVector values(kappa.size());
      for (std::size_t m = 0; m < kappa.size(); ++m) {
        if (std::abs(kappa[m] - grid.kappa(m)) > 1e-9 * dk) {
          throw ParseError(source, 0, where + "kappa entry " + std::to_string(m) + " off grid");
        }
        values[m] = {re[m], im[m]};
      }
      const Vec3 d{dir[0], dir[1], dir[2]};
      if (std::abs(length(d) - 1.0) > 1e-12) {
        throw ParseError(source, 0, where + "direction is not a unit vector");
      }
      out.push_back({d, SpectralProfile(grid, std::move(values))});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source, 0, where + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, 0, where + e.what());
    }
  }
  return out;
}

void write_diagnostics_csv(std::ostream& out, const EvolutionResult& result) {
  out << "time,norm,min_rho,continuity_residual\n";
  for (const auto& d : result.diagnostics) {
    out << format_double(d.time) << "," << format_double(d.norm) << ","
        << format_double(d.min_density) << "," << format_double(d.continuity_residual) << "\n";
  }
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

}  // namespace

void save_field(const std::filesystem::path& path, const AxialField& field) {
  auto out = open_out(path);
  write_field_csv(out, field);
}

AxialField load_field(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_field_csv(in, path.string());
}

void save_profile(const std::filesystem::path& path, const SpectralProfile& profile) {
  auto out = open_out(path);
  write_profile_csv(out, profile);
}

SpectralProfile load_profile(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_profile_csv(in, path.string());
}

void save_beams(const std::filesystem::path& path, const std::vector<BeamState>& beams) {
  auto out = open_out(path);
  write_beams_json(out, beams);
}

std::vector<BeamState> load_beams(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_beams_json(in, path.string());
}

}  // namespace axial
