#include "axial/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "axial/diagnostics.hpp"
#include "axial/fourier.hpp"

namespace axial {

HalfLineFunction::HalfLineFunction(AxisGrid grid, Domain domain)
    : grid_(grid), domain_(domain), values_(grid.n_half(), Complex{}) {}

HalfLineFunction::HalfLineFunction(AxisGrid grid, Domain domain, ComplexVector values)
    : grid_(grid), domain_(domain), values_(std::move(values)) {
  if (values_.size() != grid_.n_half()) {
    throw std::invalid_argument("half-line function length does not match n_half");
  }
}

HalfLineFunction sample_half_line(const FieldGenerator& generator, const AxisGrid& grid,
                                  Domain domain) {
  HalfLineFunction out(grid, domain);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = generator(out.coordinate(j));
  return out;
}

HalfLineFunction plus_half(const AxialField& field) {
  const auto& grid = field.grid();
  HalfLineFunction out(grid, Domain::Radius);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = field[grid.plus_index(j)];
  return out;
}

HalfLineFunction minus_half(const AxialField& field) {
  const auto& grid = field.grid();
  HalfLineFunction out(grid, Domain::Radius);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = field[grid.minus_index(j)];
  return out;
}

namespace {

// cos/sin(π p / (4n)) for p in [0, 8n). Kernel angles are reduced exactly
// with integer arithmetic before lookup.
struct TrigTable {
  explicit TrigTable(std::size_t n_half) : period(8 * n_half), cs(period), sn(period) {
    const double base = std::numbers::pi / (4.0 * static_cast<double>(n_half));
    for (std::size_t p = 0; p < period; ++p) {
      cs[p] = std::cos(base * static_cast<double>(p));
      sn[p] = std::sin(base * static_cast<double>(p));
    }
  }
  std::size_t period;
  RealVector cs;
  RealVector sn;
};

}  // namespace

HalfLineFunction trig_transform(const HalfLineFunction& f, TrigKind kind, Direction direction) {
  const bool forward = direction == Direction::Forward;
  if (forward != (f.domain() == Domain::Radius)) {
    throw std::invalid_argument("trig_transform: direction does not match the input domain");
  }
  const auto& grid = f.grid();
  const std::size_t n = grid.n_half();
  const TrigTable table(n);
  const RealVector& kernel = kind == TrigKind::Cos ? table.cs : table.sn;
  const double scale =
      std::sqrt(2.0 / std::numbers::pi) * (forward ? grid.spacing() : grid.dkappa());

  HalfLineFunction out(grid, forward ? Domain::Momentum : Domain::Radius);
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t a = 2 * m + 1;
    Complex sum{};
    for (std::size_t j = 0; j < n; ++j) {
      sum += f[j] * kernel[(a * (2 * j + 1)) % table.period];
    }
    out[m] = scale * sum;
  }
  return out;
}

namespace {

void require_radius(const HalfLineFunction& f) {
  if (f.domain() != Domain::Radius) {
    throw std::invalid_argument("Hilbert transforms act on radius-domain samples");
  }
}

// Alternate-point principal value rule on the full line with the singular
// value subtracted. stride 1 uses nodes at odd offsets with weight 2h; stride
// 2 uses offsets ≡ 2 (mod 4) with weight 4h. The subtracted constant is
// integrated exactly over the span covered by the rule's cells.
struct LineQuadrature {
  Complex value;
  double magnitude;  // Σ |terms|, for the rounding bound
};

LineQuadrature pv_line_at(std::span<const Complex> v, const AxisGrid& grid, std::size_t i,
                          std::size_t stride) {
  const double h = grid.spacing();
  const long size = static_cast<long>(v.size());
  const long step = 2 * static_cast<long>(stride);
  const double weight = 2.0 * h * static_cast<double>(stride);
  const double x = grid.node(i);
  const long ii = static_cast<long>(i);

  // participating nodes: i - j ≡ stride (mod 2 stride)
  const long start = (ii + static_cast<long>(stride)) % step;

  Complex sum{};
  double mag = 0.0;
  long last = start;
  for (long j = start; j < size; j += step) {
    const double d = x - grid.node(static_cast<std::size_t>(j));
    const Complex term = weight * (v[j] - v[i]) / d;
    sum += term;
    mag += std::abs(weight * v[j] / d);
    last = j;
  }
  const double half_cell = 0.5 * weight;
  double a = grid.node(static_cast<std::size_t>(start)) - half_cell;
  double b = grid.node(static_cast<std::size_t>(last)) + half_cell;
  // At the outermost nodes the cells end on x itself; use the domain end.
  if (!(x - a > 0.0)) a = -grid.extent();
  if (!(b - x > 0.0)) b = grid.extent();
  const Complex correction = v[i] * std::log((x - a) / (b - x));
  sum += correction;
  mag += std::abs(correction);
  return {sum / std::numbers::pi, mag / std::numbers::pi};
}

// Full-line samples of the even (or odd) extension of a half-line function.
ComplexVector extend(const HalfLineFunction& f, bool even) {
  const auto& grid = f.grid();
  ComplexVector line(grid.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    line[grid.plus_index(j)] = f[j];
    line[grid.minus_index(j)] = even ? f[j] : -f[j];
  }
  return line;
}

HalfLineFunction hilbert_quadrature(const HalfLineFunction& f, bool even) {
  const auto& grid = f.grid();
  const ComplexVector line = extend(f, even);
  HalfLineFunction out(grid, Domain::Radius);
  for (std::size_t j = 0; j < f.size(); ++j) {
    out[j] = -pv_line_at(line, grid, grid.plus_index(j), 1).value;
  }
  return out;
}

HalfLineFunction hilbert_spectral(const HalfLineFunction& f, bool even) {
  if (even) {
    HalfLineFunction out = trig_transform(trig_transform(f, TrigKind::Cos, Direction::Forward),
                                          TrigKind::Sin, Direction::Inverse);
    for (auto& v : out.values()) v = -v;
    return out;
  }
  return trig_transform(trig_transform(f, TrigKind::Sin, Direction::Forward), TrigKind::Cos,
                        Direction::Inverse);
}

HalfLineFunction hilbert_atom(const HalfLineFunction& f, bool even, const HilbertOptions& options) {
  require_radius(f);
  check_edge_decay(f.values(), options.edge_threshold, even ? "hilbert_even" : "hilbert_odd");
  return options.backend == HilbertBackend::Spectral ? hilbert_spectral(f, even)
                                                     : hilbert_quadrature(f, even);
}

}  // namespace

HalfLineFunction hilbert_even(const HalfLineFunction& f, const HilbertOptions& options) {
  return hilbert_atom(f, true, options);
}

HalfLineFunction hilbert_odd(const HalfLineFunction& f, const HilbertOptions& options) {
  return hilbert_atom(f, false, options);
}

RealVector hilbert_error_estimate(const HalfLineFunction& f, bool even) {
  require_radius(f);
  const auto& grid = f.grid();
  const ComplexVector line = extend(f, even);
  const double eps = std::numeric_limits<double>::epsilon();
  RealVector out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const std::size_t i = grid.plus_index(j);
    const LineQuadrature fine = pv_line_at(line, grid, i, 1);
    const LineQuadrature coarse = pv_line_at(line, grid, i, 2);
    out[j] = std::abs(fine.value - coarse.value) + 4.0 * eps * fine.magnitude;
  }
  return out;
}

HilbertCrossCheck cross_check_hilbert(const HalfLineFunction& f, bool even, double fraction) {
  require_radius(f);
  const HalfLineFunction s = hilbert_spectral(f, even);
  const HalfLineFunction q = hilbert_quadrature(f, even);
  const RealVector est = hilbert_error_estimate(f, even);
  const double cut = fraction * f.grid().extent();
  HilbertCrossCheck out;
  for (std::size_t j = 0; j < f.size() && f.coordinate(j) < cut; ++j) {
    out.max_difference = std::max(out.max_difference, std::abs(s[j] - q[j]));
    out.max_estimate = std::max(out.max_estimate, est[j]);
  }
  out.agree = out.max_difference <= 2.0 * out.max_estimate;
  if (!out.agree) {
    std::ostringstream msg;
    msg << "Hilbert backends disagree: |spectral - quadrature| = " << out.max_difference
        << " exceeds twice the quadrature estimate " << out.max_estimate;
    warn(msg.str());
  }
  return out;
}

AxialField hilbert_signed(const AxialField& f, Sign sign, const HilbertOptions& options) {
  const auto& grid = f.grid();
  const HalfLineFunction pos = plus_half(f);
  const HalfLineFunction neg = minus_half(f);
  HalfLineFunction sum(grid, Domain::Radius);
  HalfLineFunction diff(grid, Domain::Radius);
  for (std::size_t j = 0; j < pos.size(); ++j) {
    sum[j] = pos[j] + neg[j];
    diff[j] = pos[j] - neg[j];
  }
  // PLUS needs He of the even part and Ho of the odd part; MINUS swaps them.
  const bool plus = sign == Sign::Plus;
  const HalfLineFunction he = hilbert_even(plus ? sum : diff, options);
  const HalfLineFunction ho = hilbert_odd(plus ? diff : sum, options);

  AxialField out(grid, f.rep());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (plus) {
      out[grid.plus_index(j)] = 0.5 * (he[j] + ho[j]);
      out[grid.minus_index(j)] = 0.5 * (he[j] - ho[j]);
    } else {
      out[grid.plus_index(j)] = 0.5 * (he[j] + ho[j]);
      out[grid.minus_index(j)] = 0.5 * (ho[j] - he[j]);
    }
  }
  return out;
}

ComplexVector hilbert_line(std::span<const Complex> values, const AxisGrid& grid,
                           HilbertBackend backend) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("hilbert_line: sample count does not match grid");
  }
  if (backend == HilbertBackend::Spectral) return fourier::hilbert(values, grid);
  ComplexVector out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = pv_line_at(values, grid, i, 1).value;
  return out;
}

bool check_edge_decay(std::span<const Complex> values, double threshold, const char* what) {
  if (values.empty()) return true;
  const std::size_t tail = std::max<std::size_t>(1, (values.size() + 19) / 20);
  double peak = 0.0;
  double edge = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double a = std::abs(values[j]);
    peak = std::max(peak, a);
    if (j + tail >= values.size()) edge = std::max(edge, a);
  }
  if (peak == 0.0 || edge <= threshold * peak) return true;
  std::ostringstream msg;
  msg << what << ": input does not decay at the grid edge (edge/peak = " << edge / peak << ")";
  warn(msg.str());
  return false;
}

}  // namespace axial
