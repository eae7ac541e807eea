#include "axial/relativity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "axial/diagnostics.hpp"
#include "axial/fourier.hpp"

namespace axial {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
  const double n = length(a);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero vector");
  return {a[0] / n, a[1] / n, a[2] / n};
}

Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

FourMomentum null_momentum(const Vec3& k) {
  const double n = length(k);
  if (!(n > 0.0)) throw std::invalid_argument("null momentum needs a nonzero 3-vector");
  return {n, k};
}

bool is_null(const FourMomentum& k, double tol) {
  return std::abs(k.k0 - length(k.k)) <= tol * k.k0;
}

BoostParams::BoostParams(double v, const Vec3& axis) : v_(v), axis_{}, gamma_(1.0) {
  if (!std::isfinite(v) || std::abs(v) >= 1.0) {
    throw std::invalid_argument("boost speed must satisfy |v| < 1");
  }
  axis_ = normalized(axis);
  gamma_ = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

FourMomentum boost_four_momentum(const FourMomentum& k, const BoostParams& b) {
  if (!is_null(k)) throw std::invalid_argument("boost_four_momentum expects a null four-momentum");
  const double par = dot(k.k, b.axis());
  const Vec3 perp = k.k - par * b.axis();
  const double g = b.gamma();
  const double par_new = g * (par - b.v() * k.k0);
  return {g * (k.k0 - b.v() * par), perp + par_new * b.axis()};
}

Vec3 aberrate_direction(const Vec3& khat, const BoostParams& b) {
  return normalized(boost_four_momentum(null_momentum(normalized(khat)), b).k);
}

Vec3 observed_direction(const Vec3& ohat, const BoostParams& b) {
  return -1.0 * aberrate_direction(-1.0 * ohat, b);
}

double aberration_cos(double cos_theta, double v) {
  if (!std::isfinite(v) || std::abs(v) >= 1.0) {
    throw std::invalid_argument("boost speed must satisfy |v| < 1");
  }
  return (cos_theta + v) / (1.0 + v * cos_theta);
}

double doppler_factor(const Vec3& khat, const BoostParams& b) {
  return b.gamma() * (1.0 - b.v() * dot(normalized(khat), b.axis()));
}

namespace {

// Cubic Lagrange interpolation of one κ branch sampled at (j + 1/2) Δκ,
// j = 0..n-1. Returns zero outside [first node, last node] and reports it.
class BranchInterpolator {
 public:
  BranchInterpolator(std::vector<Complex> samples, double dk)
      : samples_(std::move(samples)), dk_(dk) {}

  Complex at(double k, bool& outside) const {
    const auto n = static_cast<long>(samples_.size());
    const double q = k / dk_ - 0.5;
    if (q < 0.0 || q > static_cast<double>(n - 1)) {
      outside = true;
      return {};
    }
    long base = static_cast<long>(std::floor(q)) - 1;
    base = std::clamp(base, 0L, n - 4);
    const double t = q - static_cast<double>(base);
    Complex out{};
    for (int a = 0; a < 4; ++a) {
      double w = 1.0;
      for (int b = 0; b < 4; ++b) {
        if (b != a) w *= (t - b) / static_cast<double>(a - b);
      }
      out += w * samples_[static_cast<std::size_t>(base + a)];
    }
    return out;
  }

  double edge_magnitude() const {
    return std::max(std::abs(samples_.front()), std::abs(samples_.back()));
  }

 private:
  std::vector<Complex> samples_;
  double dk_;
};

// Profile values on the branch k = |κ| > 0 in the given direction.
std::vector<Complex> branch(const SpectralProfile& p, bool forward) {
  const auto& grid = p.grid();
  std::vector<Complex> out(grid.n_half());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = p[forward ? grid.plus_index(j) : grid.minus_index(j)];
  }
  return out;
}

// Fills target branch samples with φ(k'/D) from the source branch.
void resample(const std::vector<Complex>& source, double factor, const AxisGrid& grid,
              SpectralProfile& target, bool target_forward, double peak) {
  if (factor == 1.0) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      target[target_forward ? grid.plus_index(j) : grid.minus_index(j)] = source[j];
    }
    return;
  }
  const BranchInterpolator interp(source, grid.dkappa());
  bool outside = false;
  double lost = 0.0;
  for (std::size_t j = 0; j < source.size(); ++j) {
    bool here = false;
    const Complex v = interp.at(grid.half_kappa(j) / factor, here);
    if (here) {
      outside = true;
      lost = std::max(lost, interp.edge_magnitude());
    }
    target[target_forward ? grid.plus_index(j) : grid.minus_index(j)] = v;
  }
  if (outside && lost > 1e-6 * peak) {
    std::ostringstream msg;
    msg << "boost_beam: resampling leaves the source support with edge amplitude "
        << lost / peak << " of peak; values set to zero";
    warn(msg.str());
  }
}

}  // namespace

std::vector<BeamState> boost_beam(const BeamState& beam, const BoostParams& b) {
  const Vec3 n = normalized(beam.direction);
  const auto& grid = beam.profile.grid();
  const Vec3 dir_fwd = aberrate_direction(n, b);
  const Vec3 dir_bwd = aberrate_direction(-1.0 * n, b);
  const double d_fwd = doppler_factor(n, b);
  const double d_bwd = doppler_factor(-1.0 * n, b);
  const std::vector<Complex> fwd = branch(beam.profile, true);
  const std::vector<Complex> bwd = branch(beam.profile, false);
  double peak = 0.0;
  for (const auto& v : beam.profile.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) peak = 1.0;

  if (length(dir_fwd + dir_bwd) <= 1e-12) {
    SpectralProfile out(grid);
    resample(fwd, d_fwd, grid, out, true, peak);
    resample(bwd, d_bwd, grid, out, false, peak);
    return {BeamState{dir_fwd, std::move(out)}};
  }
  SpectralProfile a(grid);
  SpectralProfile c(grid);
  resample(fwd, d_fwd, grid, a, true, peak);
  resample(bwd, d_bwd, grid, c, true, peak);
  return {BeamState{dir_fwd, std::move(a)}, BeamState{dir_bwd, std::move(c)}};
}

SpectralProfile momentum_boost_generator(const SpectralProfile& profile, DerivativeMethod method) {
  const auto& grid = profile.grid();
  ComplexVector d;
  if (method == DerivativeMethod::Spectral) {
    d = fourier::kappa_derivative(profile.values(), grid);
  } else {
    const auto n = static_cast<long>(profile.size());
    const double dk = grid.dkappa();
    auto at = [&](long m) { return (m >= 0 && m < n) ? profile[static_cast<std::size_t>(m)] : Complex{}; };
    d.resize(profile.size());
    for (long m = 0; m < n; ++m) {
      d[static_cast<std::size_t>(m)] =
          (-at(m - 3) + 9.0 * at(m - 2) - 45.0 * at(m - 1) + 45.0 * at(m + 1) - 9.0 * at(m + 2) +
           at(m + 3)) /
          (60.0 * dk);
    }
  }
  SpectralProfile out(grid);
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = Complex(0.0, std::abs(grid.kappa(m))) * d[m];
  }
  return out;
}

}  // namespace axial
