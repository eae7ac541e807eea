#include "axial/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "axial/diagnostics.hpp"
#include "axial/fourier.hpp"
#include "axial/spectral_map.hpp"

namespace axial {

namespace {

const Complex kI{0.0, 1.0};

double sgn(double x) { return x > 0.0 ? 1.0 : -1.0; }

Weight to_weight(AdjointWeight w) {
  if (w == AdjointWeight::None) throw std::invalid_argument("adjoint weight NONE has no inner product");
  return w == AdjointWeight::Unit ? Weight::Unit : Weight::InvR;
}

}  // namespace

LinearOperator::LinearOperator(std::string label, Map apply, AdjointWeight weight)
    : label_(std::move(label)), apply_(std::move(apply)), weight_(weight) {}

LinearOperator& LinearOperator::declare_self_adjoint() {
  self_adjoint_ = true;
  adjoint_.reset();
  return *this;
}

LinearOperator& LinearOperator::declare_adjoint(const LinearOperator& other) {
  self_adjoint_ = false;
  adjoint_ = std::make_shared<const LinearOperator>(other);
  return *this;
}

LinearOperator LinearOperator::adjoint() const {
  if (self_adjoint_) return *this;
  if (adjoint_) return *adjoint_;
  throw std::logic_error("operator '" + label_ + "' has no declared adjoint");
}

LinearOperator identity_operator() {
  return LinearOperator("1", [](const AxialField& f) { return f; });
}

LinearOperator zero_operator() {
  return LinearOperator("0", [](const AxialField& f) { return AxialField(f.grid(), f.rep()); });
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator(a.label() + " " + b.label(),
                        [a, b](const AxialField& f) { return a(b(f)); });
}

LinearOperator sum(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator("(" + a.label() + " + " + b.label() + ")",
                        [a, b](const AxialField& f) { return a(f) + b(f); });
}

LinearOperator scale(Complex s, const LinearOperator& a) {
  std::ostringstream label;
  label << s << "·" << a.label();
  return LinearOperator(label.str(), [s, a](const AxialField& f) { return s * a(f); });
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator("[" + a.label() + ", " + b.label() + "]",
                        [a, b](const AxialField& f) { return a(b(f)) - b(a(f)); });
}

LinearOperator on_g(std::string label, std::function<ComplexVector(const AxialField&)> map,
                    AdjointWeight weight) {
  return LinearOperator(
      std::move(label),
      [map = std::move(map)](const AxialField& f) {
        const AxialField g = convert_rep(f, Rep::G);
        return convert_rep(AxialField(g.grid(), Rep::G, map(g)), f.rep());
      },
      weight);
}

LinearOperator multiplication(std::string label, std::function<Complex(double)> m) {
  return LinearOperator(std::move(label), [m = std::move(m)](const AxialField& f) {
    AxialField out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= m(f.grid().node(i));
    return out;
  });
}

ComplexVector radial_derivative(std::span<const Complex> u, const AxisGrid& grid,
                                OriginBehavior behavior) {
  if (behavior == OriginBehavior::Continuous) {
    ComplexVector d = fourier::derivative(u, grid);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] *= sgn(grid.node(i));
    return d;
  }
  ComplexVector s(u.begin(), u.end());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= sgn(grid.node(i));
  return fourier::derivative(s, grid);
}

Complex origin_limit(std::span<const Complex> u, const AxisGrid& grid, bool positive_side) {
  // Lagrange weights for nodes at h/2, 3h/2, 5h/2 evaluated at 0
  constexpr double w0 = 1.875, w1 = -1.25, w2 = 0.375;
  auto at = [&](std::size_t j) {
    return u[positive_side ? grid.plus_index(j) : grid.minus_index(j)];
  };
  return w0 * at(0) + w1 * at(1) + w2 * at(2);
}

ComplexVector jump_corrected_derivative(std::span<const Complex> u, const AxisGrid& grid) {
  const Complex jump = origin_limit(u, grid, true) - origin_limit(u, grid, false);
  ComplexVector v(u.begin(), u.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= 0.5 * jump * sgn(grid.node(i));
  return fourier::derivative(v, grid);
}

LinearOperator radial_momentum_tilde() {
  LinearOperator op(
      "p~",
      [](const AxialField& f) {
        const AxialField fr = convert_rep(f, Rep::F);
        const auto& grid = fr.grid();
        ComplexVector u(fr.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = grid.node(i) * fr[i];
        ComplexVector d = jump_corrected_derivative(u, grid);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] *= -kI / grid.node(i);
        return convert_rep(AxialField(grid, Rep::F, std::move(d)), f.rep());
      },
      AdjointWeight::Unit);
  op.declare_self_adjoint();
  return op;
}

LinearOperator radial_momentum_r() {
  return LinearOperator(
      "p_r",
      [](const AxialField& f) {
        const AxialField fr = convert_rep(f, Rep::F);
        const auto& grid = fr.grid();
        ComplexVector u(fr.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::abs(grid.node(i)) * fr[i];
        ComplexVector d = jump_corrected_derivative(u, grid);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] *= -kI / grid.node(i);
        return convert_rep(AxialField(grid, Rep::F, std::move(d)), f.rep());
      },
      AdjointWeight::Unit);
}

LinearOperator pbar() {
  LinearOperator op(
      "pbar",
      [](const AxialField& f) {
        const AxialField g = convert_rep(f, Rep::G);
        ComplexVector d = fourier::derivative(g.values(), g.grid());
        for (auto& v : d) v *= -kI;
        return convert_rep(AxialField(g.grid(), Rep::G, std::move(d)), f.rep());
      },
      AdjointWeight::InvR);
  op.declare_self_adjoint();
  return op;
}

LinearOperator radial_derivative_op(OriginBehavior behavior) {
  return on_g(behavior == OriginBehavior::Continuous ? "d_r" : "d_r(flip)",
              [behavior](const AxialField& g) {
                return radial_derivative(g.values(), g.grid(), behavior);
              });
}

LinearOperator hilbert_conjugated(Sign sign, HilbertBackend backend) {
  auto make = [backend](Sign s) {
    const HilbertOptions options{backend};
    return on_g(s == Sign::Plus ? "H+" : "H-",
                [s, options](const AxialField& g) {
                  const AxialField h = hilbert_signed(g, s, options);
                  return ComplexVector(h.values().begin(), h.values().end());
                },
                AdjointWeight::InvR);
  };
  LinearOperator op = make(sign);
  op.declare_adjoint(scale(-1.0, make(sign == Sign::Plus ? Sign::Minus : Sign::Plus)));
  return op;
}

LinearOperator pbar0(Pbar0Form form, HilbertBackend backend) {
  const HilbertOptions options{backend};
  LinearOperator op = [&]() {
    switch (form) {
      case Pbar0Form::Left:
        return on_g("pbar0[left]", [options](const AxialField& g) {
          const AxialField h = hilbert_signed(g, Sign::Plus, options);
          ComplexVector d = radial_derivative(h.values(), g.grid(), OriginBehavior::SignFlip);
          for (auto& v : d) v = -v;
          return d;
        });
      case Pbar0Form::Right:
        return on_g("pbar0[right]", [options](const AxialField& g) {
          AxialField d(g.grid(), Rep::G,
                       radial_derivative(g.values(), g.grid(), OriginBehavior::Continuous));
          const AxialField h = hilbert_signed(d, Sign::Minus, options);
          ComplexVector out(h.values().begin(), h.values().end());
          for (auto& v : out) v = -v;
          return out;
        });
      case Pbar0Form::Spectral:
        break;
    }
    return LinearOperator("pbar0[spectral]", [](const AxialField& f) {
      return apply_spectral_multiplier(f, [](double k) { return Complex(std::abs(k), 0.0); });
    });
  }();
  return LinearOperator(op.label(), [op](const AxialField& f) { return op(f); },
                        AdjointWeight::InvR)
      .declare_self_adjoint();
}

OperatorPair four_vector_ops(FourVector which) {
  if (which == FourVector::S) {
    return {multiplication("s0", [](double x) { return Complex(-1.0 / std::abs(x), 0.0); }),
            multiplication("s_axial", [](double x) { return Complex(1.0 / x, 0.0); })};
  }
  LinearOperator t0 = on_g("t0", [](const AxialField& g) {
    ComplexVector d = radial_derivative(g.values(), g.grid(), OriginBehavior::Continuous);
    for (auto& v : d) v *= kI;
    return d;
  });
  return {t0, pbar()};
}

namespace {

// P = -sgn(λ)(λ ∂_λ + 3/2) = -(λ ∂_r + (3/2) sgn) on G samples.
ComplexVector boost_bracket(std::span<const Complex> u, const AxisGrid& grid,
                            OriginBehavior behavior) {
  ComplexVector d = radial_derivative(u, grid, behavior);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = grid.node(i);
    d[i] = -(x * d[i] + 1.5 * sgn(x) * u[i]);
  }
  return d;
}

}  // namespace

LinearOperator local_boost() {
  return on_g("N'", [](const AxialField& g) {
    ComplexVector p = boost_bracket(g.values(), g.grid(), OriginBehavior::Continuous);
    for (auto& v : p) v *= -kI;  // N' = -i P
    return p;
  });
}

LinearOperator boost_generator(BoostOrdering ordering, HilbertBackend backend) {
  const HilbertOptions options{backend};
  if (ordering == BoostOrdering::HilbertLast) {
    return on_g("N[H- P]", [options](const AxialField& g) {
      AxialField p(g.grid(), Rep::G,
                   boost_bracket(g.values(), g.grid(), OriginBehavior::Continuous));
      const AxialField h = hilbert_signed(p, Sign::Minus, options);
      return ComplexVector(h.values().begin(), h.values().end());
    }, AdjointWeight::InvR);
  }
  return on_g("N[P H+]", [options](const AxialField& g) {
    const AxialField h = hilbert_signed(g, Sign::Plus, options);
    return boost_bracket(h.values(), g.grid(), OriginBehavior::SignFlip);
  }, AdjointWeight::InvR);
}

double commutator_residual(const LinearOperator& a, const LinearOperator& b,
                           const LinearOperator& expected, Complex scale,
                           const std::vector<AxialField>& probes, double fraction) {
  if (probes.empty()) throw std::invalid_argument("commutator_residual: empty probe list");
  double worst = 0.0;
  for (const auto& f : probes) {
    const AxialField lhs = a(b(f)) - b(a(f));
    const AxialField r = lhs - scale * expected(f);
    const double denom = interior_norm(f, fraction);
    if (denom == 0.0) continue;
    worst = std::max(worst, interior_norm(r, fraction) / denom);
  }
  return worst;
}

double adjoint_residual(const LinearOperator& a, const LinearOperator& b, AdjointWeight weight,
                        const std::vector<std::pair<AxialField, AxialField>>& probes) {
  const Weight w = to_weight(weight);
  if (probes.empty()) throw std::invalid_argument("adjoint_residual: empty probe list");
  double worst = 0.0;
  for (const auto& [pa, pb] : probes) {
    const Complex lhs = inner_product(pa, a(pb), w);
    const Complex rhs = inner_product(b(pa), pb, w);
    const double denom = norm(pa, w) * norm(pb, w);
    if (denom == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

Complex adjoint_defect(const LinearOperator& op, const AxialField& a, const AxialField& b,
                       AdjointWeight weight) {
  const Weight w = to_weight(weight);
  return inner_product(a, op(b), w) - inner_product(op(a), b, w);
}

namespace {

ComplexVector scaled_f(const AxialField& f, bool absolute) {
  const AxialField fr = convert_rep(f, Rep::F);
  ComplexVector u(fr.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = fr.grid().node(i);
    u[i] = (absolute ? std::abs(x) : x) * fr[i];
  }
  return u;
}

}  // namespace

Complex tilde_boundary_term(const AxialField& a, const AxialField& b) {
  require_same_grid(a.grid(), b.grid());
  const auto& grid = a.grid();
  const ComplexVector ua = scaled_f(a, false);
  const ComplexVector ub = scaled_f(b, false);
  const Complex plus = std::conj(origin_limit(ua, grid, true)) * origin_limit(ub, grid, true);
  const Complex minus = std::conj(origin_limit(ua, grid, false)) * origin_limit(ub, grid, false);
  return kI * (plus - minus);
}

Complex radial_boundary_term(const AxialField& a, const AxialField& b) {
  require_same_grid(a.grid(), b.grid());
  const auto& grid = a.grid();
  const ComplexVector va = scaled_f(a, true);
  const ComplexVector vb = scaled_f(b, true);
  const Complex plus = std::conj(origin_limit(va, grid, true)) * origin_limit(vb, grid, true);
  const Complex minus = std::conj(origin_limit(va, grid, false)) * origin_limit(vb, grid, false);
  return kI * (plus + minus);
}

double rayleigh_quotient(const LinearOperator& op, const AxialField& f, AdjointWeight weight) {
  const Weight w = to_weight(weight);
  const double denom = inner_product(f, f, w).real();
  if (denom == 0.0) throw std::invalid_argument("rayleigh_quotient: zero probe");
  return inner_product(f, op(f), w).real() / denom;
}

double linearity_residual(const LinearOperator& op, const AxialField& a, const AxialField& b,
                          Complex alpha, Complex beta) {
  const AxialField combined = op(alpha * a + beta * b);
  const AxialField ta = alpha * op(a);
  const AxialField tb = beta * op(b);
  const AxialField r = combined - ta - tb;
  const double denom = interior_norm(ta, 1.0) + interior_norm(tb, 1.0);
  const double num = interior_norm(r, 1.0);
  return denom == 0.0 ? num : num / denom;
}

double pbar0_form_disagreement(const AxialField& f, double tolerance, HilbertBackend backend) {
  const AxialField left = pbar0(Pbar0Form::Left, backend)(f);
  const AxialField right = pbar0(Pbar0Form::Right, backend)(f);
  const AxialField spec = pbar0(Pbar0Form::Spectral)(f);
  const double worst = std::max({interior_relative_error(left, spec, kHilbertInterior),
                                 interior_relative_error(right, spec, kHilbertInterior),
                                 interior_relative_error(left, right, kHilbertInterior)});
  if (worst > tolerance) {
    std::ostringstream msg;
    msg << "pbar0 forms disagree by " << worst << " (tolerance " << tolerance << ")";
    warn(msg.str());
  }
  return worst;
}

double boost_ordering_disagreement(const AxialField& f, double tolerance) {
  const AxialField a = boost_generator(BoostOrdering::HilbertLast)(f);
  const AxialField b = boost_generator(BoostOrdering::HilbertFirst)(f);
  const double err = interior_relative_error(b, a, kHilbertInterior);
  if (err > tolerance) {
    std::ostringstream msg;
    msg << "boost generator orderings disagree by " << err << " (tolerance " << tolerance << ")";
    warn(msg.str());
  }
  return err;
}

}  // namespace axial
