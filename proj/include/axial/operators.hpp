#pragma once

// Linear operators on axial fields and the residual harnesses used to check
// operator identities.
//
// Most operators are defined on G samples, where pbar = -i d/dλ and the 1/r
// product is flat. Handles accept either rep and return the input's rep.
// The radial derivative ∂_r = sgn(λ) ∂_λ needs a rule at the origin; see
// OriginBehavior.

#include <memory>
#include <string>
#include <vector>

#include "axial/grid.hpp"
#include "axial/transforms.hpp"

namespace axial {

enum class AdjointWeight { Unit, InvR, None };

class LinearOperator {
 public:
  using Map = std::function<AxialField(const AxialField&)>;

  LinearOperator(std::string label, Map apply, AdjointWeight weight = AdjointWeight::None);

  const std::string& label() const noexcept { return label_; }
  AdjointWeight declared_adjoint_weight() const noexcept { return weight_; }

  AxialField apply(const AxialField& f) const { return apply_(f); }
  AxialField operator()(const AxialField& f) const { return apply_(f); }

  /// Declares this operator symmetric under its weight.
  LinearOperator& declare_self_adjoint();
  /// Declares `other` as this operator's adjoint under the weight.
  LinearOperator& declare_adjoint(const LinearOperator& other);
  bool has_declared_adjoint() const noexcept { return self_adjoint_ || adjoint_ != nullptr; }
  /// The declared adjoint; throws when none was declared.
  LinearOperator adjoint() const;

 private:
  std::string label_;
  Map apply_;
  AdjointWeight weight_;
  bool self_adjoint_ = false;
  std::shared_ptr<const LinearOperator> adjoint_;
};

LinearOperator identity_operator();
LinearOperator zero_operator();
/// (a ∘ b) f = a(b(f)).
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator sum(const LinearOperator& a, const LinearOperator& b);
LinearOperator scale(Complex s, const LinearOperator& a);
/// [a, b] = ab - ba.
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// Wraps a map on G samples so it accepts and returns any rep.
LinearOperator on_g(std::string label, std::function<ComplexVector(const AxialField&)> map,
                    AdjointWeight weight = AdjointWeight::None);
/// Pointwise multiplication by m(λ); rep-independent.
LinearOperator multiplication(std::string label, std::function<Complex(double)> m);

// Origin rule for ∂_r = sgn(λ) ∂_λ. Continuous fields use sgn·D(u); fields
// that change sign through the origin (outputs of H+) use D(sgn·u), which
// differentiates the continuous profile instead of the manufactured jump.
enum class OriginBehavior { Continuous, SignFlip };

ComplexVector radial_derivative(std::span<const Complex> u, const AxisGrid& grid,
                                OriginBehavior behavior);

/// Spectral derivative of u with its jump at the origin removed first:
/// D(u - (J/2) sgn), J extrapolated from the three innermost nodes per side.
ComplexVector jump_corrected_derivative(std::span<const Complex> u, const AxisGrid& grid);

/// Quadratic extrapolation of u to 0+ (or 0-) from the three innermost nodes.
Complex origin_limit(std::span<const Complex> u, const AxisGrid& grid, bool positive_side);

// --- momentum-type operators -------------------------------------------------

/// -i (1/λ) ∂_λ (λ f) in F samples.
LinearOperator radial_momentum_tilde();
/// -i (1/r) ∂_r (r f) on the axis: -i (1/λ) ∂_λ (|λ| f).
LinearOperator radial_momentum_r();
/// -i d/dλ on G samples.
LinearOperator pbar();
/// ∂_r on G samples, with the given origin rule.
LinearOperator radial_derivative_op(OriginBehavior behavior);
/// H+ or H- acting on G samples (the sqrt r conjugation in F terms).
LinearOperator hilbert_conjugated(Sign sign, HilbertBackend backend = HilbertBackend::Spectral);

enum class Pbar0Form { Left, Right, Spectral };

/// LEFT  -∂_r H+   (on G samples)
/// RIGHT -H- ∂_r
/// SPECTRAL multiplication by |κ| between analysis and synthesis.
LinearOperator pbar0(Pbar0Form form, HilbertBackend backend = HilbertBackend::Spectral);

struct OperatorPair {
  LinearOperator time;
  LinearOperator axial;
};

enum class FourVector { S, T };

/// S: s⁰ = -1/|λ|, s·n̂ = 1/λ.   T: t⁰ = i sgn(λ) ∂_λ on G, t·n̂ = pbar.
OperatorPair four_vector_ops(FourVector which);

/// Local boost part i sgn(λ)(λ ∂_λ + 2) in F, i sgn(λ)(λ ∂_λ + 3/2) on G.
LinearOperator local_boost();

enum class BoostOrdering { HilbertFirst, HilbertLast };

/// Axial boost generator. HilbertLast: H- ∘ P with P = -sgn(λ)(λ∂_λ + 3/2)
/// on G; HilbertFirst: P ∘ H+, P using the sign-flip origin rule.
LinearOperator boost_generator(BoostOrdering ordering = BoostOrdering::HilbertLast,
                               HilbertBackend backend = HilbertBackend::Spectral);

// --- harnesses ----------------------------------------------------------------

/// Interior fraction used for compositions containing a Hilbert transform.
inline constexpr double kHilbertInterior = 0.6;

/// max over probes of ‖(AB - BA - scale·E) f‖ / ‖f‖ on the interior fraction.
double commutator_residual(const LinearOperator& a, const LinearOperator& b,
                           const LinearOperator& expected, Complex scale,
                           const std::vector<AxialField>& probes,
                           double fraction = kHilbertInterior);

/// max over probe pairs of |<a, A b> - <B a, b>| / (‖a‖ ‖b‖).
double adjoint_residual(const LinearOperator& a, const LinearOperator& b, AdjointWeight weight,
                        const std::vector<std::pair<AxialField, AxialField>>& probes);

/// <a, A b> - <A a, b> for one pair; this is the surface term of an
/// integration by parts when A is a first-order operator.
Complex adjoint_defect(const LinearOperator& op, const AxialField& a, const AxialField& b,
                       AdjointWeight weight);

/// i [ (λa)* (λb) ] from 0- to 0+, limits extrapolated from innermost nodes.
Complex tilde_boundary_term(const AxialField& a, const AxialField& b);
/// i [ v_a* v_b (0+) + v_a* v_b (0-) ] with v = |λ| f.
Complex radial_boundary_term(const AxialField& a, const AxialField& b);

/// <f, A f>_w / <f, f>_w (real part).
double rayleigh_quotient(const LinearOperator& op, const AxialField& f, AdjointWeight weight);

/// ‖A(αa + βb) - αAa - βAb‖ / (‖αAa‖ + ‖βAb‖), plain G norms.
double linearity_residual(const LinearOperator& op, const AxialField& a, const AxialField& b,
                          Complex alpha, Complex beta);

/// Maximum pairwise interior disagreement between the three pbar0 forms on
/// f, relative to the spectral result. Warns above `tolerance`.
double pbar0_form_disagreement(const AxialField& f, double tolerance,
                               HilbertBackend backend = HilbertBackend::Quadrature);
/// Interior disagreement between the two boost orderings; warns above tolerance.
double boost_ordering_disagreement(const AxialField& f, double tolerance);

}  // namespace axial
