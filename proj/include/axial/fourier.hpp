#pragma once

// Unitary full-line discrete Fourier pair on the half-offset grids,
//
//   ĝ(κ_m) = (2π)^{-1/2} Σ_j g(λ_j) e^{-i κ_m λ_j} h
//   g(λ_j) = (2π)^{-1/2} Σ_m ĝ(κ_m) e^{+i κ_m λ_j} Δκ
//
// evaluated with one FFT of length 2 n_half plus diagonal twiddles.
// h Δκ = π / n_half makes the pair exactly inverse. The implied periodic
// extension is antiperiodic with period 2L.

#include <functional>
#include <span>

#include "axial/grid.hpp"

namespace axial::fourier {

ComplexVector forward(std::span<const Complex> samples, const AxisGrid& grid);
ComplexVector inverse(std::span<const Complex> spectrum, const AxisGrid& grid);

/// inverse(symbol(κ) * forward(samples)).
ComplexVector apply_symbol(std::span<const Complex> samples, const AxisGrid& grid,
                           const std::function<Complex(double)>& symbol);

/// d/dλ with symbol iκ.
ComplexVector derivative(std::span<const Complex> samples, const AxisGrid& grid);

/// Full-line Hilbert transform (1/π) p.v.∫ g(t)/(λ - t) dt, symbol -i sgn κ.
ComplexVector hilbert(std::span<const Complex> samples, const AxisGrid& grid);

/// d/dκ of samples living on the κ grid (symbol -iλ on the conjugate side).
ComplexVector kappa_derivative(std::span<const Complex> profile, const AxisGrid& grid);

}  // namespace axial::fourier
