#pragma once

// Analysis and synthesis maps between axial fields and signed-κ profiles.
//
// With g = sqrt|λ| ψ the analysis map is the unitary Fourier transform of g
// divided by sqrt|κ|:  sqrt|κ| φ(κ) = ĝ(κ).  analyze/synthesize build it from
// the half-line cosine/sine transforms and parity; the *_fast variants take
// the full-line FFT route. Both are exact inverses on the grid.
//
// Convention: φ(κ > 0) is the amplitude for momentum κ n̂, φ(κ < 0) for
// momentum |κ| (-n̂).

#include "axial/grid.hpp"

namespace axial {

/// φ(k) = (1/(2 sqrt k)) [(Fc - iFs) g(+r) + (Fc + iFs) g(-r)] for κ = k > 0,
/// with the two halves exchanged for κ < 0.
SpectralProfile analyze(const AxialField& psi);

/// Inverse of analyze; returns an F-rep field.
AxialField synthesize(const SpectralProfile& phi);

SpectralProfile analyze_fast(const AxialField& psi);
/// Inverse of analyze_fast; returns a G-rep field.
AxialField synthesize_fast(const SpectralProfile& phi);

/// synthesize_fast(multiplier(κ) * analyze_fast(psi)), in psi's rep.
AxialField apply_spectral_multiplier(const AxialField& psi,
                                     const std::function<Complex(double)>& multiplier);

}  // namespace axial
