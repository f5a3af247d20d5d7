#ifndef FSE_SPECTRAL_HPP
#define FSE_SPECTRAL_HPP

#include <span>
#include <vector>

#include "fse/grid.hpp"

namespace fse {

// Riesz fractional derivative: inverse FFT of -|k|^alpha times the FFT.
// Reduces to the second derivative at alpha = 2; |0|^alpha := 0.
WaveField riesz_apply(const WaveField& psi, double alpha);

// Per-mode propagator factors exp(-tau * |k|^alpha / 2) for one split step.
std::vector<Complex> kinetic_phase(const Grid& grid, double alpha, Complex tau);

// (-1/2 d^alpha/dx^alpha + V) psi, the spectral Hamiltonian application.
WaveField hamiltonian_apply(const WaveField& psi, std::span<const double> potential,
                            double alpha);

}  // namespace fse

#endif
