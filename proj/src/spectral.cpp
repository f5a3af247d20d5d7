#include "fse/spectral.hpp"

#include <cmath>

#include "fse/errors.hpp"
#include "fse/fft.hpp"

namespace fse {

WaveField riesz_apply(const WaveField& psi, double alpha) {
  if (alpha <= 0.0) throw DomainError("riesz_apply: alpha must be positive");
  if (!all_finite(psi)) throw DomainError("riesz_apply: non-finite input");
  const auto k = wavenumbers(psi.grid);
  WaveField out = psi;
  const Fft& fft = Fft::shared(psi.grid.n_points);
  fft.forward(out.values.data());
  for (int j = 0; j < out.size(); ++j) {
    const double kj = std::abs(k[j]);
    out.values[j] *= (kj == 0.0) ? 0.0 : -std::pow(kj, alpha);
  }
  fft.inverse(out.values.data());
  return out;
}

std::vector<Complex> kinetic_phase(const Grid& grid, double alpha, Complex tau) {
  if (alpha <= 0.0) throw DomainError("kinetic_phase: alpha must be positive");
  const auto k = wavenumbers(grid);
  std::vector<Complex> phase(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    const double kj = std::abs(k[j]);
    const double m = (kj == 0.0) ? 0.0 : 0.5 * std::pow(kj, alpha);
    phase[j] = std::exp(-tau * m);
  }
  return phase;
}

WaveField hamiltonian_apply(const WaveField& psi, std::span<const double> potential,
                            double alpha) {
  if (static_cast<int>(potential.size()) != psi.size())
    throw DomainError("hamiltonian_apply: potential length mismatch");
  WaveField out = riesz_apply(psi, alpha);
  for (int j = 0; j < out.size(); ++j)
    out.values[j] = -0.5 * out.values[j] + potential[j] * psi.values[j];
  return out;
}

}  // namespace fse
