#ifndef FSE_SOLVER_HPP
#define FSE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fse/grid.hpp"
#include "fse/potentials.hpp"
#include "fse/splitting.hpp"

namespace fse {

enum class Parity { none, even, odd };

struct RefineStage {
  double dt_fine;
  long n_fine_steps;
};

struct SolveConfig {
  double alpha = 2.0;      // supported range 1 < alpha <= 2.5
  double dt = 1e-2;
  double tol = 1e-12;      // per-step sup-norm change of the normalized state
  long max_iters = 1'000'000;
  Parity parity = Parity::none;
  std::vector<WaveField> deflation_basis;  // mutually orthonormal
  std::optional<RefineStage> refine;       // defaulted for the finite well
  std::uint64_t seed = 1;
};

// Final-stage defaults applied when the potential is a finite well and the
// config leaves refine unset.
inline constexpr RefineStage kFiniteWellRefine{2.5e-4, 40'000};

struct EigenSolution {
  WaveField psi;        // real-cast, sign-fixed, unit norm
  double energy;        // Rayleigh quotient
  double energy_decay;  // from the norm decay over the last step
  long iterations;
  double residual;      // ||H psi - E psi||_2
  double alpha;
  int index = 0;
  double boundary_ratio = 0.0;    // max boundary-adjacent |psi| / peak |psi|
  bool domain_too_small = false;  // bound state with boundary_ratio > 1e-8
};

// Normalized pseudo-random state with Fourier content limited to |k| <= 10 dk,
// parity-projected on request; deterministic per seed.
WaveField initial_state(const Grid& grid, Parity parity, std::uint64_t seed);

// Removes the projections onto every basis member and renormalizes
// (second orthogonalization pass if the first leaves overlap above 1e-12).
WaveField deflate(const WaveField& psi, const std::vector<WaveField>& basis);

// (psi(x) +- psi(-x))/2 renormalized; requires a grid symmetric about 0.
WaveField project_parity(const WaveField& psi, Parity parity);

// E = -log(norm_ratio)/dt for a ratio measured over one un-normalized step.
double energy_decay_rate(double norm_ratio, double dt);

// <psi, H psi> with the kinetic part applied spectrally; psi must be normalized.
double rayleigh_energy(const WaveField& psi, const PotentialSpec& spec, double alpha);

EigenSolution imaginary_time_solve(const SolveConfig& config,
                                   const PotentialSpec& spec, const Grid& grid,
                                   const SplitScheme& scheme);

// States 0..n_states-1, alternating parity on symmetric potentials, each
// deflated against all previous ones; sorted by energy.
std::vector<EigenSolution> solve_spectrum(const SolveConfig& config,
                                          const PotentialSpec& spec,
                                          const Grid& grid,
                                          const SplitScheme& scheme,
                                          int n_states);

// Unitary evolution with the Strang scheme (real coefficients only).
WaveField real_time_propagate(const WaveField& psi, const PotentialSpec& spec,
                              double alpha, double dt, long n_steps);

}  // namespace fse

#endif
