#include "fse/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fse/errors.hpp"
#include "fse/fft.hpp"
#include "fse/spectral.hpp"

namespace fse {

namespace {

void deflate_in_place(WaveField& psi, const std::vector<WaveField>& basis) {
  if (basis.empty()) return;
  for (int pass = 0; pass < 2; ++pass) {
    for (const WaveField& b : basis) {
      const Complex c = inner(b, psi);
      for (int j = 0; j < psi.size(); ++j) psi.values[j] -= c * b.values[j];
    }
    double worst = 0.0;
    for (const WaveField& b : basis) worst = std::max(worst, std::abs(inner(b, psi)));
    if (worst < 1e-12) break;
  }
}

void project_parity_in_place(WaveField& psi, Parity parity) {
  if (parity == Parity::none) return;
  const double sign = parity == Parity::even ? 1.0 : -1.0;
  const Grid& g = psi.grid;
  std::vector<Complex>& v = psi.values;
  for (int j = 1; j < g.n_points - j; ++j) {
    const int m = g.n_points - j;
    const Complex pj = 0.5 * (v[j] + sign * v[m]);
    v[j] = pj;
    v[m] = sign * pj;
  }
  if (parity == Parity::odd) {
    // self-mirrored samples (x = x_min and, for even n, x = 0)
    v[0] = Complex(0.0, 0.0);
    if (g.n_points % 2 == 0) v[g.n_points / 2] = Complex(0.0, 0.0);
  }
}

void check_basis_orthonormal(const std::vector<WaveField>& basis) {
  for (size_t i = 0; i < basis.size(); ++i) {
    if (std::abs(norm(basis[i]) - 1.0) > 1e-8)
      throw DomainError("deflation basis member " + std::to_string(i) +
                        " is not normalized");
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (std::abs(inner(basis[i], basis[j])) > 1e-8)
        throw DomainError("deflation basis members " + std::to_string(i) + "," +
                          std::to_string(j) + " are not orthogonal");
  }
}

// Largest boundary-adjacent amplitude relative to the peak.
double boundary_amplitude_ratio(const WaveField& psi) {
  const int n = psi.size();
  double peak = 0.0;
  for (const Complex& v : psi.values) peak = std::max(peak, std::abs(v));
  double edge = 0.0;
  for (int j : {0, 1, n - 2, n - 1}) edge = std::max(edge, std::abs(psi.values[j]));
  return peak > 0.0 ? edge / peak : 0.0;
}

}  // namespace

WaveField initial_state(const Grid& grid, Parity parity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  const auto k = wavenumbers(grid);
  const double k_cut = 10.0 * grid.dk() * (1.0 + 1e-12);
  WaveField psi(grid);
  for (int j = 0; j < grid.n_points; ++j)
    if (std::abs(k[j]) <= k_cut)
      psi.values[j] = Complex(dist(rng), dist(rng));
  Fft::shared(grid.n_points).inverse(psi.values.data());
  if (parity != Parity::none) project_parity_in_place(psi, parity);
  normalize(psi);
  return psi;
}

WaveField deflate(const WaveField& psi, const std::vector<WaveField>& basis) {
  WaveField out = psi;
  deflate_in_place(out, basis);
  if (norm(out) < 1e-10)
    throw DegenerateError("deflate: state lies in the span of the basis");
  normalize(out);
  return out;
}

WaveField project_parity(const WaveField& psi, Parity parity) {
  if (parity == Parity::none)
    throw DomainError("project_parity: parity must be even or odd");
  if (!psi.grid.symmetric_about_zero())
    throw DomainError("project_parity: grid is not symmetric about 0");
  WaveField out = psi;
  project_parity_in_place(out, parity);
  if (norm(out) < 1e-10)
    throw DegenerateError("project_parity: projection left nothing of the state");
  normalize(out);
  return out;
}

double energy_decay_rate(double norm_ratio, double dt) {
  if (!(norm_ratio > 0.0))
    throw DomainError("energy_decay_rate: ratio must be positive");
  if (!(dt > 0.0)) throw DomainError("energy_decay_rate: dt must be positive");
  return -std::log(norm_ratio) / dt;
}

double rayleigh_energy(const WaveField& psi, const PotentialSpec& spec,
                       double alpha) {
  if (std::abs(norm(psi) - 1.0) > 1e-8)
    throw DomainError("rayleigh_energy: state is not normalized");
  const auto V = sample_potential(spec, psi.grid);
  const WaveField h = hamiltonian_apply(psi, V, alpha);
  const Complex e = inner(psi, h);
  if (std::abs(e.imag()) >= 1e-10)
    throw AccuracyError("rayleigh_energy: imaginary part " +
                        std::to_string(e.imag()));
  return e.real();
}

EigenSolution imaginary_time_solve(const SolveConfig& config,
                                   const PotentialSpec& spec, const Grid& grid,
                                   const SplitScheme& scheme) {
  if (!(config.dt > 0.0) || !(config.tol > 0.0))
    throw DomainError("imaginary_time_solve: dt and tol must be positive");
  check_basis_orthonormal(config.deflation_basis);
  if (config.parity != Parity::none && !grid.symmetric_about_zero())
    throw DomainError("imaginary_time_solve: parity constraint on an asymmetric grid");

  const auto V = sample_potential(spec, grid);

  std::optional<RefineStage> refine = config.refine;
  if (!refine && spec.kind == PotentialKind::finite_well)
    refine = kFiniteWellRefine;
  if (refine && !(refine->dt_fine > 0.0 && refine->dt_fine < config.dt))
    throw DomainError("imaginary_time_solve: refine stage needs 0 < dt_fine < dt");

  WaveField psi = initial_state(grid, config.parity, config.seed);
  deflate_in_place(psi, config.deflation_basis);
  project_parity_in_place(psi, config.parity);
  if (norm(psi) < 1e-10)
    throw DegenerateError("imaginary_time_solve: initial state vanished under "
                          "deflation/parity projection");
  normalize(psi);

  struct Stage {
    double dt;
    long cap;
  };
  std::vector<Stage> stages{{config.dt, config.max_iters}};
  if (refine) stages.push_back({refine->dt_fine, refine->n_fine_steps});

  long iters = 0;
  double ratio = 1.0;
  double stage_dt = config.dt;
  WaveField prev(grid);
  for (const Stage& stage : stages) {
    stage_dt = stage.dt;
    SplitStepper stepper(grid, scheme, V, config.alpha, stage.dt,
                         TimeMode::imaginary);
    bool converged = false;
    for (long it = 0; it < stage.cap; ++it) {
      prev.values = psi.values;
      stepper.step(psi.values);
      if (!all_finite(psi))
        throw InstabilityError("imaginary_time_solve: non-finite state at "
                               "iteration " + std::to_string(iters));
      ratio = norm(psi);  // prev is normalized, so this is the decay factor
      deflate_in_place(psi, config.deflation_basis);
      project_parity_in_place(psi, config.parity);
      if (norm(psi) < 1e-10)
        throw DegenerateError("imaginary_time_solve: state vanished under "
                              "deflation at iteration " + std::to_string(iters));
      normalize(psi);
      // lock the global phase to the previous iterate; the complex
      // coefficients would otherwise rotate the fixed point each step
      const Complex ov = inner(prev, psi);
      if (std::abs(ov) > 0.0) {
        const Complex ph = std::conj(ov) / std::abs(ov);
        for (Complex& v : psi.values) v *= ph;
      }
      ++iters;
      if (sup_distance(psi, prev) < config.tol) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw ConvergenceError("imaginary_time_solve: stage with dt = " +
                             std::to_string(stage.dt) + " did not reach tol " +
                             std::to_string(config.tol) + " within " +
                             std::to_string(stage.cap) + " iterations");
  }

  const double e_decay = energy_decay_rate(ratio, stage_dt);

  // cast to the real plane: rotate the global phase to maximize the real-part
  // norm, then drop the imaginary residue
  Complex s2{0.0, 0.0};
  for (const Complex& v : psi.values) s2 += v * v;
  if (std::abs(s2) > 0.0) {
    const Complex ph = std::exp(Complex(0.0, -0.5 * std::arg(s2)));
    for (Complex& v : psi.values) v *= ph;
  }
  double imag_mass = 0.0;
  for (const Complex& v : psi.values) imag_mass += v.imag() * v.imag();
  imag_mass *= grid.dx;
  if (imag_mass >= 1e-8)
    throw AccuracyError("imaginary_time_solve: dropped imaginary mass " +
                        std::to_string(imag_mass) + " exceeds 1e-8");
  for (Complex& v : psi.values) v = Complex(v.real(), 0.0);
  normalize(psi);

  // sign: the maximum-|value| sample ends up positive
  int peak = 0;
  for (int j = 1; j < psi.size(); ++j)
    if (std::abs(psi.values[j].real()) > std::abs(psi.values[peak].real()))
      peak = j;
  if (psi.values[peak].real() < 0.0)
    for (Complex& v : psi.values) v = -v;

  EigenSolution sol;
  sol.alpha = config.alpha;
  sol.energy = rayleigh_energy(psi, spec, config.alpha);
  sol.energy_decay = e_decay;
  sol.iterations = iters;
  if (std::abs(sol.energy - sol.energy_decay) >= 1e-6)
    throw ConvergenceError(
        "imaginary_time_solve: energy estimators disagree by " +
        std::to_string(std::abs(sol.energy - sol.energy_decay)) +
        " (reduce dt or add a refine stage)");

  WaveField h = hamiltonian_apply(psi, V, config.alpha);
  for (int j = 0; j < psi.size(); ++j) h.values[j] -= sol.energy * psi.values[j];
  sol.residual = norm(h);

  sol.boundary_ratio = boundary_amplitude_ratio(psi);
  const double v_edge = std::min(V.front(), V.back());
  sol.domain_too_small = v_edge > sol.energy && sol.boundary_ratio > 1e-8;
  sol.psi = std::move(psi);
  return sol;
}

std::vector<EigenSolution> solve_spectrum(const SolveConfig& config,
                                          const PotentialSpec& spec,
                                          const Grid& grid,
                                          const SplitScheme& scheme,
                                          int n_states) {
  if (n_states < 1) throw DomainError("solve_spectrum: n_states must be >= 1");
  const bool symmetric = grid.symmetric_about_zero() &&
                         parity_of_potential(spec, grid) == Symmetry::symmetric;

  std::vector<EigenSolution> out;
  SolveConfig state_config = config;
  for (int n = 0; n < n_states; ++n) {
    state_config.parity = symmetric
                              ? (n % 2 == 0 ? Parity::even : Parity::odd)
                              : Parity::none;
    state_config.seed = config.seed + static_cast<std::uint64_t>(n);
    bool solved = false;
    for (int attempt = 0; attempt < 3 && !solved; ++attempt) {
      try {
        out.push_back(imaginary_time_solve(state_config, spec, grid, scheme));
        solved = true;
      } catch (const DegenerateError&) {
        state_config.seed += 9973;  // reseed away from the basis span
      } catch (const Error& e) {
        throw ConvergenceError("solve_spectrum: state " + std::to_string(n) +
                               ": " + e.what());
      }
    }
    if (!solved)
      throw DegenerateError("solve_spectrum: state " + std::to_string(n) +
                            ": repeated degenerate initial states");
    state_config.deflation_basis.push_back(out.back().psi);
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const EigenSolution& a, const EigenSolution& b) {
                     return a.energy < b.energy;
                   });
  for (int n = 0; n < n_states; ++n) out[n].index = n;
  return out;
}

WaveField real_time_propagate(const WaveField& psi, const PotentialSpec& spec,
                              double alpha, double dt, long n_steps) {
  if (n_steps < 0) throw DomainError("real_time_propagate: negative step count");
  const auto V = sample_potential(spec, psi.grid);
  const double norm0 = norm(psi);
  if (!(norm0 > 0.0)) throw DomainError("real_time_propagate: zero state");

  WaveField out = psi;
  SplitStepper stepper(psi.grid, scheme_strang(), V, alpha, dt,
                       TimeMode::real_time);
  stepper.run(out.values, n_steps);
  if (!all_finite(out))
    throw InstabilityError("real_time_propagate: non-finite state");
  const double drift = std::abs(norm(out) / norm0 - 1.0);
  if (drift > 1e-6)
    throw InstabilityError("real_time_propagate: norm drift " +
                           std::to_string(drift));
  return out;
}

}  // namespace fse
