#include "fse/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fse/errors.hpp"
#include "fse/spectral.hpp"

namespace fse {

using std::numbers::pi;

double TailFit::slope_at(double x) const {
  if (region_begin >= region_end)
    throw DomainError("TailFit::slope_at: empty region");
  int best = region_begin;
  for (int j = region_begin; j < region_end; ++j)
    if (std::abs(grid.x(j) - x) < std::abs(grid.x(best) - x)) best = j;
  return local_slope[best - region_begin];
}

double ring_analytic_energy(int n, double alpha) {
  if (n < 0) throw DomainError("ring_analytic_energy: n must be >= 0");
  const int m = (n + 1) / 2;  // ceil(n/2)
  if (m == 0) return 0.0;
  return 0.5 * std::pow(pi * m, alpha);
}

WaveField ring_analytic_state(int n, const Grid& grid) {
  if (n < 0) throw DomainError("ring_analytic_state: n must be >= 0");
  const int m = (n + 1) / 2;
  if (2 * m >= grid.n_points / 2)
    throw DomainError("ring_analytic_state: mode " + std::to_string(m) +
                      " violates the Nyquist margin on " +
                      std::to_string(grid.n_points) + " points");
  WaveField psi(grid);
  for (int j = 0; j < grid.n_points; ++j) {
    const double x = grid.x(j);
    if (n == 0)
      psi.values[j] = 1.0;
    else if (n % 2 == 1)
      psi.values[j] = std::cos(pi * m * x);
    else
      psi.values[j] = std::sin(pi * m * x);
  }
  normalize(psi);
  return psi;
}

ErrorReport compare_state(const WaveField& num, const WaveField& ref,
                          double e_num, double e_ref, int index, double alpha) {
  if (num.grid != ref.grid) throw DomainError("compare_state: mismatched grids");
  if (std::abs(norm(num) - 1.0) > 1e-8 || std::abs(norm(ref) - 1.0) > 1e-8)
    throw DomainError("compare_state: states must be normalized");
  const double overlap = inner(ref, num).real();
  if (std::abs(overlap) < 1e-8)
    throw DomainError("compare_state: zero overlap, cannot sign-align "
                      "(wrong or mixed state?)");
  const double sign = overlap >= 0.0 ? 1.0 : -1.0;

  ErrorReport report;
  report.index = index;
  report.alpha = alpha;
  report.pointwise.resize(num.size());
  for (int j = 0; j < num.size(); ++j) {
    report.pointwise[j] = std::abs(sign * num.values[j] - ref.values[j]);
    report.max_pointwise = std::max(report.max_pointwise, report.pointwise[j]);
  }
  report.energy_error = std::abs(e_num - e_ref);
  return report;
}

namespace {

Eigen::MatrixXd dense_hamiltonian(const PotentialSpec& spec, const Grid& grid,
                                  double alpha) {
  if (grid.n_points > 1024)
    throw DomainError("dense oracle: grid exceeds the 1024-point cost guard");
  const int n = grid.n_points;
  const auto V = sample_potential(spec, grid);
  Eigen::MatrixXd H(n, n);
  WaveField column(grid);
  for (int j = 0; j < n; ++j) {
    std::fill(column.values.begin(), column.values.end(), Complex(0.0, 0.0));
    column.values[j] = Complex(1.0, 0.0);
    const WaveField h = hamiltonian_apply(column, V, alpha);
    for (int i = 0; i < n; ++i) H(i, j) = h.values[i].real();
  }
  // scrub the ~1e-14 roundoff asymmetry of the spectral kinetic part
  H = 0.5 * (H + H.transpose()).eval();
  return H;
}

}  // namespace

std::vector<std::pair<double, WaveField>> dense_oracle_eigen(
    const PotentialSpec& spec, const Grid& grid, double alpha, int n_states) {
  if (n_states < 1 || n_states > grid.n_points)
    throw DomainError("dense_oracle_eigen: bad n_states");
  const Eigen::MatrixXd H = dense_hamiltonian(spec, grid, alpha);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success)
    throw Error("dense_oracle_eigen: eigendecomposition failed");

  const double inv_sqrt_dx = 1.0 / std::sqrt(grid.dx);
  std::vector<std::pair<double, WaveField>> out;
  for (int s = 0; s < n_states; ++s) {
    WaveField psi(grid);
    int peak = 0;
    for (int j = 0; j < grid.n_points; ++j) {
      psi.values[j] = solver.eigenvectors()(j, s) * inv_sqrt_dx;
      if (std::abs(psi.values[j].real()) > std::abs(psi.values[peak].real()))
        peak = j;
    }
    if (psi.values[peak].real() < 0.0)
      for (Complex& v : psi.values) v = -v;
    out.emplace_back(solver.eigenvalues()(s), std::move(psi));
  }
  return out;
}

int count_bound_states(double alpha, const PotentialSpec& spec, const Grid& grid,
                       std::vector<double>* marginal) {
  if (spec.kind != PotentialKind::finite_well)
    throw DomainError("count_bound_states: finite-well potential required");
  const Eigen::MatrixXd H = dense_hamiltonian(spec, grid, alpha);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("count_bound_states: eigendecomposition failed");
  int count = 0;
  if (marginal) marginal->clear();
  for (int j = 0; j < grid.n_points; ++j) {
    const double e = solver.eigenvalues()(j);
    if (std::abs(e - spec.v0) <= 1e-6) {
      if (marginal) marginal->push_back(e);
    } else if (e < spec.v0) {
      ++count;
    }
  }
  return count;
}

TailFit extract_tail(const EigenSolution& sol, const PotentialSpec& spec) {
  const Grid& grid = sol.psi.grid;
  const auto V = sample_potential(spec, grid);
  const double noise_floor = 1e-13;

  int peak = 0;
  for (int j = 1; j < grid.n_points; ++j)
    if (std::abs(sol.psi.values[j]) > std::abs(sol.psi.values[peak])) peak = j;

  int begin = -1;
  for (int j = peak; j < grid.n_points; ++j)
    if (V[j] > sol.energy) {
      begin = j;
      break;
    }
  if (begin < 0)
    throw DomainError("extract_tail: no classically forbidden region to the "
                      "right of the peak");
  int end = begin;
  while (end < grid.n_points && std::abs(sol.psi.values[end]) > noise_floor &&
         V[end] > sol.energy)
    ++end;
  if (end - begin < 3)
    throw DomainError("extract_tail: forbidden region has fewer than 3 usable "
                      "samples");

  TailFit fit;
  fit.grid = grid;
  fit.region_begin = begin;
  fit.region_end = end;
  fit.log_abs.resize(end - begin);
  for (int j = begin; j < end; ++j)
    fit.log_abs[j - begin] = std::log(std::abs(sol.psi.values[j]));
  fit.local_slope.resize(end - begin);
  for (int j = begin; j < end; ++j) {
    const int lo = std::max(begin, j - 1), hi = std::min(end - 1, j + 1);
    fit.local_slope[j - begin] =
        (fit.log_abs[hi - begin] - fit.log_abs[lo - begin]) /
        (grid.dx * (hi - lo));
  }
  return fit;
}

int sign_changes(const WaveField& psi, int begin, int end, double floor) {
  int changes = 0;
  double last = 0.0;
  for (int j = begin; j < end; ++j) {
    const double v = psi.values[j].real();
    if (std::abs(v) <= floor) continue;
    if (last != 0.0 && v * last < 0.0) ++changes;
    last = v;
  }
  return changes;
}

double tunneling_frequency(double e0, double e1) {
  return std::abs(e1 - e0) / (2.0 * pi);
}

double left_mass(const WaveField& psi) {
  double mass = 0.0;
  for (int j = 0; j < psi.size(); ++j)
    if (psi.grid.x(j) < 0.0) mass += std::norm(psi.values[j]);
  return mass * psi.grid.dx;
}

std::pair<WaveField, WaveField> left_right_superpositions(
    const WaveField& psi_plus, const WaveField& psi_minus) {
  if (std::abs(inner(psi_plus, psi_minus)) > 1e-8)
    throw DomainError("left_right_superpositions: inputs are not orthogonal");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  WaveField diff(psi_plus.grid), sum(psi_plus.grid);
  for (int j = 0; j < psi_plus.size(); ++j) {
    diff.values[j] = (psi_plus.values[j] - psi_minus.values[j]) * inv_sqrt2;
    sum.values[j] = (psi_plus.values[j] + psi_minus.values[j]) * inv_sqrt2;
  }
  normalize(diff);
  normalize(sum);
  if (left_mass(diff) >= left_mass(sum)) return {std::move(diff), std::move(sum)};
  return {std::move(sum), std::move(diff)};
}

}  // namespace fse
