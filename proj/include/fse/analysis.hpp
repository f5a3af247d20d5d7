#ifndef FSE_ANALYSIS_HPP
#define FSE_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "fse/grid.hpp"
#include "fse/potentials.hpp"
#include "fse/solver.hpp"

namespace fse {

struct ErrorReport {
  std::vector<double> pointwise;  // |psi_num - psi_ref| per sample
  double max_pointwise = 0.0;
  double energy_error = 0.0;
  int index = 0;
  double alpha = 0.0;
};

// ln|psi| and its discrete slope over the classically forbidden region
// (V > E) extending rightward from the state's peak.
struct TailFit {
  Grid grid;
  int region_begin = 0;  // grid index range [begin, end)
  int region_end = 0;
  std::vector<double> log_abs;
  std::vector<double> local_slope;  // d ln|psi| / dx, centered differences

  double slope_at(double x) const;  // slope of the region sample nearest x
};

// Ring energies E_n = ((pi ceil(n/2))^alpha) / 2.
double ring_analytic_energy(int n, double alpha);

// Ring eigenstates: n = 0 the constant, odd n the cosine member of the
// degenerate pair, even n the sine member; mode number ceil(n/2).
WaveField ring_analytic_state(int n, const Grid& grid);

ErrorReport compare_state(const WaveField& num, const WaveField& ref,
                          double e_num, double e_ref, int index = 0,
                          double alpha = 0.0);

// Dense brute-force reference: the Hamiltonian assembled column by column
// (spectral kinetic + diagonal potential), symmetrized, then diagonalized.
// Guarded to n_points <= 1024.
std::vector<std::pair<double, WaveField>> dense_oracle_eigen(
    const PotentialSpec& spec, const Grid& grid, double alpha, int n_states);

// Dense-oracle eigenvalues strictly below v0 (finite well only); states
// within 1e-6 of v0 are reported separately, not counted.
int count_bound_states(double alpha, const PotentialSpec& spec, const Grid& grid,
                       std::vector<double>* marginal = nullptr);

TailFit extract_tail(const EigenSolution& sol, const PotentialSpec& spec);

// Sign changes of Re(psi) across [begin, end), ignoring samples below floor.
int sign_changes(const WaveField& psi, int begin, int end, double floor = 1e-13);

// f = |e1 - e0| / (2 pi).
double tunneling_frequency(double e0, double e1);

// Left/right localized combinations of an orthonormal opposite-parity pair;
// the first member carries the larger mass on x < 0.
std::pair<WaveField, WaveField> left_right_superpositions(
    const WaveField& psi_plus, const WaveField& psi_minus);

// Probability mass on x < 0.
double left_mass(const WaveField& psi);

}  // namespace fse

#endif
