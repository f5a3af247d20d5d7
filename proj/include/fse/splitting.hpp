#ifndef FSE_SPLITTING_HPP
#define FSE_SPLITTING_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fse/fft.hpp"
#include "fse/grid.hpp"

namespace fse {

enum class TimeMode { imaginary, real_time };

// Operator-splitting composition: per step k the kinetic factor
// exp(-c a_k dt |k|^alpha / 2) acts in Fourier space, then the potential
// factor exp(-c b_k dt V) pointwise; c = 1 (imaginary) or i (real time).
struct SplitScheme {
  std::string name;
  std::vector<std::pair<Complex, Complex>> steps;  // (a_k, b_k)
  int formal_order = 0;
};

SplitScheme scheme_lie();
SplitScheme scheme_strang();
SplitScheme scheme_sixth();  // 8-step complex-coefficient scheme
const SplitScheme& scheme_by_name(std::string_view name);

// (sum a_k, sum b_k); both must be 1 for a consistent composition.
std::pair<Complex, Complex> coefficient_sums(const SplitScheme& scheme);

// Reusable stepper holding precomputed multiplier tables and the FFT plan.
// Bound to the creating thread (plan cache is thread-local).
class SplitStepper {
 public:
  SplitStepper(const Grid& grid, const SplitScheme& scheme,
               std::span<const double> potential, double alpha, double dt,
               TimeMode mode);

  // One composed step; enters and leaves position space.
  void step(std::vector<Complex>& values) const;

  // n composed steps with the b = 0 transform pairs between steps elided.
  void run(std::vector<Complex>& values, long n_steps) const;

  double dt() const { return dt_; }

 private:
  const Fft& fft_;
  int n_;
  double dt_;
  std::vector<std::vector<Complex>> kinetic_;
  std::vector<std::vector<Complex>> potential_;
  std::vector<bool> has_potential_;

  // advances through all stages; `in_k` tracks the active representation
  void pass(std::vector<Complex>& values, bool& in_k) const;
};

WaveField apply_split_step(const WaveField& psi, const SplitScheme& scheme,
                           std::span<const double> potential, double alpha,
                           double dt, TimeMode mode);

// Empirical convergence order on the harmonic problem: evolves a fixed smooth
// state to imaginary time T = 0.5 over a dt ladder, measures L2 error against
// a dt = 1e-5 reference, and returns the least-squares slope of
// log(error) vs log(dt). Points at the double-precision floor are excluded;
// fewer than three usable points raises DegenerateError (widen the ladder).
double order_probe(const SplitScheme& scheme, double alpha);
double order_probe(const SplitScheme& scheme, double alpha,
                   std::span<const double> dts);

}  // namespace fse

#endif
