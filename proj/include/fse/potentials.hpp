#ifndef FSE_POTENTIALS_HPP
#define FSE_POTENTIALS_HPP

#include <vector>

#include "fse/grid.hpp"

namespace fse {

enum class PotentialKind { ring_zero, harmonic, finite_well, double_well, tabulated };

enum class Symmetry { symmetric, asymmetric };

struct PotentialSpec {
  PotentialKind kind = PotentialKind::ring_zero;
  // finite well
  double v0 = 100.0;
  double half_width = 1.0;
  // double well c2 x^2 + c4 x^4 + c0
  double c2 = -4.0;
  double c4 = 0.5;
  double c0 = 8.0;
  // tabulated samples; must match the target grid one-to-one
  std::vector<double> xs;
  std::vector<double> vs;

  static PotentialSpec ring();
  static PotentialSpec harmonic();
  static PotentialSpec finite_well_spec(double v0, double half_width);
  static PotentialSpec double_well_spec(double c2 = -4.0, double c4 = 0.5,
                                        double c0 = 8.0);
  static PotentialSpec tabulated_spec(std::vector<double> xs, std::vector<double> vs);
};

// Pointwise V(x_j). The finite well takes the barrier value at |x| == half_width
// (the interior test is strict).
std::vector<double> sample_potential(const PotentialSpec& spec, const Grid& grid);

Symmetry parity_of_potential(const PotentialSpec& spec, const Grid& grid);

}  // namespace fse

#endif
