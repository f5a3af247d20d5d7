#ifndef FSE_GRID_HPP
#define FSE_GRID_HPP

#include <complex>
#include <vector>

namespace fse {

using Complex = std::complex<double>;

// Uniform periodic grid on [x_min, x_max); x_max aliases x_min.
struct Grid {
  int n_points = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;

  double x(int j) const { return x_min + dx * j; }
  double dk() const;  // wavenumber spacing 2*pi/(n_points*dx)
  double k_max() const { return dk() * (n_points / 2); }

  // Index of the sample at -x(j) under periodic wrap; exact when the
  // domain is symmetric about 0.
  int mirror(int j) const { return j == 0 ? 0 : n_points - j; }
  bool symmetric_about_zero() const;

  bool operator==(const Grid&) const = default;
};

Grid make_grid(int n_points, double x_min, double x_max);

// FFT-ordered wavenumbers: entry j is j*dk for j < (n+1)/2, (j-n)*dk after.
std::vector<double> wavenumbers(const Grid& grid);

// Complex amplitudes sampled on a grid.
struct WaveField {
  Grid grid;
  std::vector<Complex> values;

  WaveField() = default;
  explicit WaveField(const Grid& g) : grid(g), values(g.n_points) {}
  WaveField(const Grid& g, std::vector<Complex> v);

  int size() const { return grid.n_points; }
};

// dx-weighted discrete L2 inner product <a|b> (conjugate-linear in a).
Complex inner(const WaveField& a, const WaveField& b);
double norm(const WaveField& psi);
double sup_distance(const WaveField& a, const WaveField& b);
bool all_finite(const WaveField& psi);

// Scales to unit L2 norm. Throws DegenerateError below the noise floor.
void normalize(WaveField& psi);

}  // namespace fse

#endif
