#include "fse/grid.hpp"

#include <cmath>
#include <numbers>

#include "fse/errors.hpp"

namespace fse {

double Grid::dk() const {
  return 2.0 * std::numbers::pi / (n_points * dx);
}

bool Grid::symmetric_about_zero() const {
  return std::abs(x_min + x_max) < 1e-12 * (x_max - x_min);
}

Grid make_grid(int n_points, double x_min, double x_max) {
  if (n_points < 4) throw DomainError("make_grid: n_points must be >= 4");
  if (!(x_max > x_min)) throw DomainError("make_grid: x_max must exceed x_min");
  Grid g;
  g.n_points = n_points;
  g.x_min = x_min;
  g.x_max = x_max;
  g.dx = (x_max - x_min) / n_points;
  return g;
}

std::vector<double> wavenumbers(const Grid& grid) {
  const int n = grid.n_points;
  const double dk = grid.dk();
  std::vector<double> k(n);
  const int n_pos = (n + 1) / 2;  // 0 and positive frequencies
  for (int j = 0; j < n_pos; ++j) k[j] = j * dk;
  for (int j = n_pos; j < n; ++j) k[j] = (j - n) * dk;
  return k;
}

WaveField::WaveField(const Grid& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != g.n_points)
    throw DomainError("WaveField: sample count does not match grid");
}

Complex inner(const WaveField& a, const WaveField& b) {
  if (a.grid != b.grid) throw DomainError("inner: mismatched grids");
  Complex s{0.0, 0.0};
  for (int j = 0; j < a.size(); ++j)
    s += std::conj(a.values[j]) * b.values[j];
  return s * a.grid.dx;
}

double norm(const WaveField& psi) {
  double s = 0.0;
  for (const Complex& v : psi.values) s += std::norm(v);
  return std::sqrt(s * psi.grid.dx);
}

double sup_distance(const WaveField& a, const WaveField& b) {
  if (a.grid != b.grid) throw DomainError("sup_distance: mismatched grids");
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j)
    m = std::max(m, std::abs(a.values[j] - b.values[j]));
  return m;
}

bool all_finite(const WaveField& psi) {
  for (const Complex& v : psi.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

void normalize(WaveField& psi) {
  const double n = norm(psi);
  if (n < 1e-10) throw DegenerateError("normalize: norm below 1e-10");
  const double inv = 1.0 / n;
  for (Complex& v : psi.values) v *= inv;
}

}  // namespace fse
