#include "fse/potentials.hpp"

#include <cmath>

#include "fse/errors.hpp"

namespace fse {

PotentialSpec PotentialSpec::ring() {
  PotentialSpec s;
  s.kind = PotentialKind::ring_zero;
  return s;
}

PotentialSpec PotentialSpec::harmonic() {
  PotentialSpec s;
  s.kind = PotentialKind::harmonic;
  return s;
}

PotentialSpec PotentialSpec::finite_well_spec(double v0, double half_width) {
  if (!(v0 > 0.0) || !(half_width > 0.0))
    throw DomainError("finite_well: v0 and half_width must be positive");
  PotentialSpec s;
  s.kind = PotentialKind::finite_well;
  s.v0 = v0;
  s.half_width = half_width;
  return s;
}

PotentialSpec PotentialSpec::double_well_spec(double c2, double c4, double c0) {
  PotentialSpec s;
  s.kind = PotentialKind::double_well;
  s.c2 = c2;
  s.c4 = c4;
  s.c0 = c0;
  return s;
}

PotentialSpec PotentialSpec::tabulated_spec(std::vector<double> xs,
                                            std::vector<double> vs) {
  if (xs.size() != vs.size())
    throw DomainError("tabulated: x and V columns differ in length");
  PotentialSpec s;
  s.kind = PotentialKind::tabulated;
  s.xs = std::move(xs);
  s.vs = std::move(vs);
  return s;
}

std::vector<double> sample_potential(const PotentialSpec& spec, const Grid& grid) {
  std::vector<double> v(grid.n_points);
  switch (spec.kind) {
    case PotentialKind::ring_zero:
      break;
    case PotentialKind::harmonic:
      for (int j = 0; j < grid.n_points; ++j) {
        const double x = grid.x(j);
        v[j] = 0.5 * x * x;
      }
      break;
    case PotentialKind::finite_well:
      for (int j = 0; j < grid.n_points; ++j)
        v[j] = std::abs(grid.x(j)) < spec.half_width ? 0.0 : spec.v0;
      break;
    case PotentialKind::double_well:
      for (int j = 0; j < grid.n_points; ++j) {
        const double x2 = grid.x(j) * grid.x(j);
        v[j] = spec.c2 * x2 + spec.c4 * x2 * x2 + spec.c0;
      }
      break;
    case PotentialKind::tabulated: {
      if (static_cast<int>(spec.vs.size()) != grid.n_points)
        throw DomainError("tabulated potential has " +
                          std::to_string(spec.vs.size()) + " samples, grid has " +
                          std::to_string(grid.n_points));
      for (int j = 0; j < grid.n_points; ++j) {
        const double xj = grid.x(j);
        if (std::abs(spec.xs[j] - xj) > 1e-9 * std::max(1.0, std::abs(xj)))
          throw DomainError("tabulated potential x column does not match the run "
                            "grid at row " + std::to_string(j));
        v[j] = spec.vs[j];
      }
      break;
    }
  }
  return v;
}

Symmetry parity_of_potential(const PotentialSpec& spec, const Grid& grid) {
  const auto v = sample_potential(spec, grid);
  double vmax = 0.0, dmax = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    vmax = std::max(vmax, std::abs(v[j]));
    dmax = std::max(dmax, std::abs(v[j] - v[grid.mirror(j)]));
  }
  return dmax <= 1e-10 * vmax ? Symmetry::symmetric : Symmetry::asymmetric;
}

}  // namespace fse
