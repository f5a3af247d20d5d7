#include <cmath>
#include <set>

#include "doctest.h"
#include "fse/errors.hpp"
#include "fse/grid.hpp"
#include "fse/potentials.hpp"

using namespace fse;

TEST_CASE("sample_potential: harmonic") {
  Grid g = make_grid(8, -4.0, 4.0);  // dx = 1, x = 2 on the grid
  auto v = sample_potential(PotentialSpec::harmonic(), g);
  CHECK(v[6] == 2.0);  // x(6) = 2
  CHECK(v[4] == 0.0);  // x(4) = 0
}

TEST_CASE("sample_potential: finite well honors the strict interior test") {
  // dx = 2^-10 so the edge samples land exactly on +-1
  Grid g = make_grid(16384, -8.0, 8.0);
  auto v = sample_potential(PotentialSpec::finite_well_spec(100.0, 1.0), g);
  const int j_one = 9 * 1024;  // x = 1 exactly
  CHECK(g.x(j_one) == 1.0);
  CHECK(v[j_one] == 100.0);
  CHECK(v[j_one - 1] == 0.0);  // x = 1 - 2^-10 < 1
  const int j_minus = 7 * 1024;  // x = -1 exactly
  CHECK(g.x(j_minus) == -1.0);
  CHECK(v[j_minus] == 100.0);
  CHECK(v[j_minus + 1] == 0.0);

  SUBCASE("samples are exactly two-valued") {
    std::set<double> values(v.begin(), v.end());
    CHECK(values == std::set<double>{0.0, 100.0});
  }
}

TEST_CASE("sample_potential: double well, barrier and minima") {
  Grid g = make_grid(16, -8.0, 8.0);  // dx = 1; x = 0, +-2 on grid
  auto v = sample_potential(PotentialSpec::double_well_spec(), g);
  CHECK(v[8] == 8.0);    // x = 0
  CHECK(v[10] == 0.0);   // x = 2: -16 + 8 + 8
  CHECK(v[6] == 0.0);    // x = -2
}

TEST_CASE("sample_potential: tabulated must match the grid") {
  Grid g = make_grid(8, -1.0, 1.0);
  std::vector<double> xs, vs;
  for (int j = 0; j < 8; ++j) {
    xs.push_back(g.x(j));
    vs.push_back(g.x(j));
  }
  auto ok = sample_potential(PotentialSpec::tabulated_spec(xs, vs), g);
  CHECK(ok[3] == g.x(3));

  auto short_spec = PotentialSpec::tabulated_spec({0.0, 1.0}, {0.0, 1.0});
  CHECK_THROWS_AS(sample_potential(short_spec, g), DomainError);

  auto shifted = xs;
  shifted[2] += 1e-6;
  CHECK_THROWS_AS(sample_potential(PotentialSpec::tabulated_spec(shifted, vs), g),
                  DomainError);
}

TEST_CASE("finite_well: parameter validation") {
  CHECK_THROWS_AS(PotentialSpec::finite_well_spec(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::finite_well_spec(10.0, -1.0), DomainError);
}

TEST_CASE("parity_of_potential") {
  Grid g = make_grid(256, -4.0, 4.0);
  CHECK(parity_of_potential(PotentialSpec::harmonic(), g) == Symmetry::symmetric);
  CHECK(parity_of_potential(PotentialSpec::double_well_spec(), g) ==
        Symmetry::symmetric);
  CHECK(parity_of_potential(PotentialSpec::ring(), g) == Symmetry::symmetric);
  CHECK(parity_of_potential(PotentialSpec::finite_well_spec(100.0, 1.0), g) ==
        Symmetry::symmetric);

  std::vector<double> xs, vs;
  for (int j = 0; j < g.n_points; ++j) {
    xs.push_back(g.x(j));
    vs.push_back(g.x(j));  // ramp V = x
  }
  CHECK(parity_of_potential(PotentialSpec::tabulated_spec(xs, vs), g) ==
        Symmetry::asymmetric);
}

TEST_CASE("built-in potentials are even on symmetric grids") {
  Grid g = make_grid(200, -6.0, 6.0);
  for (auto spec : {PotentialSpec::harmonic(), PotentialSpec::double_well_spec(),
                    PotentialSpec::finite_well_spec(100.0, 1.0)}) {
    auto v = sample_potential(spec, g);
    for (int j = 0; j < g.n_points; ++j)
      CHECK(v[j] == doctest::Approx(v[g.mirror(j)]).epsilon(1e-15));
  }
}
