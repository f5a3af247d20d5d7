#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fse/errors.hpp"
#include "fse/fft.hpp"
#include "fse/grid.hpp"
#include "fse/spectral.hpp"

using namespace fse;
using std::numbers::pi;

namespace {

WaveField random_field(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  WaveField psi(g);
  for (auto& v : psi.values) v = Complex(dist(rng), dist(rng));
  return psi;
}

}  // namespace

TEST_CASE("make_grid: spacing and wavenumber spacing") {
  Grid g = make_grid(480, -1.0, 1.0);
  CHECK(g.dx == doctest::Approx(2.0 / 480).epsilon(1e-15));
  CHECK(g.dk() == doctest::Approx(pi).epsilon(1e-15));

  Grid g4 = make_grid(4, 0.0, 4.0);
  CHECK(g4.dx == 1.0);
  CHECK(g4.dk() == doctest::Approx(2 * pi / 4).epsilon(1e-15));

  Grid g2000 = make_grid(2000, -10.0, 10.0);
  CHECK(g2000.dx == doctest::Approx(1e-2).epsilon(1e-15));
}

TEST_CASE("make_grid: rejects bad input") {
  CHECK_THROWS_AS(make_grid(3, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_grid(16, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_grid(16, 2.0, -2.0), DomainError);
}

TEST_CASE("wavenumbers: FFT ordering, Nyquist in the negative block") {
  Grid g = make_grid(4, 0.0, 4.0);
  auto k = wavenumbers(g);
  const double dk = 2 * pi / 4;
  CHECK(k[0] == 0.0);
  CHECK(k[1] == doctest::Approx(dk).epsilon(1e-15));
  CHECK(std::abs(k[2]) == doctest::Approx(2 * dk).epsilon(1e-15));
  CHECK(k[3] == doctest::Approx(-dk).epsilon(1e-15));

  Grid gr = make_grid(480, -1.0, 1.0);
  auto kr = wavenumbers(gr);
  double kmax = 0.0;
  for (double kj : kr) kmax = std::max(kmax, std::abs(kj));
  CHECK(kmax == doctest::Approx(pi * 240).epsilon(1e-14));
  CHECK(kmax > 39 * pi);  // the 39-mode cosine fits with margin

  Grid g8 = make_grid(8, -1.0, 1.0);
  CHECK(wavenumbers(g8)[1] == doctest::Approx(pi).epsilon(1e-15));
}

TEST_CASE("fft round trip is the identity") {
  Grid g = make_grid(480, -1.0, 1.0);
  WaveField psi = random_field(g, 11);
  WaveField copy = psi;
  const Fft& fft = Fft::shared(g.n_points);
  fft.forward(copy.values.data());
  fft.inverse(copy.values.data());
  double num = 0.0, den = 0.0;
  for (int j = 0; j < g.n_points; ++j) {
    num += std::norm(copy.values[j] - psi.values[j]);
    den += std::norm(psi.values[j]);
  }
  CHECK(std::sqrt(num / den) < 1e-12);
}

TEST_CASE("riesz_apply: band-limited modes") {
  Grid g = make_grid(480, -1.0, 1.0);
  WaveField sin_pix(g);
  for (int j = 0; j < g.n_points; ++j) sin_pix.values[j] = std::sin(pi * g.x(j));

  SUBCASE("alpha = 2 reproduces the second derivative") {
    WaveField d2 = riesz_apply(sin_pix, 2.0);
    for (int j = 0; j < g.n_points; ++j)
      CHECK(std::abs(d2.values[j] - (-pi * pi) * sin_pix.values[j]) < 1e-10);
  }
  SUBCASE("alpha = 1.8 scales by -pi^1.8") {
    WaveField d = riesz_apply(sin_pix, 1.8);
    const double s = -std::pow(pi, 1.8);
    for (int j = 0; j < g.n_points; ++j)
      CHECK(std::abs(d.values[j] - s * sin_pix.values[j]) < 1e-10);
  }
  SUBCASE("constants map to zero") {
    WaveField c(g);
    for (auto& v : c.values) v = 0.7;
    for (double alpha : {0.5, 1.0, 1.8, 2.0}) {
      WaveField z = riesz_apply(c, alpha);
      for (const auto& v : z.values) CHECK(std::abs(v) < 1e-13);
    }
  }
}

TEST_CASE("riesz_apply: rejects bad input") {
  Grid g = make_grid(16, -1.0, 1.0);
  WaveField psi(g);
  CHECK_THROWS_AS(riesz_apply(psi, 0.0), DomainError);
  CHECK_THROWS_AS(riesz_apply(psi, -1.0), DomainError);
  psi.values[3] = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(riesz_apply(psi, 2.0), DomainError);
}

TEST_CASE("riesz_apply: linearity") {
  Grid g = make_grid(128, -1.0, 1.0);
  WaveField f = random_field(g, 1), h = random_field(g, 2);
  const Complex ca(0.7, -0.2), cb(-1.3, 0.4);
  WaveField combo(g);
  for (int j = 0; j < g.n_points; ++j)
    combo.values[j] = ca * f.values[j] + cb * h.values[j];
  WaveField lhs = riesz_apply(combo, 1.7);
  WaveField rf = riesz_apply(f, 1.7), rh = riesz_apply(h, 1.7);
  double scale = 0.0;
  for (const auto& v : lhs.values) scale = std::max(scale, std::abs(v));
  for (int j = 0; j < g.n_points; ++j)
    CHECK(std::abs(lhs.values[j] - (ca * rf.values[j] + cb * rh.values[j])) <
          1e-12 * scale);
}

TEST_CASE("riesz_apply: plane-wave eigenrelation on every grid mode") {
  Grid g = make_grid(64, -1.0, 1.0);
  auto k = wavenumbers(g);
  for (int m : {0, 1, 5, 31, 32, 63}) {
    WaveField wv(g);
    for (int j = 0; j < g.n_points; ++j)
      wv.values[j] = std::exp(Complex(0.0, k[m] * g.x(j)));
    WaveField r = riesz_apply(wv, 1.6);
    const double lam = (k[m] == 0.0) ? 0.0 : -std::pow(std::abs(k[m]), 1.6);
    for (int j = 0; j < g.n_points; ++j)
      CHECK(std::abs(r.values[j] - lam * wv.values[j]) < 1e-10 * std::max(1.0, std::abs(lam)));
  }
}

TEST_CASE("kinetic_phase") {
  Grid g = make_grid(64, -2.0, 2.0);
  SUBCASE("k = 0 mode is untouched for any tau") {
    for (Complex tau : {Complex(0.3, 0.0), Complex(0.01, 0.7), Complex(0.0, -2.0)})
      CHECK(kinetic_phase(g, 1.9, tau)[0] == Complex(1.0, 0.0));
  }
  SUBCASE("alpha = 2, real tau gives the diffusion kernel") {
    const double dt = 1e-2;
    auto ph = kinetic_phase(g, 2.0, Complex(dt, 0.0));
    auto k = wavenumbers(g);
    for (int j = 0; j < g.n_points; ++j)
      CHECK(ph[j].real() == doctest::Approx(std::exp(-dt * k[j] * k[j] / 2)).epsilon(1e-13));
  }
  SUBCASE("complex tau with positive real part contracts every k != 0") {
    const Complex a1(0.0584500187773306, 0.0217141273080301);
    auto ph = kinetic_phase(g, 1.8, a1 * 1e-2);
    CHECK(std::abs(ph[0]) == 1.0);
    for (int j = 1; j < g.n_points; ++j) CHECK(std::abs(ph[j]) < 1.0);
  }
}

TEST_CASE("normalize and inner product") {
  Grid g = make_grid(100, -1.0, 1.0);
  WaveField psi = random_field(g, 3);
  normalize(psi);
  CHECK(std::abs(norm(psi) - 1.0) < 1e-12);
  CHECK(std::abs(inner(psi, psi).real() - 1.0) < 1e-12);
  WaveField zero(g);
  CHECK_THROWS_AS(normalize(zero), DegenerateError);
}
