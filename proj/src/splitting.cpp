#include "fse/splitting.hpp"

#include <cmath>
#include <numeric>

#include "fse/errors.hpp"
#include "fse/spectral.hpp"

namespace fse {

SplitScheme scheme_lie() {
  return SplitScheme{"lie", {{Complex(1.0, 0.0), Complex(1.0, 0.0)}}, 1};
}

SplitScheme scheme_strang() {
  return SplitScheme{"strang",
                     {{Complex(0.5, 0.0), Complex(1.0, 0.0)},
                      {Complex(0.5, 0.0), Complex(0.0, 0.0)}},
                     2};
}

SplitScheme scheme_sixth() {
  const Complex a1(0.0584500187773306, 0.0217141273080301);
  const Complex a2(0.123229569418374, -0.0402806787860161);
  const Complex a3(0.158045797047111, -0.0604410907390099);
  const Complex a4(0.160274614757183, 0.0790076422169959);
  const Complex b1(0.116900037554661, 0.0434282546160603);
  const Complex b2(0.129559101282088, -0.123989612188092);
  const Complex b3(0.186532492812133, 0.00310743071007267);
  const Complex b4(0.134016736702233, 0.154907853723919);
  return SplitScheme{"sixth",
                     {{a1, b1},
                      {a2, b2},
                      {a3, b3},
                      {a4, b4},
                      {a4, b3},
                      {a3, b2},
                      {a2, b1},
                      {a1, Complex(0.0, 0.0)}},
                     6};
}

const SplitScheme& scheme_by_name(std::string_view name) {
  static const SplitScheme lie = scheme_lie();
  static const SplitScheme strang = scheme_strang();
  static const SplitScheme sixth = scheme_sixth();
  if (name == "lie") return lie;
  if (name == "strang") return strang;
  if (name == "sixth") return sixth;
  throw DomainError("unknown scheme: " + std::string(name));
}

std::pair<Complex, Complex> coefficient_sums(const SplitScheme& scheme) {
  Complex sa{0.0, 0.0}, sb{0.0, 0.0};
  for (const auto& [a, b] : scheme.steps) {
    sa += a;
    sb += b;
  }
  return {sa, sb};
}

SplitStepper::SplitStepper(const Grid& grid, const SplitScheme& scheme,
                           std::span<const double> potential, double alpha,
                           double dt, TimeMode mode)
    : fft_(Fft::shared(grid.n_points)), n_(grid.n_points), dt_(dt) {
  if (static_cast<int>(potential.size()) != grid.n_points)
    throw DomainError("SplitStepper: potential length does not match grid");
  if (!(dt > 0.0)) throw DomainError("SplitStepper: dt must be positive");
  if (!(alpha > 0.0)) throw DomainError("SplitStepper: alpha must be positive");
  const Complex c = mode == TimeMode::imaginary ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  for (const auto& [a, b] : scheme.steps) {
    kinetic_.push_back(kinetic_phase(grid, alpha, c * a * dt));
    const bool has_pot = b != Complex(0.0, 0.0);
    has_potential_.push_back(has_pot);
    std::vector<Complex> pot;
    if (has_pot) {
      pot.resize(grid.n_points);
      for (int j = 0; j < grid.n_points; ++j)
        pot[j] = std::exp(-c * b * dt * potential[j]);
    }
    potential_.push_back(std::move(pot));
  }
}

void SplitStepper::pass(std::vector<Complex>& v, bool& in_k) const {
  for (size_t s = 0; s < kinetic_.size(); ++s) {
    if (!in_k) {
      fft_.forward(v.data());
      in_k = true;
    }
    const auto& kin = kinetic_[s];
    for (int j = 0; j < n_; ++j) v[j] *= kin[j];
    if (has_potential_[s]) {
      fft_.inverse(v.data());
      in_k = false;
      const auto& pot = potential_[s];
      for (int j = 0; j < n_; ++j) v[j] *= pot[j];
    }
  }
}

void SplitStepper::step(std::vector<Complex>& values) const {
  bool in_k = false;
  pass(values, in_k);
  if (in_k) fft_.inverse(values.data());
}

void SplitStepper::run(std::vector<Complex>& values, long n_steps) const {
  bool in_k = false;
  for (long i = 0; i < n_steps; ++i) pass(values, in_k);
  if (in_k) fft_.inverse(values.data());
}

WaveField apply_split_step(const WaveField& psi, const SplitScheme& scheme,
                           std::span<const double> potential, double alpha,
                           double dt, TimeMode mode) {
  SplitStepper stepper(psi.grid, scheme, potential, alpha, dt, mode);
  WaveField out = psi;
  stepper.step(out.values);
  if (!all_finite(out))
    throw InstabilityError("apply_split_step: non-finite samples (dt too large "
                           "for the potential scale?)");
  return out;
}

namespace {

// Smooth mixed-parity probe state used by order_probe.
WaveField probe_state(const Grid& grid) {
  WaveField psi(grid);
  for (int j = 0; j < grid.n_points; ++j) {
    const double x = grid.x(j);
    psi.values[j] = std::exp(-0.5 * (x - 0.4) * (x - 0.4)) *
                    (1.0 + 0.3 * x + 0.1 * x * x);
  }
  normalize(psi);
  return psi;
}

}  // namespace

double order_probe(const SplitScheme& scheme, double alpha) {
  const std::vector<double> dts = {1.25e-2,   6.25e-3,   3.125e-3,
                                   1.5625e-3, 7.8125e-4, 3.90625e-4};
  return order_probe(scheme, alpha, dts);
}

double order_probe(const SplitScheme& scheme, double alpha,
                   std::span<const double> dts) {
  if (dts.size() < 3) throw DomainError("order_probe: need at least 3 step sizes");
  const Grid grid = make_grid(256, -10.0, 10.0);
  std::vector<double> V(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) V[j] = 0.5 * grid.x(j) * grid.x(j);
  const double total_time = 0.5;

  const WaveField psi0 = probe_state(grid);

  const double dt_ref = 1e-5;
  WaveField ref = psi0;
  {
    SplitStepper stepper(grid, scheme_sixth(), V, alpha, dt_ref, TimeMode::imaginary);
    stepper.run(ref.values, std::lround(total_time / dt_ref));
  }

  std::vector<double> log_dt, log_err;
  for (double dt : dts) {
    const long n = std::lround(total_time / dt);
    if (n < 1 || std::abs(n * dt - total_time) > 1e-9)
      throw DomainError("order_probe: dt does not divide the probe time 0.5");
    WaveField out = psi0;
    SplitStepper stepper(grid, scheme, V, alpha, dt, TimeMode::imaginary);
    stepper.run(out.values, n);
    double err2 = 0.0;
    for (int j = 0; j < grid.n_points; ++j)
      err2 += std::norm(out.values[j] - ref.values[j]);
    const double err = std::sqrt(err2 * grid.dx);
    if (err > 1e-12) {  // below this the FFT roundoff floor dominates
      log_dt.push_back(std::log(dt));
      log_err.push_back(std::log(err));
    }
  }
  if (log_dt.size() < 3)
    throw DegenerateError(
        "order_probe: errors sit at the floating-point floor; widen the dt range");

  const size_t m = log_dt.size();
  const double mx = std::accumulate(log_dt.begin(), log_dt.end(), 0.0) / m;
  const double my = std::accumulate(log_err.begin(), log_err.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sxx += (log_dt[i] - mx) * (log_dt[i] - mx);
    sxy += (log_dt[i] - mx) * (log_err[i] - my);
  }
  return sxy / sxx;
}

}  // namespace fse
