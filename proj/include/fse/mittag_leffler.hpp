#ifndef FSE_MITTAG_LEFFLER_HPP
#define FSE_MITTAG_LEFFLER_HPP

#include <span>
#include <vector>

namespace fse {

// Gamma for positive arguments, Lanczos approximation.
// Throws DomainError for z <= 0, OverflowError past the double range.
double gamma_fn(double z);
double lgamma_fn(double z);

struct MLParams {
  double q;
  double beta = 1.0;
};

struct MLResult {
  double value;
  double error_bound;  // estimated absolute error of value
  int terms;           // series terms actually summed
};

// Two-parameter Mittag-Leffler sum_k x^k / Gamma(q k + beta), |x| <= 12.
// Compensated summation; terminates once the next term drops below
// term_tol times the running-max partial sum, or at 400 terms.
// Throws AccuracyError if the certified bound exceeds 1e-6.
MLResult mittag_leffler(const MLParams& params, double x, double term_tol = 1e-16);

// E_q(-x^2) per sample; q = 1 reproduces exp(-x^2).
std::vector<double> ml_gaussian_profile(double q, std::span<const double> xs);

}  // namespace fse

#endif
