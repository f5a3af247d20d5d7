#include "fse/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "fse/errors.hpp"

namespace fse {

namespace {
// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int n) : n_(n) {
  if (n < 1) throw DomainError("Fft: size must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
  // FFTW_UNALIGNED so the plan applies to any caller array via
  // fftw_execute_dft; FFTW_ESTIMATE keeps planning deterministic.
  fwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!fwd_ || !bwd_) throw Error("Fft: planning failed");
}

Fft::~Fft() {
  if (fwd_ || bwd_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
  }
}

Fft::Fft(Fft&& other) noexcept : n_(other.n_), fwd_(other.fwd_), bwd_(other.bwd_) {
  other.fwd_ = nullptr;
  other.bwd_ = nullptr;
}

void Fft::forward(std::complex<double>* data) const {
  fftw_complex* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), p, p);
}

void Fft::inverse(std::complex<double>* data) const {
  fftw_complex* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), p, p);
  const double inv = 1.0 / n_;
  for (int j = 0; j < n_; ++j) data[j] *= inv;
}

const Fft& Fft::shared(int n) {
  thread_local std::map<int, Fft> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Fft(n)).first;
  return it->second;
}

}  // namespace fse
