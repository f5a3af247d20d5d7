#ifndef FSE_FFT_HPP
#define FSE_FFT_HPP

#include <complex>

namespace fse {

// In-place complex FFT of a fixed size, backed by FFTW. Forward is unscaled,
// inverse carries the 1/n factor, so the pair composes to the identity.
// Plan creation is serialized internally; execution is safe from any thread
// as long as each thread uses its own instance (see shared()).
class Fft {
 public:
  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&& other) noexcept;
  Fft& operator=(Fft&&) = delete;

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;
  int size() const { return n_; }

  // Thread-local plan cache keyed by size.
  static const Fft& shared(int n);

 private:
  int n_;
  void* fwd_ = nullptr;  // fftw_plan
  void* bwd_ = nullptr;
};

}  // namespace fse

#endif
