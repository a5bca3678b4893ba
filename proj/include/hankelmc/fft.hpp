#ifndef HANKELMC_FFT_HPP
#define HANKELMC_FFT_HPP

#include "hankelmc/types.hpp"

namespace hankelmc {

Index next_pow2(Index n);

/// Fixed-size complex-to-complex FFT plan pair (FFTW backend).
///
/// Plan creation and destruction are serialized on a global mutex since the
/// FFTW planner is not thread-safe; executing a plan on caller-provided
/// buffers is safe from any thread. Transforms are unnormalized; inverse()
/// divides by the length so that inverse(forward(x)) == x.
class Fft {
 public:
  explicit Fft(Index size);
  ~Fft();

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&& other) noexcept;
  Fft& operator=(Fft&& other) noexcept;

  Index size() const { return size_; }

  void forward(const Cx* in, Cx* out) const;
  void inverse(const Cx* in, Cx* out) const;

  CxVector forward(const CxVector& in) const;
  CxVector inverse(const CxVector& in) const;

 private:
  Index size_ = 0;
  void* fwd_ = nullptr;  // fftw_plan
  void* inv_ = nullptr;
};

}  // namespace hankelmc

#endif
