#include "hankelmc/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace hankelmc {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Index next_pow2(Index n) {
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(Index size) : size_(size) {
  if (size < 1) throw std::invalid_argument("Fft: size must be >= 1");
  std::lock_guard<std::mutex> lock(planner_mutex());
  // Dummy buffers for planning; execution uses the new-array interface.
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(size));
  fwd_ = fftw_plan_dft_1d(static_cast<int>(size), buf, buf, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  inv_ = fftw_plan_dft_1d(static_cast<int>(size), buf, buf, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!fwd_ || !inv_) throw std::runtime_error("Fft: planning failed");
}

Fft::~Fft() {
  if (fwd_ || inv_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (inv_) fftw_destroy_plan(static_cast<fftw_plan>(inv_));
  }
}

Fft::Fft(Fft&& other) noexcept : size_(other.size_), fwd_(other.fwd_), inv_(other.inv_) {
  other.fwd_ = nullptr;
  other.inv_ = nullptr;
}

Fft& Fft::operator=(Fft&& other) noexcept {
  if (this != &other) {
    this->~Fft();
    size_ = other.size_;
    fwd_ = other.fwd_;
    inv_ = other.inv_;
    other.fwd_ = nullptr;
    other.inv_ = nullptr;
  }
  return *this;
}

void Fft::forward(const Cx* in, Cx* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                   reinterpret_cast<fftw_complex*>(const_cast<Cx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft::inverse(const Cx* in, Cx* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(inv_),
                   reinterpret_cast<fftw_complex*>(const_cast<Cx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double scale = 1.0 / static_cast<double>(size_);
  for (Index i = 0; i < size_; ++i) out[i] *= scale;
}

CxVector Fft::forward(const CxVector& in) const {
  CxVector out(size_);
  forward(in.data(), out.data());
  return out;
}

CxVector Fft::inverse(const CxVector& in) const {
  CxVector out(size_);
  inverse(in.data(), out.data());
  return out;
}

}  // namespace hankelmc
