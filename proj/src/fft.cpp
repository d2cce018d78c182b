#include "pww/fft.hpp"

#include <fftw3.h>

#include <cstring>

namespace pww {

Dft::Dft(std::size_t size) : size_(size) {
  buf_ = fftw_malloc(sizeof(fftw_complex) * size);
  auto* b = static_cast<fftw_complex*>(buf_);
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(size), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(size), b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Dft::~Dft() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

void Dft::run(void* plan, const std::complex<double>* in, std::complex<double>* out) {
  auto* b = static_cast<fftw_complex*>(buf_);
  std::memcpy(b, static_cast<const void*>(in), sizeof(fftw_complex) * size_);
  fftw_execute(static_cast<fftw_plan>(plan));
  std::memcpy(static_cast<void*>(out), b, sizeof(fftw_complex) * size_);
}

void Dft::backward(const std::complex<double>* in, std::complex<double>* out) {
  run(plan_bwd_, in, out);
}

void Dft::forward(const std::complex<double>* in, std::complex<double>* out) {
  run(plan_fwd_, in, out);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace pww
