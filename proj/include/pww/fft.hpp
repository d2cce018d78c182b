#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pww {

/// One fixed-size DFT plan pair with internal aligned buffers.  Reusable
/// across calls of the same size; construct serially (the planner is not
/// thread safe), execute freely.
class Dft {
 public:
  explicit Dft(std::size_t size);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  std::size_t size() const { return size_; }

  /// X_j = sum_r x_r e(+rj/M)  (unnormalized).
  void backward(const std::complex<double>* in, std::complex<double>* out);
  /// X_j = sum_r x_r e(-rj/M)  (unnormalized).
  void forward(const std::complex<double>* in, std::complex<double>* out);

 private:
  void run(void* plan, const std::complex<double>* in, std::complex<double>* out);
  std::size_t size_;
  void* buf_;
  void* plan_fwd_;
  void* plan_bwd_;
};

std::size_t next_pow2(std::size_t n);

}  // namespace pww
