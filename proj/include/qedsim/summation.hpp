#pragma once

#if defined(__FAST_MATH__)
#error "qedsim requires strict IEEE-754 arithmetic; do not build with -ffast-math"
#endif

#include <cmath>

namespace qedsim {

/// Neumaier-compensated accumulator (improved Kahan summation).
///
/// All observable reductions in this project use this accumulator in a fixed
/// ascending index order, so that results are bit-identical across runs and
/// worker counts and carry O(1) ulp error instead of O(N) ulp drift over the
/// multi-million-term grid sums.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;  // low-order bits of sum_ survived; x truncated
    } else {
      comp_ += (x - t) + sum_;  // roles reversed
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace qedsim
