#include "avoid/kernels.hpp"

namespace avoid::kernels {
namespace {

void sub_scaled_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] -= a * x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) lane[l] += x[i + l] * y[i + l];
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

void match_mask_scalar(const std::int32_t* v, std::int32_t target, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i] == target ? 1 : 0;
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Backend::Scalar, sub_scaled_scalar, dot_scalar, match_mask_scalar};
}

}  // namespace avoid::kernels
