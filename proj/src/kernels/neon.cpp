#include <arm_neon.h>

#include "avoid/kernels.hpp"

namespace avoid::kernels {
namespace {

void sub_scaled_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t prod = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vsubq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] -= a * x[i];
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  // Two registers hold lanes {0,1} and {2,3}.
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  double total = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
                 (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

void match_mask_neon(const std::int32_t* v, std::int32_t target, std::uint8_t* out, std::size_t n) {
  const int32x4_t vt = vdupq_n_s32(target);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t eq = vshrq_n_u32(vceqq_s32(vld1q_s32(v + i), vt), 31);
    out[i] = static_cast<std::uint8_t>(vgetq_lane_u32(eq, 0));
    out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u32(eq, 1));
    out[i + 2] = static_cast<std::uint8_t>(vgetq_lane_u32(eq, 2));
    out[i + 3] = static_cast<std::uint8_t>(vgetq_lane_u32(eq, 3));
  }
  for (; i < n; ++i) out[i] = v[i] == target ? 1 : 0;
}

}  // namespace

namespace detail {
const KernelTable kNeonTable{Backend::Neon, sub_scaled_neon, dot_neon, match_mask_neon};
}

}  // namespace avoid::kernels
