#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "avoid/kernels.hpp"

namespace avoid::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(AVOID_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(AVOID_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!backend_available(b)) {
    throw std::runtime_error("kernel backend '" + std::string(backend_name(b)) + "' is not available");
  }
  switch (b) {
#if defined(AVOID_HAVE_AVX2)
    case Backend::Avx2: return detail::kAvx2Table;
#endif
#if defined(AVOID_HAVE_NEON)
    case Backend::Neon: return detail::kNeonTable;
#endif
    default: return detail::kScalarTable;
  }
}

namespace {

const KernelTable* detect() {
  if (const char* env = std::getenv("AVOID_KERNELS")) {
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (backend_name(b) == env && backend_available(b)) return &table(b);
    }
  }
  for (Backend b : {Backend::Avx2, Backend::Neon}) {
    if (backend_available(b)) return &table(b);
  }
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

const KernelTable& active() {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) return *forced;
  static const KernelTable* detected = detect();
  return *detected;
}

void force_backend(std::optional<Backend> b) {
  g_forced.store(b ? &table(*b) : nullptr, std::memory_order_release);
}

void sub_scaled(double a, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("sub_scaled: length mismatch");
  active().sub_scaled(a, x.data(), y.data(), x.size());
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  return active().dot(x.data(), y.data(), x.size());
}

void match_mask(std::span<const std::int32_t> v, std::int32_t target, std::span<std::uint8_t> out) {
  if (v.size() != out.size()) throw std::invalid_argument("match_mask: length mismatch");
  active().match_mask(v.data(), target, out.data(), v.size());
}

}  // namespace avoid::kernels
