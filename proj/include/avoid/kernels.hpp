#pragma once

// Data-parallel inner loops used by the simplex pivot, witness residuals and
// trace projection. Every backend produces bit-identical results: the scalar
// reference accumulates dot products in four interleaved lanes, exactly as
// the vector variants do, and no backend fuses multiply and add.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace avoid::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct KernelTable {
  Backend backend;
  /// y[i] -= a * x[i]
  void (*sub_scaled)(double a, const double* x, double* y, std::size_t n);
  /// Four-lane accumulation, lanes combined as (l0 + l1) + (l2 + l3), tail added in order.
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// out[i] = (v[i] == target)
  void (*match_mask)(const std::int32_t* v, std::int32_t target, std::uint8_t* out, std::size_t n);
};

std::string_view backend_name(Backend b);
/// Compiled in and supported by the running CPU.
bool backend_available(Backend b);
/// Throws std::runtime_error if the backend is unavailable.
const KernelTable& table(Backend b);

/// Best available backend, unless overridden by force_backend() or the
/// AVOID_KERNELS environment variable ("scalar", "avx2", "neon").
const KernelTable& active();
void force_backend(std::optional<Backend> b);

void sub_scaled(double a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
void match_mask(std::span<const std::int32_t> v, std::int32_t target, std::span<std::uint8_t> out);

namespace detail {
extern const KernelTable kScalarTable;
#if defined(AVOID_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(AVOID_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace avoid::kernels
