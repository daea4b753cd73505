#include <cstring>
#include <vector>

#include <doctest.h>

#include "avoid/kernels.hpp"
#include "avoid/rng.hpp"

using namespace avoid;
using namespace avoid::kernels;

namespace {

std::vector<Backend> vector_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Avx2, Backend::Neon})
    if (backend_available(b)) out.push_back(b);
  return out;
}

std::vector<double> random_doubles(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = (rng.uniform01() - 0.5) * std::ldexp(1.0, static_cast<int>(rng.uniform_below(40)) - 20);
  return v;
}

}  // namespace

TEST_CASE("scalar reference") {
  const KernelTable& s = table(Backend::Scalar);
  double x[] = {1, 2, 3, 4, 5};
  double y[] = {10, 10, 10, 10, 10};
  s.sub_scaled(2, x, y, 5);
  CHECK(y[0] == 8);
  CHECK(y[4] == 0);
  CHECK(s.dot(x, x, 5) == 55);
  CHECK(s.dot(x, x, 0) == 0);
  std::int32_t v[] = {1, 3, 1, 2};
  std::uint8_t m[4];
  s.match_mask(v, 1, m, 4);
  CHECK(m[0] == 1);
  CHECK(m[1] == 0);
  CHECK(m[2] == 1);
  CHECK(m[3] == 0);
}

TEST_CASE("vector backends are bit-identical to scalar") {
  const KernelTable& ref = table(Backend::Scalar);
  Rng rng(5);
  for (Backend b : vector_backends()) {
    CAPTURE(backend_name(b));
    const KernelTable& vec = table(b);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = rng.uniform_below(70);
      auto x = random_doubles(rng, n);
      auto y = random_doubles(rng, n);
      const double a = rng.uniform01() * 8 - 4;

      CHECK(std::bit_cast<std::uint64_t>(ref.dot(x.data(), y.data(), n)) ==
            std::bit_cast<std::uint64_t>(vec.dot(x.data(), y.data(), n)));

      auto y1 = y, y2 = y;
      ref.sub_scaled(a, x.data(), y1.data(), n);
      vec.sub_scaled(a, x.data(), y2.data(), n);
      CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);

      std::vector<std::int32_t> v(n);
      for (auto& c : v) c = static_cast<std::int32_t>(rng.uniform_below(4));
      std::vector<std::uint8_t> m1(n, 7), m2(n, 9);
      ref.match_mask(v.data(), 2, m1.data(), n);
      vec.match_mask(v.data(), 2, m2.data(), n);
      CHECK(m1 == m2);
    }
  }
}

TEST_CASE("forcing a backend") {
  force_backend(Backend::Scalar);
  CHECK(active().backend == Backend::Scalar);
  force_backend(std::nullopt);
  CHECK(backend_available(active().backend));
  if (!backend_available(Backend::Neon)) CHECK_THROWS(table(Backend::Neon));
}

TEST_CASE("span wrappers") {
  std::vector<double> x{1, 2, 3}, y{1, 1, 1};
  CHECK(dot(x, y) == 6);
  sub_scaled(1, x, y);
  CHECK(y == std::vector<double>{0, -1, -2});
}
