#include "spinlat/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace spinlat::linalg {
namespace {

constexpr std::int64_t kChunk = 1 << 14;

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  const auto size = static_cast<std::int64_t>(a.size());
  const std::int64_t chunks = (size + kChunk - 1) / kChunk;
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(size, lo + kChunk);
    double sum = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) sum += a[i] * b[i];
    partial[static_cast<std::size_t>(c)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const auto size = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  const auto size = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) x[i] *= alpha;
}

}  // namespace spinlat::linalg
