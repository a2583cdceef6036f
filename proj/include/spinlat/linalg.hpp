#pragma once

// Vector kernels over state vectors. Reductions use a fixed chunking so the
// result does not depend on the number of threads.

#include <span>

namespace spinlat::linalg {

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);

}  // namespace spinlat::linalg
