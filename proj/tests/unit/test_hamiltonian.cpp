#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spinlat/enumerate.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/hamiltonian.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/linalg.hpp"

using namespace spinlat;

namespace {

Eigen::MatrixXd operator_matrix(const HamiltonianOperator& h) {
  const auto dim = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXd m(dim, dim);
  std::vector<double> e(h.dim(), 0.0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    e[j] = 1.0;
    const auto col = h.apply(e);
    for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = col[i];
    e[j] = 0.0;
  }
  return m;
}

}  // namespace

TEST_CASE("matrix-free operator equals the Kronecker-product Hamiltonian") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> field(-2.0, 2.0);
  std::vector<Graph> graphs = enumerate_cubic(6);
  graphs.push_back(enumerate_cubic(8).back());
  graphs.push_back(Graph(3, {{0, 1}, {1, 2}}));
  for (const auto& g : graphs) {
    for (int trial = 0; trial < 3; ++trial) {
      const double b = field(rng);
      const double gamma = field(rng);
      const auto h = build(g, {b, gamma});
      const Eigen::MatrixXd oracle = oracle::kron_hamiltonian(g, b, gamma);
      CHECK((operator_matrix(h) - oracle).cwiseAbs().maxCoeff() < 1e-13);
      for (std::size_t s = 0; s < h.dim(); ++s) {
        CHECK(h.diag()[s] == doctest::Approx(oracle(s, s)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("diagonal entries follow the spin convention") {
  const Graph g = ladder_on_circle(6);
  const auto h = build(g, {0.5, 0.0});
  CHECK(h.diag()[0] == doctest::Approx(9.0 + 3.0));    // all up
  CHECK(h.diag()[63] == doctest::Approx(9.0 - 3.0));   // all down
  CHECK(spin_z(0, 3) == 1);
  CHECK(spin_z(8, 3) == -1);
}

TEST_CASE("operator is symmetric and bounded") {
  const Graph g = ladder_on_circle(10);
  const auto h = build(g, {0.7, 1.3});
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<double> x(h.dim());
  std::vector<double> y(h.dim());
  for (auto& v : x) v = normal(rng);
  for (auto& v : y) v = normal(rng);
  const auto hx = h.apply(x);
  const auto hy = h.apply(y);
  CHECK(linalg::dot(y, hx) == doctest::Approx(linalg::dot(x, hy)).epsilon(1e-12));
  CHECK(linalg::norm(hx) <= h.norm_bound() * linalg::norm(x) * (1 + 1e-12));
  CHECK(h.norm_bound() == doctest::Approx(15 + 7 + 13));
}

TEST_CASE("schedule derivative equals the Kronecker sums") {
  const int n = 5;
  const ScheduleDerivative d{0.3, -1.1};
  const Eigen::MatrixXd oracle = d.db * oracle::kron_sum_z(n) + d.dgamma * oracle::kron_sum_x(n);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::vector<double> x(std::size_t{1} << n);
  for (auto& v : x) v = normal(rng);
  const auto y = apply_derivative(n, d, x);
  const Eigen::VectorXd expected = oracle * Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == doctest::Approx(expected[i]));
}

TEST_CASE("errors") {
  const auto h = build(ladder_on_circle(6), {1.0, 1.0});
  std::vector<double> bad(10);
  std::vector<double> out(64);
  CHECK_THROWS_AS(h.apply(bad, out), Error);
  try {
    build(ladder_on_circle(26), {1.0, 1.0});
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
  BuildOptions small;
  small.max_n = 8;
  CHECK_THROWS_AS(build(ladder_on_circle(10), {1.0, 1.0}, small), Error);
  CHECK_NOTHROW(build(ladder_on_circle(8), {1.0, 1.0}, small));
}

TEST_CASE("deterministic dot products do not depend on summation order of the caller") {
  std::vector<double> a(100000);
  std::vector<double> b(100000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::sin(0.1 * i);
    b[i] = std::cos(0.3 * i);
  }
  const double first = linalg::dot(a, b);
  for (int rep = 0; rep < 5; ++rep) CHECK(linalg::dot(a, b) == first);
}
