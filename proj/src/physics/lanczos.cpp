#include <algorithm>
#include <cmath>
#include <limits>

#include "spinlat/eigensolver.hpp"
#include "spinlat/errors.hpp"
#include "spinlat/linalg.hpp"
#include "spinlat/rng.hpp"

namespace spinlat {

int SpectrumResult::ground_cluster_size() const {
  for (const auto& cls : degeneracy_classes) {
    if (!cls.empty() && cls.front() == 0) return static_cast<int>(cls.size());
  }
  return eigenvalues.empty() ? 0 : 1;
}

std::vector<std::vector<int>> degeneracy_classes(const std::vector<double>& eigenvalues,
                                                 double tol) {
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(eigenvalues.size()); ++i) {
    const bool joins =
        i > 0 && std::abs(eigenvalues[i] - eigenvalues[i - 1]) <=
                     tol * std::max(1.0, std::abs(eigenvalues[i - 1]));
    if (joins) {
      classes.back().push_back(i);
    } else {
      classes.push_back({i});
    }
  }
  return classes;
}

Gaps gaps(const SpectrumResult& s) {
  require(s.k() >= 3, "gaps needs at least three eigenvalues, got " + std::to_string(s.k()));
  return {std::max(0.0, s.eigenvalues[1] - s.eigenvalues[0]),
          std::max(0.0, s.eigenvalues[2] - s.eigenvalues[0])};
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class BlockLanczos {
 public:
  BlockLanczos(const HamiltonianOperator& h, const LanczosOptions& options)
      : h_(h), opt_(options), dim_(static_cast<Index>(h.dim())), rng_(options.seed) {
    require(opt_.k >= 1 && opt_.k <= 16, "k must lie in [1, 16], got " + std::to_string(opt_.k));
    require(opt_.k <= dim_, "k exceeds the state-space dimension");
    require(opt_.tol > 0.0, "tolerance must be positive");
    p_ = std::min<Index>(opt_.block_size > 0 ? opt_.block_size : opt_.k, dim_);

    Index capacity = opt_.max_basis;
    if (capacity <= 0) {
      const auto per_vector = static_cast<std::size_t>(dim_) * sizeof(double);
      capacity = static_cast<Index>(opt_.max_basis_bytes / per_vector) - 3 * p_;
      hard_cap_ = std::min(dim_, std::max<Index>(capacity, 0));
      capacity = std::min<Index>(capacity, std::max<Index>(32, 8 * p_));
    }
    mmax_ = std::min(dim_, capacity);
    hard_cap_ = std::max(hard_cap_, mmax_);
    if (mmax_ < dim_ && mmax_ < opt_.k + 2 * p_) {
      fail(ErrorKind::budget_exceeded,
           "eigensolver: Krylov basis capacity " + std::to_string(mmax_) +
               " is too small for k=" + std::to_string(opt_.k));
    }
    const double root_n = std::sqrt(static_cast<double>(h.n()));
    max_matvecs_ = opt_.max_matvecs > 0
                       ? opt_.max_matvecs
                       : std::max<long>(4000, static_cast<long>(400.0 * opt_.k * root_n));
    q_.resize(dim_, mmax_);
    t_ = MatrixXd::Zero(mmax_, mmax_);
  }

  SpectrumResult run() {
    MatrixXd block = start_block();
    Index m = 0;
    VectorXd theta;
    MatrixXd y;
    std::vector<double> estimates(opt_.k, std::numeric_limits<double>::infinity());

    while (true) {
      if (block.cols() == 0 || m == dim_) break;  // Krylov space exhausted: exact
      if (m + block.cols() > mmax_ && !grow_basis(estimates)) m = thick_restart(m, theta, y);

      const Index b = block.cols();
      q_.middleCols(m, b) = block;
      MatrixXd w(dim_, b);
      for (Index j = 0; j < b; ++j) {
        h_.apply(std::span<const double>(block.col(j).data(), dim_),
                 std::span<double>(w.col(j).data(), dim_));
      }
      matvecs_ += b;
      ++iterations_;

      const Index mb = m + b;
      MatrixXd c = q_.leftCols(mb).transpose() * w;
      t_.block(0, m, mb, b) = c;
      t_.block(m, 0, b, mb) = c.transpose();
      t_.block(m, m, b, b) = 0.5 * (c.bottomRows(b) + c.bottomRows(b).transpose());
      m = mb;

      // residual block, orthogonalized twice against the whole basis
      w.noalias() -= q_.leftCols(m) * c;
      MatrixXd c2 = q_.leftCols(m).transpose() * w;
      w.noalias() -= q_.leftCols(m) * c2;

      Eigen::SelfAdjointEigenSolver<MatrixXd> ritz(t_.topLeftCorner(m, m));
      theta = ritz.eigenvalues();
      y = ritz.eigenvectors();

      const MatrixXd gram = w.transpose() * w;
      const Index kk = std::min<Index>(opt_.k, m);
      bool converged = kk == opt_.k;
      for (Index i = 0; i < kk; ++i) {
        const VectorXd s = y.block(m - b, i, b, 1);
        estimates[i] = std::sqrt(std::max(0.0, s.dot(gram * s)));
        if (estimates[i] > 0.1 * opt_.tol) converged = false;
      }
      if (converged || m == dim_) {
        SpectrumResult result = finalize(m, y);
        if (result_ok(result)) return result;
        // Verification failed (orthogonality drift); keep expanding.
      }
      if (matvecs_ >= max_matvecs_) {
        throw ConvergenceFailure(
            "eigensolver: no convergence after " + std::to_string(matvecs_) +
                " matvecs (budget " + std::to_string(max_matvecs_) + ")",
            estimates);
      }
      block = next_block(w, m);
    }
    return finalize(m, y);
  }

 private:
  void orthogonalize_against_basis(VectorXd& v, Index m) const {
    if (m == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
      const VectorXd c = q_.leftCols(m).transpose() * v;
      v.noalias() -= q_.leftCols(m) * c;
    }
  }

  VectorXd random_vector() {
    VectorXd v(dim_);
    for (Index i = 0; i < dim_; ++i) v[i] = standard_normal(rng_);
    return v;
  }

  // Orthonormalizes candidate columns against the basis and each other;
  // deficient columns are replaced by fresh random directions while room
  // remains in the state space. Candidates flagged basis_orthogonal have
  // already been through two passes against the basis.
  MatrixXd orthonormal_block(const MatrixXd& candidates, Index m, Index want,
                             bool basis_orthogonal = false) {
    MatrixXd out(dim_, want);
    Index accepted = 0;
    const double scale = std::max(1.0, h_.norm_bound());
    auto within_block = [&](VectorXd& v) {
      for (int pass = 0; pass < 2; ++pass) {
        for (Index j = 0; j < accepted; ++j) v -= out.col(j).dot(v) * out.col(j);
      }
    };
    auto accept = [&](VectorXd v, double reference, bool skip_basis) {
      const double before = v.norm();
      if (!skip_basis) orthogonalize_against_basis(v, m);
      within_block(v);
      double norm = v.norm();
      if (skip_basis && norm < 0.5 * before) {
        // cancellation inside the block magnifies what is left of the basis
        orthogonalize_against_basis(v, m);
        within_block(v);
        norm = v.norm();
      }
      if (norm <= 1e-10 * reference) return false;
      out.col(accepted++) = v / norm;
      return true;
    };
    for (Index j = 0; j < candidates.cols() && accepted < want; ++j) {
      if (m + accepted >= dim_) break;
      const double reference = std::max(candidates.col(j).norm(), 1e-300) + 1e-14 * scale;
      accept(candidates.col(j), reference, basis_orthogonal);
    }
    int attempts = 0;
    while (accepted < want && m + accepted < dim_ && attempts < 8 * want) {
      ++attempts;
      VectorXd v = random_vector();
      const double reference = v.norm();
      accept(std::move(v), reference, false);
    }
    return out.leftCols(accepted);
  }

  MatrixXd start_block() {
    MatrixXd candidates(dim_, static_cast<Index>(opt_.start.size()));
    Index used = 0;
    for (const auto& v : opt_.start) {
      if (static_cast<Index>(v.size()) != dim_) {
        fail(ErrorKind::invalid_argument, "warm-start vector has the wrong dimension");
      }
      // a small random admixture keeps every symmetry sector reachable
      const VectorXd noise = random_vector();
      VectorXd col = Eigen::Map<const VectorXd>(v.data(), dim_);
      col += (1e-2 * col.norm() / noise.norm()) * noise;
      candidates.col(used++) = col;
    }
    if (used > p_) candidates.conservativeResize(dim_, p_);
    return orthonormal_block(candidates, 0, p_);
  }

  MatrixXd next_block(const MatrixXd& residual, Index m) {
    return orthonormal_block(residual, m, std::min(p_, dim_ - m), true);
  }

  // Clustered spectra stall a small basis: when a whole restart cycle fails to
  // cut the worst residual estimate tenfold, the capacity doubles instead.
  bool grow_basis(const std::vector<double>& estimates) {
    const double worst = *std::max_element(estimates.begin(), estimates.end());
    const bool stalled = restarts_ > 0 && worst > 0.1 * worst_at_restart_;
    worst_at_restart_ = worst;
    if (!stalled || mmax_ >= hard_cap_) return false;
    const Index before = mmax_;
    mmax_ = std::min(hard_cap_, 2 * mmax_);
    q_.conservativeResize(Eigen::NoChange, mmax_);
    t_.conservativeResizeLike(MatrixXd::Zero(mmax_, mmax_));
    t_.rightCols(mmax_ - before).setZero();
    t_.bottomRows(mmax_ - before).setZero();
    return true;
  }

  Index thick_restart(Index m, const VectorXd& theta, const MatrixXd& y) {
    Index keep = std::max<Index>(opt_.k + p_, (mmax_ - p_) / 2);
    keep = std::min(keep, mmax_ - p_);
    keep = std::min(keep, m);
    const MatrixXd yk = y.leftCols(keep);
    constexpr Index kRows = 4096;
    for (Index r0 = 0; r0 < dim_; r0 += kRows) {
      const Index rows = std::min(kRows, dim_ - r0);
      const MatrixXd chunk = q_.block(r0, 0, rows, m) * yk;
      q_.block(r0, 0, rows, keep) = chunk;
    }
    t_.setZero();
    for (Index i = 0; i < keep; ++i) t_(i, i) = theta[i];
    ++restarts_;
    return keep;
  }

  SpectrumResult finalize(Index m, const MatrixXd& y) {
    const Index k = opt_.k;
    MatrixXd v = q_.leftCols(m) * y.leftCols(k);
    SpectrumResult result;
    result.iterations = iterations_;
    result.degeneracy_tolerance = opt_.degeneracy_tol;

    std::vector<double> rayleigh(k);
    StateVector hv(static_cast<std::size_t>(dim_));
    for (Index i = 0; i < k; ++i) {
      v.col(i).normalize();
      h_.apply(std::span<const double>(v.col(i).data(), dim_), hv);
      ++matvecs_;
      rayleigh[i] = linalg::dot(std::span<const double>(v.col(i).data(), dim_), hv);
    }
    // order by Rayleigh quotient (Ritz order can differ in the last digits)
    std::vector<Index> order(k);
    for (Index i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return rayleigh[a] < rayleigh[b]; });
    for (Index i : order) result.eigenvalues.push_back(rayleigh[i]);
    result.degeneracy_classes = degeneracy_classes(result.eigenvalues, opt_.degeneracy_tol);

    MatrixXd sorted(dim_, k);
    for (Index i = 0; i < k; ++i) sorted.col(i) = v.col(order[i]);
    canonicalize(sorted, result.degeneracy_classes);

    for (Index i = 0; i < k; ++i) {
      StateVector vec(sorted.col(i).data(), sorted.col(i).data() + dim_);
      h_.apply(vec, hv);
      ++matvecs_;
      linalg::axpy(-result.eigenvalues[i], vec, hv);
      result.residuals.push_back(linalg::norm(hv));
      result.eigenvectors.push_back(std::move(vec));
    }
    result.matvecs = matvecs_;
    return result;
  }

  // Within each degeneracy class: Gram-Schmidt in solver order, then make the
  // first amplitude of (near-)maximal magnitude positive.
  static void canonicalize(MatrixXd& v, const std::vector<std::vector<int>>& classes) {
    for (const auto& cls : classes) {
      for (std::size_t a = 0; a < cls.size(); ++a) {
        auto col = v.col(cls[a]);
        for (std::size_t b = 0; b < a; ++b) col -= v.col(cls[b]).dot(col) * v.col(cls[b]);
        col.normalize();
      }
    }
    for (Index i = 0; i < v.cols(); ++i) {
      auto col = v.col(i);
      const double peak = col.cwiseAbs().maxCoeff();
      for (Index s = 0; s < col.size(); ++s) {
        if (std::abs(col[s]) >= peak * (1.0 - 1e-8)) {
          if (col[s] < 0) col = -col;
          break;
        }
      }
    }
  }

  bool result_ok(const SpectrumResult& r) const {
    return std::all_of(r.residuals.begin(), r.residuals.end(),
                       [&](double res) { return res <= opt_.tol; });
  }

  const HamiltonianOperator& h_;
  LanczosOptions opt_;
  Index dim_;
  Index p_ = 1;
  Index mmax_ = 0;
  Index hard_cap_ = 0;
  double worst_at_restart_ = std::numeric_limits<double>::infinity();
  long max_matvecs_ = 0;
  long matvecs_ = 0;
  int iterations_ = 0;
  int restarts_ = 0;
  Rng rng_;
  MatrixXd q_;
  MatrixXd t_;
};

}  // namespace

SpectrumResult lowest_eigenpairs(const HamiltonianOperator& h, const LanczosOptions& options) {
  return BlockLanczos(h, options).run();
}

}  // namespace spinlat
