// Copyright 2026 The qwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwc/qwalk.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qwc/controllability.hpp"

namespace qwc {

namespace {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr Complex kMinusI{0.0, -1.0};

MatrixXd adjacency_double(const Graph& x) {
  MatrixXd a = MatrixXd::Zero(x.n(), x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j)
      if (x.adjacent(i, j)) a(i, j) = 1.0;
  return a;
}

// Spectral data of the adjacency matrix, computed once per graph and
// reused for every factor e^{-iAs}.
struct AdjacencyExp {
  MatrixXd q;       // orthonormal eigenvectors (columns)
  VectorXd lambda;  // eigenvalues

  explicit AdjacencyExp(const Graph& x) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(adjacency_double(x));
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("adjacency eigendecomposition failed");
    q = solver.eigenvectors();
    lambda = solver.eigenvalues();
  }

  MatrixXcd unitary(double s) const {
    int n = static_cast<int>(lambda.size());
    Eigen::VectorXcd phase(n);
    for (int i = 0; i < n; ++i) phase[i] = std::exp(kMinusI * lambda[i] * s);
    return q * phase.asDiagonal() * q.transpose();
  }
};

MatrixXcd projector_unitary(const VectorXd& z, double t) {
  double c0 = z.squaredNorm();
  if (c0 == 0.0) throw std::invalid_argument("z must be nonzero");
  Complex factor = (std::exp(kMinusI * c0 * t) - 1.0) / c0;
  int n = static_cast<int>(z.size());
  MatrixXcd u = MatrixXcd::Identity(n, n);
  u += factor * (z * z.transpose()).cast<Complex>();
  return u;
}

void check_finite_duration(double d) {
  if (!std::isfinite(d))
    throw std::invalid_argument("durations must be finite");
}

void check_schedule(const ControlSchedule& sched) {
  if (sched.durations.size() % 2 != 0)
    throw std::invalid_argument("schedule needs an even duration count");
  for (double d : sched.durations) check_finite_duration(d);
}

MatrixXcd schedule_product(const AdjacencyExp& exp_a, const VectorXd& z,
                           const ControlSchedule& sched) {
  int n = static_cast<int>(z.size());
  MatrixXcd u = MatrixXcd::Identity(n, n);
  for (int k = 0; k < sched.pairs(); ++k)
    u = projector_unitary(z, sched.t(k)) * exp_a.unitary(sched.s(k)) * u;
  return u;
}

// splitmix64: fixed, platform-independent stream for restart seeds and
// random draws.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("unitary must be square and nonempty");
  int n = static_cast<int>(m_.rows());
  double defect =
      (m_.adjoint() * m_ - MatrixXcd::Identity(n, n)).norm();
  if (!(defect <= 1e-10 * n))
    throw std::invalid_argument("matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  return UnitaryMatrix(MatrixXcd::Identity(n, n));
}

ControlSchedule ControlSchedule::zeros(int pairs) {
  if (pairs < 0) throw std::invalid_argument("pair count must be >= 0");
  ControlSchedule sched;
  sched.durations.assign(2 * static_cast<size_t>(pairs), 0.0);
  return sched;
}

UnitaryMatrix evolve_adjacency(const Graph& x, double s) {
  check_finite_duration(s);
  return UnitaryMatrix(AdjacencyExp(x).unitary(s));
}

UnitaryMatrix evolve_projector(const VectorXd& z, double t) {
  check_finite_duration(t);
  return UnitaryMatrix(projector_unitary(z, t));
}

VectorXd indicator_real(const VertexSet& s) {
  VectorXd z = VectorXd::Zero(s.ambient());
  for (int v : s.members()) z[v] = 1.0;
  return z;
}

UnitaryMatrix schedule_unitary(const Graph& x, const VectorXd& z,
                               const ControlSchedule& sched) {
  if (z.size() != x.n())
    throw std::invalid_argument("vector size must match the graph");
  check_schedule(sched);
  return UnitaryMatrix(schedule_product(AdjacencyExp(x), z, sched));
}

double infidelity(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.n() != v.n())
    throw std::invalid_argument("dimension mismatch");
  double overlap =
      std::abs((u.entries().adjoint() * v.entries()).trace()) / u.n();
  return std::max(0.0, 1.0 - overlap);
}

namespace {

// Overlap |tr(V'U)|/n and gradient, from cached products:
//   P_m = F_m ... F_0,  S_m = V' F_{2K-1} ... F_m,
//   d overlap / d theta_m = Re(conj(g) * (-i) tr(S_{m+1} H_m P_m)) / (n|g|).
ObjectiveEval overlap_gradient_impl(const AdjacencyExp& exp_a,
                                    const MatrixXd& a, const VectorXd& z,
                                    const MatrixXcd& target_adj,
                                    const ControlSchedule& sched) {
  int n = static_cast<int>(z.size());
  int m_count = 2 * sched.pairs();

  std::vector<MatrixXcd> factors(m_count);
  for (int k = 0; k < sched.pairs(); ++k) {
    factors[2 * k] = exp_a.unitary(sched.s(k));
    factors[2 * k + 1] = projector_unitary(z, sched.t(k));
  }

  std::vector<MatrixXcd> prefix(m_count + 1);  // prefix[m] = P_{m-1}
  prefix[0] = MatrixXcd::Identity(n, n);
  for (int m = 0; m < m_count; ++m) prefix[m + 1] = factors[m] * prefix[m];

  std::vector<MatrixXcd> suffix(m_count + 1);  // suffix[m] = S_m
  suffix[m_count] = target_adj;
  for (int m = m_count - 1; m >= 0; --m)
    suffix[m] = suffix[m + 1] * factors[m];

  Complex g = suffix[0].trace();  // tr(V' U)
  double mag = std::abs(g);

  ObjectiveEval eval;
  eval.overlap = mag / n;
  eval.gradient.assign(m_count, 0.0);
  if (mag < 1e-300) return eval;  // gradient of |g| undefined at 0

  MatrixXcd ac = a.cast<Complex>();
  MatrixXcd lz = (z * z.transpose()).cast<Complex>();
  for (int m = 0; m < m_count; ++m) {
    const MatrixXcd& h = (m % 2 == 0) ? ac : lz;
    Complex dg = kMinusI * (suffix[m + 1] * h * prefix[m + 1]).trace();
    eval.gradient[m] = std::real(std::conj(g) * dg) / (mag * n);
  }
  return eval;
}

struct RestartOutcome {
  ControlSchedule schedule;
  double infid = 1.0;
  long iterations = 0;
};

RestartOutcome run_restart(const AdjacencyExp& exp_a, const MatrixXd& a,
                           const VectorXd& z, const MatrixXcd& target_adj,
                           ControlSchedule sched,
                           const SynthesisConfig& cfg) {
  auto objective = [&](const ControlSchedule& s) {
    return overlap_gradient_impl(exp_a, a, z, target_adj, s);
  };

  ObjectiveEval cur = objective(sched);
  double step = 1.0;
  long iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    if (1.0 - cur.overlap <= cfg.target_infidelity * 0.5) break;
    double gnorm2 = 0;
    for (double gi : cur.gradient) gnorm2 += gi * gi;
    if (gnorm2 < 1e-24) break;  // stationary point

    // Backtracking line search on the ascent direction (Armijo).
    bool moved = false;
    while (step > 1e-16) {
      ControlSchedule trial = sched;
      for (size_t i = 0; i < trial.durations.size(); ++i)
        trial.durations[i] += step * cur.gradient[i];
      ObjectiveEval next = objective(trial);
      if (!std::isfinite(next.overlap))
        throw std::runtime_error("synthesis objective became non-finite");
      if (next.overlap >= cur.overlap + 1e-4 * step * gnorm2) {
        sched = std::move(trial);
        cur = std::move(next);
        step = std::min(step * 1.5, 16.0);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // no ascent at the smallest step
  }
  return {std::move(sched), std::max(0.0, 1.0 - cur.overlap), iter};
}

}  // namespace

ObjectiveEval schedule_overlap_gradient(const Graph& x, const VectorXd& z,
                                        const UnitaryMatrix& target,
                                        const ControlSchedule& sched) {
  if (z.size() != x.n() || target.n() != x.n())
    throw std::invalid_argument("dimension mismatch");
  check_schedule(sched);
  return overlap_gradient_impl(AdjacencyExp(x), adjacency_double(x), z,
                               target.entries().adjoint(), sched);
}

SynthesisResult synthesize(const Graph& x, const VertexSet& s,
                           const UnitaryMatrix& target,
                           const SynthesisConfig& cfg) {
  if (s.ambient() != x.n() || target.n() != x.n())
    throw std::invalid_argument("dimension mismatch");
  if (cfg.segment_pairs < 1)
    throw std::invalid_argument("need at least one segment pair");
  if (cfg.restarts < 1)
    throw std::invalid_argument("need at least one restart");
  if (!(cfg.target_infidelity > 0 && cfg.target_infidelity < 1))
    throw std::invalid_argument("target infidelity must lie in (0, 1)");
  if (s.count() == 0)
    throw std::invalid_argument("subset must be nonempty");

  AdjacencyExp exp_a(x);
  MatrixXd a = adjacency_double(x);
  VectorXd z = indicator_real(s);
  MatrixXcd target_adj = target.entries().adjoint();

  std::vector<RestartOutcome> outcomes(cfg.restarts);
#ifdef _OPENMP
  int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int r = 0; r < cfg.restarts; ++r) {
    ControlSchedule start = ControlSchedule::zeros(cfg.segment_pairs);
    if (r > 0) {
      // Fixed per-restart derivation keeps runs reproducible however
      // the restarts are scheduled.
      std::uint64_t state = cfg.rng_seed + static_cast<std::uint64_t>(r);
      for (auto& d : start.durations)
        d = (2.0 * uniform01(state) - 1.0) * M_PI;
    }
    outcomes[r] =
        run_restart(exp_a, a, z, target_adj, std::move(start), cfg);
  }

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (outcomes[r].infid < outcomes[best].infid) best = r;

  SynthesisResult res;
  res.schedule = std::move(outcomes[best].schedule);
  res.achieved_infidelity = outcomes[best].infid;
  res.reached_target = res.achieved_infidelity <= cfg.target_infidelity;
  res.pair_controllable = walk_matrix(x, s).determinant != 0;
  for (double d : res.schedule.durations)
    if (d < 0) res.has_negative_durations = true;
  res.best_restart = best;
  res.iterations_used = outcomes[best].iterations;
  return res;
}

UnitaryMatrix haar_random_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::uint64_t state = seed;
  auto normal = [&state]() {
    // Box-Muller on the splitmix64 stream.
    double u1 = uniform01(state), u2 = uniform01(state);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  MatrixXcd ginibre(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ginibre(i, j) = Complex(normal(), normal());
  Eigen::HouseholderQR<MatrixXcd> qr(ginibre);
  MatrixXcd q = qr.householderQ();
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of R's diagonal makes the distribution Haar.
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return UnitaryMatrix(std::move(q));
}

}  // namespace qwc
