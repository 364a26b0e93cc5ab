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

#ifndef QWC_QWALK_HPP
#define QWC_QWALK_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qwc/graph.hpp"

namespace qwc {

/// Complex matrix checked to be unitary on construction:
/// ||U'U - I||_F <= 1e-10 * n.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Eigen::MatrixXcd m);
  static UnitaryMatrix identity(int n);

  int n() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& entries() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Alternating durations (s_1, t_1, ..., s_K, t_K): s drives the
/// adjacency Hamiltonian, t the rank-one projector Hamiltonian.
/// Stored flat so optimizers can treat it as one parameter vector.
struct ControlSchedule {
  std::vector<double> durations;  // even size 2K

  static ControlSchedule zeros(int pairs);
  int pairs() const { return static_cast<int>(durations.size()) / 2; }
  double s(int k) const { return durations[2 * k]; }
  double t(int k) const { return durations[2 * k + 1]; }
};

/// e^{-iA(x)s} via the symmetric eigendecomposition of the adjacency
/// matrix.
UnitaryMatrix evolve_adjacency(const Graph& x, double s);

/// e^{-i zz^T t} in closed form: I + ((e^{-i c0 t} - 1)/c0) zz^T with
/// c0 = z^T z. No matrix exponential is evaluated. z must be nonzero.
UnitaryMatrix evolve_projector(const Eigen::VectorXd& z, double t);

/// Characteristic vector of s as a double vector (for the projector
/// Hamiltonian L = zz^T).
Eigen::VectorXd indicator_real(const VertexSet& s);

/// Ordered product U_L(t_K) U_A(s_K) ... U_L(t_1) U_A(s_1); the
/// first-applied factor is rightmost. Empty schedule gives the
/// identity.
UnitaryMatrix schedule_unitary(const Graph& x, const Eigen::VectorXd& z,
                               const ControlSchedule& sched);

/// 1 - |tr(U'V)|/n. Phase-invariant pseudo-metric on unitaries.
double infidelity(const UnitaryMatrix& u, const UnitaryMatrix& v);

/// Phase-invariant overlap |tr(V' U(sched))|/n together with its
/// analytic gradient with respect to the 2K durations, assembled from
/// cached prefix and suffix products. Exposed so the gradient can be
/// validated against finite differences.
struct ObjectiveEval {
  double overlap = 0;
  std::vector<double> gradient;
};
ObjectiveEval schedule_overlap_gradient(const Graph& x,
                                        const Eigen::VectorXd& z,
                                        const UnitaryMatrix& target,
                                        const ControlSchedule& sched);

struct SynthesisConfig {
  int segment_pairs = 1;           // K
  int restarts = 20;
  int max_iterations = 2000;       // gradient steps per restart
  double target_infidelity = 1e-3;
  std::uint64_t rng_seed = 1;
  int jobs = 0;                    // parallel restarts; 0 = default
};

struct SynthesisResult {
  ControlSchedule schedule;
  double achieved_infidelity = 1;
  bool reached_target = false;
  /// Whether (x, S) passed the exact controllability test. Synthesis
  /// proceeds either way, but convergence is not expected on an
  /// uncontrollable pair.
  bool pair_controllable = false;
  /// Negative durations are reachable only as long positive times when
  /// the spectrum is rational; flagged for the caller.
  bool has_negative_durations = false;
  int best_restart = -1;
  long iterations_used = 0;  // in the best restart
};

/// Gradient ascent on the overlap with backtracking line search and
/// seeded random restarts (restart 0 starts from the zero schedule).
/// Restarts run in parallel; the best result is selected
/// deterministically (lowest infidelity, ties broken by restart index).
SynthesisResult synthesize(const Graph& x, const VertexSet& s,
                           const UnitaryMatrix& target,
                           const SynthesisConfig& cfg);

/// Haar-distributed random unitary (Ginibre + QR with phase fix),
/// deterministic in the seed.
UnitaryMatrix haar_random_unitary(int n, std::uint64_t seed);

}  // namespace qwc

#endif  // QWC_QWALK_HPP
