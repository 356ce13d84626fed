#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcrit/eigensolver.hpp"
#include "qcrit/models.hpp"

namespace qcrit {

/// Per-grid-point result of a parameter sweep. a is the density <A> per
/// site/particle; d1, d2 are central finite differences of epsilon on the
/// grid (quadratic one-sided at the ends). Undefined entries are empty
/// optionals; dm_da carries the undefined-guard of the parametric quotient.
struct SweepRecord {
  double lambda = 0.0;
  double epsilon = 0.0;
  double a = 0.0;
  std::optional<double> d1;
  std::optional<double> d2;
  std::map<std::string, double> measures;
  std::map<std::string, std::optional<double>> dm_dlambda;
  std::map<std::string, std::optional<double>> dm_da;
  bool degenerate = false;
  bool failed = false;
  std::string error;
};

struct SweepOptions {
  // Grid points favor Lanczos over the dense path; full dense solves at
  // dimension 4096 cost minutes each.
  SweepOptions() { solver.dense_cutoff = 1024; }
  SolverOptions solver;
  std::vector<std::string> measures{"L2", "L4", "negativity"};
  int threads = 0;  // 0: QCRIT_THREADS env or hardware concurrency
};

/// Ground solve at every grid value of the model's control parameter;
/// solver failures mark the record and the sweep continues.
std::vector<SweepRecord> sweep(const ModelParams& params,
                               const std::vector<double>& grid,
                               const SweepOptions& opts = {});

/// Measures at a single solved point (keys L2, L4, negativity).
std::map<std::string, double> compute_measures(
    const ModelParams& params, const GroundSolution& solution, double a,
    const std::vector<std::string>& kinds);

struct HellmannFeynmanCheck {
  double residual = 0.0;
  double central_difference = 0.0;
  double expectation_value = 0.0;
  bool skipped_degenerate = false;
};
/// |central-diff dE/dlambda - <A>| at the given coupling (total, not per
/// site). Degeneracy at any of the three points marks the check skipped.
HellmannFeynmanCheck verify_hellmann_feynman(const ModelParams& params,
                                             double value, double h,
                                             const SolverOptions& opts = {});

struct HkDualityCheck {
  double value = 0.0;  // (lambda' - lambda)(A - A'), strictly positive
  bool skipped_degenerate = false;
};
HkDualityCheck verify_hk_duality(const ModelParams& params, double coupling,
                                 double coupling_prime,
                                 const SolverOptions& opts = {});

/// Per-point |dM/dlambda - (dM/da) d2|; empty where any factor is
/// undefined or the point is flagged degenerate.
std::vector<std::optional<double>> chain_rule_residual(
    const std::vector<SweepRecord>& records, const std::string& measure);

struct QptCandidate {
  std::string order;  // "first" or "second"
  double location = 0.0;
  std::string evidence;
  std::vector<int> sizes;
  std::vector<double> locations;   // per size
  std::vector<double> magnitudes;  // per size: |d1 jump| or |d2| peak
};
struct QptCorroboration {
  std::string measure;
  double location = 0.0;  // dM/da sign change
};
struct QptReport {
  std::vector<QptCandidate> candidates;
  std::vector<QptCorroboration> corroborating;
};

struct QptOptions {
  double jump_factor = 5.0;    // first-order: |delta d1| vs median variation
  double growth_slack = 0.10;  // tolerated shrinkage in the N trend
};

/// Finite-size QPT heuristics over sweeps at several system sizes.
QptReport detect_qpt(const std::map<int, std::vector<SweepRecord>>& by_size,
                     const QptOptions& opts = {});

}  // namespace qcrit
