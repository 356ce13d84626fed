#include "qcrit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qcrit/entanglement.hpp"
#include "qcrit/oracles.hpp"

namespace qcrit {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCRIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// derivative of the quadratic through (x0,y0),(x1,y1),(x2,y2) at x
double quad_derivative(double x0, double y0, double x1, double y1, double x2,
                       double y2, double x) {
  const double d0 = y0 * (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2));
  const double d1 = y1 * (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2));
  const double d2 = y2 * (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
  return d0 + d1 + d2;
}

double quad_second_derivative(double x0, double y0, double x1, double y1,
                              double x2, double y2) {
  return 2.0 * (y0 / ((x0 - x1) * (x0 - x2)) + y1 / ((x1 - x0) * (x1 - x2)) +
                y2 / ((x2 - x0) * (x2 - x1)));
}

// First and second grid derivatives of y(x); ends use the one-sided
// quadratic through the first/last three points.
void grid_derivatives(const std::vector<double>& x,
                      const std::vector<double>& y,
                      const std::vector<bool>& valid,
                      std::vector<std::optional<double>>& d1,
                      std::vector<std::optional<double>>& d2) {
  const std::size_t n = x.size();
  d1.assign(n, std::nullopt);
  d2.assign(n, std::nullopt);
  if (n < 3) return;
  auto ok3 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return valid[a] && valid[b] && valid[c];
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a, b, c;
    if (i == 0) {
      a = 0; b = 1; c = 2;
    } else if (i == n - 1) {
      a = n - 3; b = n - 2; c = n - 1;
    } else {
      a = i - 1; b = i; c = i + 1;
    }
    if (!ok3(a, b, c)) continue;
    d1[i] = quad_derivative(x[a], y[a], x[b], y[b], x[c], y[c], x[i]);
    d2[i] = quad_second_derivative(x[a], y[a], x[b], y[b], x[c], y[c]);
  }
}

double density_per_site(const HamiltonianSpec& spec,
                        const GroundSolution& sol) {
  if (spec.controls.size() != 1)
    throw std::logic_error("sweep expects a single control term");
  return rep_expectation(spec.controls[0].op, sol.state) / spec.n_sites;
}

}  // namespace

std::map<std::string, double> compute_measures(
    const ModelParams& params, const GroundSolution& solution, double a,
    const std::vector<std::string>& kinds) {
  std::map<std::string, double> out;
  auto wanted = [&](const char* k) {
    return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
  };
  if (params.model == ModelId::Lipkin) {
    // HF-form functionals of the density (exact as N -> infinity)
    const double s = std::max(0.0, 1.0 - 4.0 * a * a);
    if (wanted("L2")) out["L2"] = s;
    if (wanted("L4")) out["L4"] = (2.0 / 3.0) * s;
    if (wanted("negativity")) out["negativity"] = std::sqrt(s);
    return out;
  }
  const QuantumState& psi = solution.state;
  if (wanted("L2"))
    out["L2"] = block_entropy_l2(psi, 0);
  if (wanted("L4") && params.model == ModelId::Xxz)
    // pair-block entropy as the energy functional; reproduces the exact
    // 2/3 value on the ferromagnetic branch where the pair RDM formula
    // (which assumes vanishing magnetization) does not apply
    out["L4"] = xxz_l4(solution.energy_per_site, a, params.coupling);
  if ((wanted("L4") && params.model != ModelId::Xxz) || wanted("negativity")) {
    // Hubbard pair block = the two JW modes of one physical site
    ReducedDensityMatrix rdm = reduced_density_matrix(psi, {0, 1});
    if (wanted("L4") && params.model != ModelId::Xxz)
      out["L4"] = linear_entropy(rdm);
    if (wanted("negativity")) out["negativity"] = negativity(rdm);
  }
  return out;
}

std::vector<SweepRecord> sweep(const ModelParams& params,
                               const std::vector<double>& grid,
                               const SweepOptions& opts) {
  if (grid.size() < 5)
    throw std::invalid_argument("sweep grid needs at least 5 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("sweep grid must be strictly increasing");

  const std::size_t n = grid.size();
  std::vector<SweepRecord> records(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      SweepRecord& rec = records[i];
      rec.lambda = grid[i];
      try {
        const HamiltonianSpec spec = build_model(params, grid[i]);
        // XXZ sweeps run in the full Hilbert space: the ferromagnetic
        // branch that takes over for Delta > 1 lies outside Sz = 0, and
        // the level crossing there is the first-order signature
        SectorPtr sector = spec.sector;
        if (params.model == ModelId::Xxz)
          sector = std::make_shared<BasisSector>(
              BasisSector::full(spec.n_sites));
        const GroundSolution sol = ground_state(spec, sector, opts.solver);
        rec.epsilon = sol.energy_per_site;
        rec.a = density_per_site(spec, sol);
        rec.degenerate = sol.degenerate;
        ModelParams pp = params;
        pp.coupling = grid[i];
        rec.measures = compute_measures(pp, sol, rec.a, opts.measures);
      } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
      }
    }
  };
  const int n_threads =
      std::min<int>(resolve_threads(opts.threads), static_cast<int>(n));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<bool> valid(n);
  std::vector<double> eps(n);
  for (std::size_t i = 0; i < n; ++i) {
    valid[i] = !records[i].failed;
    eps[i] = records[i].epsilon;
  }
  std::vector<std::optional<double>> d1, d2;
  grid_derivatives(grid, eps, valid, d1, d2);
  for (std::size_t i = 0; i < n; ++i) {
    records[i].d1 = d1[i];
    records[i].d2 = d2[i];
  }

  std::vector<double> a_samples(n);
  for (std::size_t i = 0; i < n; ++i) a_samples[i] = records[i].a;
  for (const auto& kind : opts.measures) {
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = records[i].measures.find(kind);
      m[i] = it != records[i].measures.end() ? it->second : 0.0;
    }
    std::vector<std::optional<double>> md1, md2;
    grid_derivatives(grid, m, valid, md1, md2);
    DensityDerivative dm_da = measure_derivative_wrt_density(m, a_samples);
    for (std::size_t i = 0; i < n; ++i) {
      records[i].dm_dlambda[kind] = valid[i] ? md1[i] : std::nullopt;
      records[i].dm_da[kind] =
          (valid[i] && dm_da.defined[i])
              ? std::optional<double>(dm_da.value[i])
              : std::nullopt;
    }
  }
  return records;
}

HellmannFeynmanCheck verify_hellmann_feynman(const ModelParams& params,
                                             double value, double h,
                                             const SolverOptions& opts) {
  if (h <= 0.0) throw std::invalid_argument("step must be positive");
  HellmannFeynmanCheck check;
  const GroundSolution lo = ground_state(build_model(params, value - h), opts);
  const GroundSolution mid = ground_state(build_model(params, value), opts);
  const GroundSolution hi = ground_state(build_model(params, value + h), opts);
  if (lo.degenerate || mid.degenerate || hi.degenerate) {
    check.skipped_degenerate = true;
    return check;
  }
  const HamiltonianSpec spec = build_model(params, value);
  check.central_difference = (hi.energy - lo.energy) / (2.0 * h);
  check.expectation_value = rep_expectation(spec.controls[0].op, mid.state);
  check.residual =
      std::abs(check.central_difference - check.expectation_value);
  return check;
}

HkDualityCheck verify_hk_duality(const ModelParams& params, double coupling,
                                 double coupling_prime,
                                 const SolverOptions& opts) {
  if (coupling == coupling_prime)
    throw std::invalid_argument("couplings must differ");
  HkDualityCheck check;
  const HamiltonianSpec spec = build_model(params, coupling);
  const HamiltonianSpec spec_prime = build_model(params, coupling_prime);
  const GroundSolution g = ground_state(spec, opts);
  const GroundSolution gp = ground_state(spec_prime, opts);
  if (g.degenerate || gp.degenerate) {
    check.skipped_degenerate = true;
    return check;
  }
  const double a = rep_expectation(spec.controls[0].op, g.state);
  const double ap = rep_expectation(spec.controls[0].op, gp.state);
  check.value = (coupling_prime - coupling) * (a - ap);
  return check;
}

std::vector<std::optional<double>> chain_rule_residual(
    const std::vector<SweepRecord>& records, const std::string& measure) {
  std::vector<std::optional<double>> out(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    if (r.failed || r.degenerate || !r.d2) continue;
    auto il = r.dm_dlambda.find(measure);
    auto ia = r.dm_da.find(measure);
    if (il == r.dm_dlambda.end() || ia == r.dm_da.end()) continue;
    if (!il->second || !ia->second) continue;
    out[i] = std::abs(*il->second - *ia->second * *r.d2);
  }
  return out;
}

namespace {

struct SizeSignal {
  int size = 0;
  double location = 0.0;
  double magnitude = 0.0;
  bool found = false;
};

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

SizeSignal first_order_signal(int size, const std::vector<SweepRecord>& recs,
                              double jump_factor) {
  SizeSignal sig{size};
  std::vector<double> jumps;
  std::vector<std::pair<double, double>> located;  // (midpoint, jump)
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    const auto& a = recs[i];
    const auto& b = recs[i + 1];
    if (a.failed || b.failed || !a.d1 || !b.d1) continue;
    const double jump = std::abs(*b.d1 - *a.d1);
    jumps.push_back(jump);
    located.emplace_back(0.5 * (a.lambda + b.lambda), jump);
  }
  const double med = median(jumps);
  double best = 0.0, best_loc = 0.0;
  for (const auto& [loc, jump] : located) {
    if (jump > best) {
      best = jump;
      best_loc = loc;
    }
  }
  if (best > jump_factor * std::max(med, 1e-12)) {
    sig.found = true;
    sig.location = best_loc;
    sig.magnitude = best;
  }
  return sig;
}

SizeSignal second_order_signal(int size,
                               const std::vector<SweepRecord>& recs) {
  SizeSignal sig{size};
  double best = 0.0, best_loc = 0.0;
  for (std::size_t i = 1; i + 1 < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.failed || !r.d2) continue;
    const double mag = std::abs(*r.d2);
    if (mag > best) {
      best = mag;
      best_loc = r.lambda;
    }
  }
  if (best > 0.0) {
    sig.found = true;
    sig.location = best_loc;
    sig.magnitude = best;
  }
  return sig;
}

}  // namespace

QptReport detect_qpt(const std::map<int, std::vector<SweepRecord>>& by_size,
                     const QptOptions& opts) {
  if (by_size.size() < 2)
    throw std::invalid_argument("QPT detection needs at least two sizes");
  QptReport report;

  double grid_step = 1.0;
  for (const auto& [size, recs] : by_size)
    if (recs.size() >= 2) grid_step = recs[1].lambda - recs[0].lambda;

  auto assemble = [&](const std::vector<SizeSignal>& signals,
                      const std::string& order, const std::string& what) {
    if (signals.empty()) return;
    for (const auto& s : signals)
      if (!s.found) return;
    // locations must agree within a couple of grid steps
    for (std::size_t i = 1; i < signals.size(); ++i)
      if (std::abs(signals[i].location - signals[0].location) >
          2.5 * grid_step)
        return;
    // magnitude grows or persists with N
    for (std::size_t i = 1; i < signals.size(); ++i)
      if (signals[i].magnitude <
          signals[i - 1].magnitude * (1.0 - opts.growth_slack))
        return;
    QptCandidate cand;
    cand.order = order;
    cand.location = signals.back().location;
    cand.evidence = what;
    for (const auto& s : signals) {
      cand.sizes.push_back(s.size);
      cand.locations.push_back(s.location);
      cand.magnitudes.push_back(s.magnitude);
    }
    report.candidates.push_back(std::move(cand));
  };

  std::vector<SizeSignal> first, second;
  for (const auto& [size, recs] : by_size) {
    first.push_back(first_order_signal(size, recs, opts.jump_factor));
    second.push_back(second_order_signal(size, recs));
  }
  assemble(first, "first", "d1-jump magnitude");
  assemble(second, "second", "d2-extremum growth");

  // dM/da sign changes at the largest size, reported as corroboration
  const auto& largest = by_size.rbegin()->second;
  std::vector<std::string> kinds;
  for (const auto& r : largest)
    for (const auto& [k, v] : r.dm_da)
      if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
        kinds.push_back(k);
  for (const auto& kind : kinds) {
    std::optional<double> prev;
    double prev_lambda = 0.0;
    for (const auto& r : largest) {
      auto it = r.dm_da.find(kind);
      if (it == r.dm_da.end() || !it->second || r.failed) continue;
      const double v = *it->second;
      if (prev && *prev * v < 0.0)
        report.corroborating.push_back(
            {kind, 0.5 * (prev_lambda + r.lambda)});
      prev = v;
      prev_lambda = r.lambda;
    }
  }
  return report;
}

}  // namespace qcrit
