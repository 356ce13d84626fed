#include "qcrit/eigensolver.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qcrit {

namespace {

Eigen::MatrixXcd dense_matrix(const OperatorRep& op,
                              const BasisSector& sector) {
  if (std::holds_alternative<CollectiveOperator>(op)) {
    const auto& c = std::get<CollectiveOperator>(op);
    if (static_cast<std::size_t>(c.dim()) != sector.size())
      throw std::invalid_argument("collective operator/sector mismatch");
    return c.to_dense().cast<cplx>();
  }
  return to_dense(std::get<OperatorExpression>(op), sector);
}

void fix_global_phase(Eigen::VectorXcd& v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (best > 0.0) v *= std::conj(v[imax]) / best;
}

struct LanczosResult {
  double e0 = 0.0;
  double e1 = std::numeric_limits<double>::quiet_NaN();
  Eigen::VectorXcd ground;
  int iterations = 0;
  bool converged = false;
  double bound = 0.0;
};

LanczosResult lanczos_lowest(const SectorMatvec& op,
                             const SolverOptions& opts) {
  const std::size_t dim = op.dim;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = cplx(gauss(rng), gauss(rng));
  v.normalize();

  std::vector<Eigen::VectorXcd> basis{v};
  std::vector<double> alpha, beta;
  Eigen::VectorXcd w(dim), v_prev;

  LanczosResult res;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
  const int max_iter =
      std::min<std::size_t>(opts.max_iterations, dim);
  for (int j = 0; j < max_iter; ++j) {
    op.mv(basis.back(), w);
    const double a = basis.back().dot(w).real();
    alpha.push_back(a);
    w -= a * basis.back();
    if (j > 0) w -= beta.back() * v_prev;
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();

    const int k = j + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    tri.compute(t);
    res.e0 = tri.eigenvalues()[0];
    res.e1 = k > 1 ? tri.eigenvalues()[1]
                   : std::numeric_limits<double>::quiet_NaN();
    res.iterations = k;
    const double scale = std::max(1.0, std::abs(res.e0));
    res.bound = b * std::abs(tri.eigenvectors()(k - 1, 0));
    const double bound1 =
        k > 1 ? b * std::abs(tri.eigenvectors()(k - 1, 1)) : scale;
    if (res.bound < opts.tolerance * scale &&
        (bound1 < 1e-6 * scale || k == static_cast<int>(dim))) {
      res.converged = true;
    }
    const bool exhausted = b < 1e-13 * scale;
    if (res.converged || exhausted || j == max_iter - 1) {
      if (exhausted) res.converged = true;
      res.ground = Eigen::VectorXcd::Zero(dim);
      for (int i = 0; i < k; ++i)
        res.ground += tri.eigenvectors()(i, 0) * basis[i];
      res.ground.normalize();
      return res;
    }
    beta.push_back(b);
    v_prev = basis.back();
    basis.push_back(w / b);
  }
  return res;
}

}  // namespace

SectorMatvec make_matvec(const OperatorRep& op, SectorPtr sector) {
  SectorMatvec out;
  out.dim = sector->size();
  if (std::holds_alternative<CollectiveOperator>(op)) {
    const auto c = std::get<CollectiveOperator>(op);
    if (static_cast<std::size_t>(c.dim()) != sector->size())
      throw std::invalid_argument("collective operator/sector mismatch");
    out.mv = [c](const Eigen::VectorXcd& in, Eigen::VectorXcd& o) {
      c.apply(in, o);
    };
    return out;
  }
  const auto expr = std::get<OperatorExpression>(op);
  if (expr.n_sites() != sector->n_sites())
    throw std::invalid_argument("expression/sector site count mismatch");
  out.mv = [expr, sector](const Eigen::VectorXcd& in, Eigen::VectorXcd& o) {
    const std::size_t dim = sector->size();
    o = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx amp = in[static_cast<Eigen::Index>(i)];
      if (amp == cplx(0.0)) continue;
      apply_on_sector(expr, *sector, sector->state_at(i), amp,
                      [&](std::size_t j, cplx v) {
                        o[static_cast<Eigen::Index>(j)] += v;
                      });
    }
  };
  return out;
}

GroundSolution ground_state(const HamiltonianSpec& spec, SectorPtr sector,
                            const SolverOptions& opts) {
  if (!sector || sector->size() == 0)
    throw std::invalid_argument("empty sector");
  const OperatorRep h = total_operator(spec);
  const std::size_t dim = sector->size();

  GroundSolution sol;
  Eigen::VectorXcd ground;
  if (dim <= opts.dense_cutoff) {
    Eigen::MatrixXcd m = dense_matrix(h, *sector);
    double max_imag = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        max_imag = std::max(max_imag, std::abs(m(r, c).imag()));
    if (max_imag < 1e-14) {
      // real-symmetric fast path
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
      sol.energy = es.eigenvalues()[0];
      sol.gap = dim > 1 ? es.eigenvalues()[1] - sol.energy
                        : std::numeric_limits<double>::infinity();
      ground = es.eigenvectors().col(0).cast<cplx>();
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
      sol.energy = es.eigenvalues()[0];
      sol.gap = dim > 1 ? es.eigenvalues()[1] - sol.energy
                        : std::numeric_limits<double>::infinity();
      ground = es.eigenvectors().col(0);
    }
    sol.iterations = 0;
  } else {
    const SectorMatvec mv = make_matvec(h, sector);
    LanczosResult lr = lanczos_lowest(mv, opts);
    if (!lr.converged)
      throw std::runtime_error(
          "Lanczos did not converge; achieved residual bound " +
          std::to_string(lr.bound));
    sol.energy = lr.e0;
    sol.gap = std::isnan(lr.e1) ? std::numeric_limits<double>::infinity()
                                : lr.e1 - lr.e0;
    sol.iterations = lr.iterations;
    ground = std::move(lr.ground);
  }
  fix_global_phase(ground);
  ground.normalize();
  sol.state = QuantumState(sector, std::move(ground));
  sol.energy_per_site = sol.energy / spec.n_sites;
  sol.degenerate = detect_degeneracy(sol, opts.degeneracy_rel_tol);

  // residual check
  const SectorMatvec mv = make_matvec(h, sector);
  Eigen::VectorXcd image;
  mv.mv(sol.state.amplitudes, image);
  sol.residual = (image - sol.energy * sol.state.amplitudes).norm();
  return sol;
}

GroundSolution ground_state(const HamiltonianSpec& spec,
                            const SolverOptions& opts) {
  return ground_state(spec, spec.sector, opts);
}

std::vector<double> dense_spectrum(const HamiltonianSpec& spec,
                                   SectorPtr sector) {
  if (!sector || sector->size() == 0)
    throw std::invalid_argument("empty sector");
  if (sector->size() > 4096)
    throw std::invalid_argument("dense spectrum limited to dimension 4096");
  Eigen::MatrixXcd m = dense_matrix(total_operator(spec), *sector);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(),
          es.eigenvalues().data() + es.eigenvalues().size()};
}

std::vector<double> dense_spectrum(const HamiltonianSpec& spec) {
  return dense_spectrum(spec, spec.sector);
}

bool detect_degeneracy(const GroundSolution& solution, double rel_tol) {
  if (std::isinf(solution.gap)) return false;
  return solution.gap < rel_tol * std::max(1.0, std::abs(solution.energy));
}

double rep_expectation(const OperatorRep& op, const QuantumState& state) {
  if (std::holds_alternative<CollectiveOperator>(op))
    return collective_expectation(std::get<CollectiveOperator>(op),
                                  state.amplitudes);
  return expectation(std::get<OperatorExpression>(op), state);
}

}  // namespace qcrit
