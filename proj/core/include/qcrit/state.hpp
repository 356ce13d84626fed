#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qcrit/operators.hpp"
#include "qcrit/sector.hpp"

namespace qcrit {

/// Normalized state vector over a basis sector.
struct QuantumState {
  SectorPtr sector;
  Eigen::VectorXcd amplitudes;

  QuantumState() = default;
  QuantumState(SectorPtr sec, Eigen::VectorXcd amps);

  double norm() const { return amplitudes.norm(); }
};

/// Unnormalized image H|psi> via matrix-free Pauli-string application.
/// Throws when the expression maps outside the state's sector.
Eigen::VectorXcd apply(const OperatorExpression& expr,
                       const QuantumState& state);

/// Scatter the image of one source basis state through the sector; sink
/// receives (target index, contribution). Individual Pauli strings may
/// leave the sector even when the full expression preserves it (XX and YY
/// images cancel); out-of-sector contributions are accumulated and must
/// cancel or a domain_error is thrown.
template <typename Sink>
void apply_on_sector(const OperatorExpression& expr,
                     const BasisSector& sector, std::uint64_t source_bits,
                     cplx source_amp, Sink&& sink) {
  thread_local std::vector<std::pair<std::uint64_t, cplx>> leaked;
  leaked.clear();
  for (const auto& term : expr.terms()) {
    BasisAction act = apply_term_to_basis(term, source_bits);
    const std::ptrdiff_t j = sector.index_of(act.bits);
    const cplx contribution = act.amplitude * source_amp;
    if (j >= 0) {
      sink(static_cast<std::size_t>(j), contribution);
      continue;
    }
    bool merged = false;
    for (auto& [bits, amp] : leaked) {
      if (bits == act.bits) {
        amp += contribution;
        merged = true;
        break;
      }
    }
    if (!merged) leaked.emplace_back(act.bits, contribution);
  }
  for (const auto& [bits, amp] : leaked) {
    if (std::abs(amp) > 1e-12 * std::max(1.0, std::abs(source_amp)))
      throw std::domain_error(
          "expression maps outside the restricted basis sector");
  }
}

/// <psi|A|psi> for Hermitian A; the (checked) imaginary part is discarded.
double expectation(const OperatorExpression& expr, const QuantumState& state);

/// Dense matrix of the expression restricted to a sector (dim <= 4096).
Eigen::MatrixXcd to_dense(const OperatorExpression& expr,
                          const BasisSector& sector);

}  // namespace qcrit
