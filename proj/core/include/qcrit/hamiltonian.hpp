#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qcrit/collective.hpp"
#include "qcrit/operators.hpp"
#include "qcrit/sector.hpp"

namespace qcrit {

/// Operator representation: Pauli-string expression for spin / JW-fermion
/// models, banded collective-block matrix for the Lipkin model.
using OperatorRep = std::variant<OperatorExpression, CollectiveOperator>;

/// One external coupling lambda_l with its Hermitian operator A_l.
struct ControlTerm {
  std::string name;
  double value = 0.0;
  OperatorRep op;
  /// Individual A_l when the coupling is shared across sites; their sum
  /// equals op.
  std::vector<OperatorExpression> per_site;
};

/// H = h0 + sum_l lambda_l A_l, with a default symmetry sector.
struct HamiltonianSpec {
  /// Normalization count for energy per site/particle (physical sites for
  /// Hubbard, particles for Lipkin).
  int n_sites = 0;
  OperatorRep h0;
  std::vector<ControlTerm> controls;
  SectorPtr sector;
};

/// h0 + sum lambda_l A_l as a single operator.
OperatorRep total_operator(const HamiltonianSpec& spec);

/// a + scale * b; both sides must use the same representation.
OperatorRep rep_add(const OperatorRep& a, const OperatorRep& b, double scale);

}  // namespace qcrit
