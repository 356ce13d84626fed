#pragma once

#include <vector>

#include "qcrit/operators.hpp"

namespace qcrit {

enum class FermiOp { Create, Annihilate, Number };

struct FermionFactor {
  int mode = 0;
  FermiOp op = FermiOp::Number;
};

/// Normal-ordered product of fermionic mode operators: all creation
/// operators precede all annihilation operators; Number factors may appear
/// anywhere (they map directly to (I - Z)/2).
struct FermionTerm {
  double coefficient = 0.0;
  std::vector<FermionFactor> factors;
};

/// Jordan-Wigner image of a fermionic term over n_modes globally ordered
/// modes. c_m carries a Z string on modes 0..m-1.
OperatorExpression jordan_wigner(const FermionTerm& term, int n_modes);
OperatorExpression jordan_wigner(const std::vector<FermionTerm>& terms,
                                 int n_modes);

}  // namespace qcrit
