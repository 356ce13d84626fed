#include "qcrit/hamiltonian.hpp"

#include <stdexcept>

namespace qcrit {

OperatorRep rep_add(const OperatorRep& a, const OperatorRep& b, double scale) {
  if (a.index() != b.index())
    throw std::invalid_argument("mixing operator representations");
  if (std::holds_alternative<OperatorExpression>(a)) {
    return std::get<OperatorExpression>(a) +
           std::get<OperatorExpression>(b) * cplx(scale, 0.0);
  }
  return std::get<CollectiveOperator>(a) +
         std::get<CollectiveOperator>(b) * scale;
}

OperatorRep total_operator(const HamiltonianSpec& spec) {
  OperatorRep total = spec.h0;
  for (const auto& c : spec.controls) total = rep_add(total, c.op, c.value);
  return total;
}

}  // namespace qcrit
