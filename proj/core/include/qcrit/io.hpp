#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qcrit/analysis.hpp"

namespace qcrit {

/// 12 significant digits, '.' decimal separator.
std::string format_number(double value);

/// Fixed column schema:
/// model,param,n_sites,lambda,epsilon,a,d1,d2,L2,L4,negativity,
/// dL2_dlambda,dL4_dlambda,dneg_dlambda,dL2_da,dL4_da,dneg_da,degenerate
/// Undefined entries are emitted as empty fields; rows follow grid order.
std::string sweep_csv(const ModelParams& params,
                      const std::vector<SweepRecord>& records);

nlohmann::json sweep_json(const ModelParams& params,
                          const std::vector<SweepRecord>& records);

nlohmann::json qpt_report_json(const QptReport& report);

}  // namespace qcrit
