#include "qcrit/io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace qcrit {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::optional<double> measure_of(const SweepRecord& r, const char* kind) {
  auto it = r.measures.find(kind);
  if (r.failed || it == r.measures.end()) return std::nullopt;
  return it->second;
}

std::optional<double> map_opt(
    const std::map<std::string, std::optional<double>>& m, const char* kind) {
  auto it = m.find(kind);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

nlohmann::json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

std::string sweep_csv(const ModelParams& params,
                      const std::vector<SweepRecord>& records) {
  std::string out =
      "model,param,n_sites,lambda,epsilon,a,d1,d2,L2,L4,negativity,"
      "dL2_dlambda,dL4_dlambda,dneg_dlambda,dL2_da,dL4_da,dneg_da,"
      "degenerate\n";
  const std::string model = model_name(params.model);
  const std::string param = control_name(params.model);
  for (const auto& r : records) {
    out += model + ',' + param + ',' + std::to_string(params.n_sites) + ',';
    out += format_number(r.lambda) + ',';
    if (r.failed) {
      out += ",,,,,,,,,,,,,\n";
      continue;
    }
    out += format_number(r.epsilon) + ',' + format_number(r.a) + ',';
    out += opt_field(r.d1) + ',' + opt_field(r.d2) + ',';
    out += opt_field(measure_of(r, "L2")) + ',';
    out += opt_field(measure_of(r, "L4")) + ',';
    out += opt_field(measure_of(r, "negativity")) + ',';
    out += opt_field(map_opt(r.dm_dlambda, "L2")) + ',';
    out += opt_field(map_opt(r.dm_dlambda, "L4")) + ',';
    out += opt_field(map_opt(r.dm_dlambda, "negativity")) + ',';
    out += opt_field(map_opt(r.dm_da, "L2")) + ',';
    out += opt_field(map_opt(r.dm_da, "L4")) + ',';
    out += opt_field(map_opt(r.dm_da, "negativity")) + ',';
    out += r.degenerate ? "1" : "0";
    out += '\n';
  }
  return out;
}

nlohmann::json sweep_json(const ModelParams& params,
                          const std::vector<SweepRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row;
    row["lambda"] = r.lambda;
    if (r.failed) {
      row["failed"] = true;
      row["error"] = r.error;
      rows.push_back(std::move(row));
      continue;
    }
    row["epsilon"] = r.epsilon;
    row["a"] = r.a;
    row["d1"] = opt_json(r.d1);
    row["d2"] = opt_json(r.d2);
    for (const auto& [k, v] : r.measures) row[k] = v;
    for (const auto& [k, v] : r.dm_dlambda) row["d" + k + "_dlambda"] = opt_json(v);
    for (const auto& [k, v] : r.dm_da) row["d" + k + "_da"] = opt_json(v);
    row["degenerate"] = r.degenerate;
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["model"] = model_name(params.model);
  doc["param"] = control_name(params.model);
  doc["n_sites"] = params.n_sites;
  doc["records"] = std::move(rows);
  return doc;
}

nlohmann::json qpt_report_json(const QptReport& report) {
  nlohmann::json doc;
  doc["candidates"] = nlohmann::json::array();
  for (const auto& c : report.candidates) {
    nlohmann::json item;
    item["order"] = c.order;
    item["location"] = c.location;
    item["evidence"] = c.evidence;
    item["sizes"] = c.sizes;
    item["locations"] = c.locations;
    item["magnitudes"] = c.magnitudes;
    doc["candidates"].push_back(std::move(item));
  }
  doc["corroborating"] = nlohmann::json::array();
  for (const auto& c : report.corroborating) {
    nlohmann::json item;
    item["measure"] = c.measure;
    item["location"] = c.location;
    doc["corroborating"].push_back(std::move(item));
  }
  return doc;
}

}  // namespace qcrit
