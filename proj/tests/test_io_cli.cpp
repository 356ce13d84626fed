#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <qcrit/io.hpp>
#include <sstream>

using namespace qcrit;
using nlohmann::json;

namespace {

#ifndef QCRIT_CLI
#error "QCRIT_CLI must point at the qcrit binary"
#endif

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCRIT_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kHeader =
    "model,param,n_sites,lambda,epsilon,a,d1,d2,L2,L4,negativity,"
    "dL2_dlambda,dL4_dlambda,dneg_dlambda,dL2_da,dL4_da,dneg_da,degenerate";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(-0.5) == "-0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("CSV schema and undefined-field emission") {
  ModelParams p;
  p.model = ModelId::Xxz;
  p.n_sites = 8;
  std::vector<SweepRecord> recs(2);
  recs[0].lambda = 0.5;
  recs[0].epsilon = -0.6;
  recs[0].a = -0.1;
  recs[0].d1 = -0.1;
  // d2 left undefined; one failed row
  recs[0].measures = {{"L2", 0.4}, {"L4", 0.7}, {"negativity", 0.1}};
  recs[0].dm_dlambda["L2"] = 0.02;
  recs[0].dm_da["L2"] = std::nullopt;  // undefined-guarded quotient
  recs[1].lambda = 0.6;
  recs[1].failed = true;
  recs[1].error = "did not converge";

  const std::string csv = sweep_csv(p, recs);
  auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == kHeader);
  auto fields = split(lines[1] + "|", ',');
  REQUIRE(fields.size() == 18);
  CHECK(fields[0] == "xxz");
  CHECK(fields[1] == "Delta");
  CHECK(fields[2] == "8");
  CHECK(fields[3] == "0.5");
  CHECK(fields[7] == "");          // undefined d2
  CHECK(fields[14] == "");         // undefined dL2_da
  CHECK(fields[17] == "0|");       // degenerate flag
  auto failed = split(lines[2] + "|", ',');
  REQUIRE(failed.size() == 18);
  CHECK(failed[3] == "0.6");
  for (int i = 4; i < 17; ++i) CHECK(failed[i] == "");
}

TEST_CASE("point command emits the solved record") {
  auto r = run_cli("point --model hubbard --l 6 --u 0");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(std::abs(doc["a"].get<double>() - 0.25) < 1e-9);
  CHECK(doc.contains("epsilon"));
  CHECK(doc.contains("L2"));
  CHECK(doc.contains("negativity"));
  CHECK(doc["param"] == "U");

  auto iso = run_cli("point --model xxz --n 4 --delta 1");
  REQUIRE(iso.exit_code == 0);
  json iso_doc = json::parse(iso.out);
  CHECK(std::abs(iso_doc["epsilon"].get<double>() + 0.5) < 1e-10);
}

TEST_CASE("invalid parameters exit with code 1") {
  CHECK(run_cli("point --model tfim --lambda 1").exit_code == 1);  // no size
  CHECK(run_cli("point --model nosuch --n 4 --lambda 1").exit_code == 1);
  CHECK(run_cli("sweep --model tfim --n 4 --grid 1:0:0.1").exit_code == 1);
  CHECK(run_cli("nosuchcommand").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sweep command emits the schema and is deterministic") {
  const std::string flags =
      "sweep --model tfim --n 6 --grid 0.4:1.4:0.1 --seed 7 --threads 4";
  auto first = run_cli(flags);
  REQUIRE(first.exit_code == 0);
  auto lines = split(first.out, '\n');
  REQUIRE(lines.size() >= 12);
  CHECK(lines[0] == kHeader);
  CHECK(split(lines[1] + "|", ',').size() == 18);

  auto second = run_cli(flags);
  CHECK(first.out == second.out);  // byte-identical
}

TEST_CASE("sweep rows follow grid order") {
  auto r = run_cli("sweep --model xxz --n 6 --grid 0:0.5:0.1");
  REQUIRE(r.exit_code == 0);
  auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 7);
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double lam = std::stod(split(lines[i], ',')[3]);
    CHECK(lam > prev);
    prev = lam;
  }
}

TEST_CASE("verify command reports per-check lines") {
  auto r = run_cli("verify --model xxz --n 8 --delta 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] hellmann-feynman") != std::string::npos);
  CHECK(r.out.find("[PASS] hk-duality") != std::string::npos);
  CHECK(r.out.find("[PASS] chain-rule") != std::string::npos);
  CHECK(r.out.find("[PASS] pair-rdm-identity") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);

  // degenerate point: skipped, not failed
  auto deg = run_cli("verify --model tfim --n 8 --lambda 0");
  CHECK(deg.out.find("[SKIP] hellmann-feynman") != std::string::npos);
  CHECK(deg.exit_code == 0);
}

TEST_CASE("detect command emits a JSON QPT report") {
  auto r = run_cli(
      "detect --model xxz --sizes 6 8 --grid 0.6:1.4:0.1 --threads 4");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc.contains("candidates"));
  bool first_order = false;
  for (const auto& c : doc["candidates"])
    if (c["order"] == "first" &&
        std::abs(c["location"].get<double>() - 1.0) < 0.11)
      first_order = true;
  CHECK(first_order);
  CHECK(doc["sizes"].size() == 2);
}

TEST_CASE("json-config escape hatch") {
  const std::string path = "qcrit_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"command":"point","model":"lipkin","n":100,"lambda":0.5})";
  }
  auto r = run_cli("--json-config " + path);
  std::remove(path.c_str());
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(std::abs(doc["a"].get<double>() + 0.25) < 0.05);
}

TEST_CASE("output file writing") {
  const std::string path = "qcrit_test_sweep.csv";
  auto r = run_cli("sweep --model xxz --n 6 --grid 0:0.4:0.1 --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == kHeader);
  f.close();
  std::remove(path.c_str());
}
