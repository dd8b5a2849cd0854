#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flutes/selftest.hpp"

using flutes::selftest::CheckResult;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CheckResult all_of(std::string name, const std::vector<CheckResult>& parts) {
  CheckResult r{std::move(name), true, ""};
  for (const auto& p : parts) {
    r.passed = r.passed && p.passed;
    if (!r.detail.empty()) r.detail += " | ";
    r.detail += (p.passed ? "" : "FAILED ") + p.name + ": " + p.detail;
  }
  return r;
}

CheckResult figure(const std::string& cli, const std::string& config, const std::string& stem) {
  const std::string first = stem + ".1.svg";
  const std::string second = stem + ".2.svg";
  for (const auto& out : {first, second}) {
    const std::string cmd = "\"" + cli + "\" fan --config \"" + config + "\" --svg \"" + out + "\" 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return {stem, false, "fan command failed"};
  }
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  CheckResult geometry = flutes::selftest::svg_geometry(stem, a);
  if (a != b) {
    geometry.passed = false;
    geometry.detail += ", repeated runs differ";
  } else {
    geometry.detail += ", byte-identical";
  }
  return geometry;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <flutes-cli> <configs-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string configs = argv[2];
  namespace st = flutes::selftest;

  std::vector<std::pair<int, CheckResult>> results;
  results.emplace_back(1, st::phase_diagram());
  results.emplace_back(2, st::horocyclic_oracle());
  results.emplace_back(3, all_of("dichotomy", {st::zero_shear_dichotomy(), st::slice_geodesic_limit()}));
  results.emplace_back(4, all_of("shear algebra vs geometry", {st::even_shear_oracle(), st::odd_shear_oracle()}));
  results.emplace_back(5, st::pentagon_bounds());
  results.emplace_back(6, st::sigma_exponents());
  results.emplace_back(7, all_of("figures", {figure(cli, configs + "/slice_4_1.json", "fan_slice_4_1"),
                                             figure(cli, configs + "/end_surface_0.5_6.2.json",
                                                    "fan_end_surface_0.5_6.2")}));
  results.emplace_back(8, st::proof_inequalities());

  int failed = 0;
  for (const auto& [id, r] : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << r.name << ": " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
