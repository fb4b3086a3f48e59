#pragma once
#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace fracfield::verify {

struct Check {
  std::string suite;
  std::string name;
  double error = 0.0;  // worst measured error (relative or absolute per check)
  double tol = 0.0;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 20240611;
  double tol_override = 0.0;  // > 0 replaces every check's tolerance
};

// One numbered acceptance criterion (1..11). Runtime limits, where the
// criterion has one, are part of the pass flag.
Check criterion(int id, const Options& opt = {});
int criterion_count();

const std::vector<std::string>& suite_names();  // without "all"

// Throws ValidityError for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const Options& opt = {});

nlohmann::json report(const std::string& suite, const Options& opt,
                      const std::vector<Check>& checks);

}  // namespace fracfield::verify
