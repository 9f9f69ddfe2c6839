// Run configuration shared by the CLI and the verification suites.
#ifndef IGUSA_CONFIG_HPP
#define IGUSA_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "igusa/errors.hpp"

namespace igusa {

struct RunConfig {
  std::vector<uint32_t> primes{5, 7, 11, 13};
  std::vector<int> ms{1, 2, 3, 4};
  int k_max = 3;
  uint64_t naive_budget = 100000000;  // cap on p^{mn} enumerations
  uint64_t torus_budget = 100000000;  // cap on (p^k - 1)^n enumerations
  double tolerance = 1e-9;
  uint64_t seed = 42;
  std::string output_path;  // empty: stdout
};

/// Flat key = value document; '#' starts a comment. Lists are comma-separated.
/// Unknown keys are rejected.
inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "config line has no '='");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    auto parse_list = [&](auto push) {
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) push(trim(item));
    };
    try {
      if (key == "primes") {
        cfg.primes.clear();
        parse_list([&](const std::string& s) { cfg.primes.push_back(std::stoul(s)); });
      } else if (key == "ms") {
        cfg.ms.clear();
        parse_list([&](const std::string& s) { cfg.ms.push_back(std::stoi(s)); });
      } else if (key == "k_max") {
        cfg.k_max = std::stoi(val);
      } else if (key == "naive_budget") {
        cfg.naive_budget = std::stoull(val);
      } else if (key == "torus_budget") {
        cfg.torus_budget = std::stoull(val);
      } else if (key == "tolerance") {
        cfg.tolerance = std::stod(val);
      } else if (key == "seed") {
        cfg.seed = std::stoull(val);
      } else if (key == "output") {
        cfg.output_path = val;
      } else {
        throw ParseError(lineno, "unknown config key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError(lineno, "bad value for config key '" + key + "'");
    }
  }
  if (cfg.tolerance <= 0) throw ParseError(0, "tolerance must be positive");
  if (cfg.naive_budget == 0 || cfg.torus_budget == 0)
    throw ParseError(0, "budgets must be positive");
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open config file " + path);
  return parse_config(in);
}

}  // namespace igusa

#endif
