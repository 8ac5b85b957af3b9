#pragma once

// Property suites behind `hkr verify`. Every check is an exact equality.

#include <optional>
#include <string>
#include <vector>

#include "hkr/isogeny.hpp"

namespace hkr {

struct VerifyConfig {
  std::uint64_t p = 2;
  std::size_t n = 2;
  unsigned level = 2;
  /// Largest m; each suite has its own default when unset (6 for bijections, 4 otherwise).
  std::optional<std::uint32_t> max_m;
  std::uint64_t seed = 1;
  /// The section compared against the canonical one.
  std::string section = "seeded:1";
};

struct PropertyResult {
  std::string suite;
  std::string params;
  std::string property;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& verify_suites();  ///< without "all"

/// Runs one suite or "all"; results sorted by (suite, params, property). Throws InvalidArgument for unknown suites.
std::vector<PropertyResult> run_verify(const std::string& suite, const VerifyConfig& config);

std::string format_report(const std::vector<PropertyResult>& results);

/// "canonical" or "seeded:<u64>". Throws ParseError.
Section parse_section(const std::string& spec, const Integer& p, std::size_t n, unsigned bound);

}  // namespace hkr
