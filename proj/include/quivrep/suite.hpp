#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "quivrep/catalog.hpp"

namespace quivrep {

enum class CheckStatus { pass, fail, uncertified, expected_fail };

struct CheckResult {
  std::string id;
  std::string subject;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // nonempty on fail
  double seconds = 0.0;
};

struct ReportDoc {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  int exit_code() const { return ok() ? 0 : 1; }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct SuiteConfig {
  std::uint64_t seed = 20250101;
  std::size_t classify_samples = 200;
  std::size_t adjunction_pairs = 20;
  std::size_t exactness_pairs = 20;
  std::size_t covering_lifts = 100;
  /// Width-4 catalog over {0,1} entries; the signed entry set {-1,0,1} is
  /// exhaustively feasible up to width 3 and is run as a second pass.
  BandCatalogParams band{4, 2, {0, 1}, 7};
  BandCatalogParams band_signed{3, 2, {-1, 0, 1}, 7};
  std::vector<Rat> lambda_values = {rat_of(1), rat_of(2), rat_of(3), rat_of(5), rat_of(7)};
  std::vector<Rat> vlambda_values = {rat_of(2), rat_of(3), rat_of(5)};
  /// Negative control: deliberately tampers a catalog expectation; the suite
  /// must then fail with a witness.
  bool tamper_catalog = false;
};

/// Runs every benchmark check with fixed seeds and exact tolerances.
ReportDoc run_benchmark_suite(const SuiteConfig& config = {});

}  // namespace quivrep
