#pragma once

#include "lacunae/bivar_poly.hpp"
#include "lacunae/exec.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lacunae {

struct IntRange {
  unsigned lo = 0;
  unsigned hi = 0;
};

/// Largest Hermite index a sweep may touch unless LACUNAE_CAP says otherwise.
inline constexpr unsigned kDefaultIndexCap = 80;
unsigned index_cap_from_env();

struct VerifyConfig {
  IntRange k_range{3, 3};
  IntRange l_range{0, 0};
  unsigned n_max = 16;
  std::uint64_t seed = 1;
  std::optional<std::string> output_path;
  unsigned index_cap = kDefaultIndexCap;

  /// Throws DomainError unless K ⊆ [1, 12], ranges are ordered and
  /// n_max·K_max + L_max ≤ index_cap.
  void validate() const;
};

/// The stock sweep: K = 3 and K = 4 up to n = 16, K = 5 up to n = 15, L = 0.
std::vector<VerifyConfig> default_sweep();

struct CaseRecord {
  unsigned K = 0;
  unsigned L = 0;
  unsigned n = 0;
  bool pass = false;
  std::optional<Term> diff_term;
  double elapsed_ms = 0;
  friend bool operator==(const CaseRecord& a, const CaseRecord& b);
};

/// Structural checks run once per K: resummation vs brute-force dilatation,
/// the even/odd split, and closed form vs resummation.
struct CheckRecord {
  std::string name;
  unsigned K = 0;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0;
  friend bool operator==(const CheckRecord& a, const CheckRecord& b);
};

struct VerifyReport {
  std::vector<CaseRecord> cases;
  std::vector<CheckRecord> checks;
  unsigned passed = 0;
  unsigned failed = 0;
  double elapsed_ms = 0;

  bool ok() const { return failed == 0; }
  /// passed + failed equals the number of records and matches their flags.
  bool totals_consistent() const;
  void append(const VerifyReport& other);
};

VerifyReport run_verification(const VerifyConfig& cfg, Exec exec = Exec::parallel);

/// Schema: {"cases": [{"K","L","n","pass","diff_term","elapsed_ms"}], "checks": [...],
///          "passed", "failed", "elapsed_ms"}.
nlohmann::json report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const nlohmann::json& j);
/// Same report with every timing field zeroed; used for determinism checks.
VerifyReport without_timing(VerifyReport r);

}  // namespace lacunae
