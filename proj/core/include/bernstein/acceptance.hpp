#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bernstein/engine.hpp"

namespace bernstein {

enum class CriterionStatus { Pass, Fail, Inconclusive };

struct CriterionResult {
  int id = 0;
  std::string title;
  CriterionStatus status = CriterionStatus::Fail;
  /// Deterministic summary of what was measured.
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  /// Mode used for the Thomae vanishing check; the half-mass check is always float.
  Mode mode = Mode::Float;
  std::uint64_t seed = 7;
  /// Largest degree any criterion may use; degrees cut off by the cap turn
  /// affected checks Inconclusive.
  std::optional<std::size_t> schedule_cap;
};

/// Criteria 1-13 followed by the determinism check 14, which reruns 1-13
/// and compares the rendered reports byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
/// Runs a single criterion (1-13).
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

std::string status_name(CriterionStatus s);
/// One line per criterion. Timings are left out unless requested so that the
/// text is reproducible.
std::string render_acceptance(const std::vector<CriterionResult>& results, bool with_timing = false);
/// True when nothing failed and, unless allowed, nothing was inconclusive.
bool acceptance_passed(const std::vector<CriterionResult>& results, bool allow_inconclusive = false);

}  // namespace bernstein
