#pragma once

#include <functional>
#include <string>
#include <vector>

namespace arcv {

enum class Profile {
  Quick,    // reduced grids, for smoke runs
  Desk,     // the pinned acceptance grid
  Stretch,  // desk plus l = 4, n = 2 for the reducedness check
};

Profile parse_profile(const std::string& name);

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  Profile profile = Profile::Desk;
  int workers = 1;
};

/// Runs every acceptance criterion in order, calling on_result after each.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace arcv
