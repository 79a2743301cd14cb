#pragma once

#include <string>
#include <vector>

#include "cohomlab/recursion.hpp"

namespace cohomlab {

/// Named verification suites backing `cohomlab verify` and the acceptance
/// run. Each returns one CheckResult per verified fact.
CheckReport suite_tables(CharacterLab& lab, int max_n);
CheckReport suite_global(CharacterLab& lab, int max_n);
CheckReport suite_extended(CharacterLab& lab, int max_n);
CheckReport suite_rewriting(int max_n);
CheckReport suite_location(CharacterLab& lab, int max_n);
CheckReport suite_lowdegree(CharacterLab& lab, int max_n);

const std::vector<std::string>& suite_names();
CheckReport run_suite(const std::string& name, CharacterLab& lab, int max_n);

}  // namespace cohomlab
