#pragma once

// Named verification cases. Each case recomputes its left-hand side through
// the engines, evaluates the golden expected value in the same module, and
// compares the two renderings exactly (in the simple quotient unless noted).

#include <string>
#include <string_view>
#include <vector>

#include "sl2voa/report.hpp"

namespace sl2voa {

struct CaseInfo {
  std::string id;
  int criterion = 0;  // acceptance criterion the case belongs to, 0 if none
  std::string summary;
};

const std::vector<CaseInfo>& registered_cases();

bool case_applies(std::string_view case_id, int k);

// One result per parameter instance (i, j, operand). Empty when the case
// does not apply at this level. Throws UnknownName for an unknown id.
std::vector<CaseResult> verify(std::string_view case_id, int k);
std::vector<CaseResult> verify_all(int k);

}  // namespace sl2voa
