#pragma once

// Case results and their text / JSON renderings.

#include <string>
#include <utility>
#include <vector>

namespace sl2voa {

enum class Status { pass, fail, unverified };

std::string to_string(Status s);

struct CaseResult {
  std::string case_id;
  int k = 0;
  std::vector<std::pair<std::string, std::string>> params;  // ordered, values rendered
  Status status = Status::fail;
  std::string witness;
  std::string expected;
  double runtime_ms = 0;
};

// pass iff witness == expected, otherwise fail.
Status compare(const std::string& witness, const std::string& expected);

// True unless some result failed; unverified results do not count.
bool all_passed(const std::vector<CaseResult>& results);

std::string to_json(const std::vector<CaseResult>& results, int indent = 2);
std::string to_text(const std::vector<CaseResult>& results);

}  // namespace sl2voa
