#include "sl2voa/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sl2voa {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unverified: return "unverified";
  }
  return "fail";
}

Status compare(const std::string& witness, const std::string& expected) {
  return witness == expected ? Status::pass : Status::fail;
}

bool all_passed(const std::vector<CaseResult>& results) {
  for (const CaseResult& r : results)
    if (r.status == Status::fail) return false;
  return true;
}

std::string to_json(const std::vector<CaseResult>& results, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CaseResult& r : results) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    out.push_back({{"case_id", r.case_id},
                   {"k", r.k},
                   {"params", params},
                   {"status", to_string(r.status)},
                   {"witness", r.witness},
                   {"expected", r.expected},
                   {"runtime_ms", r.runtime_ms}});
  }
  return out.dump(indent);
}

std::string to_text(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, unverified = 0;
  for (const CaseResult& r : results) {
    os << std::left << std::setw(11) << ("[" + to_string(r.status) + "]") << r.case_id << "  k=" << r.k;
    for (const auto& [key, value] : r.params)
      if (key != "display") os << ' ' << key << '=' << value;
    os << "  (" << std::fixed << std::setprecision(1) << r.runtime_ms << " ms)\n";
    if (r.status == Status::fail) {
      os << "    witness:  " << r.witness << "\n";
      os << "    expected: " << r.expected << "\n";
    }
    switch (r.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::unverified: ++unverified; break;
    }
  }
  os << pass << " passed, " << fail << " failed, " << unverified << " unverified\n";
  return os.str();
}

}  // namespace sl2voa
