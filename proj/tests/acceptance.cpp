// One line per acceptance criterion over k = 3..6. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sl2voa/classify.hpp"
#include "sl2voa/properties.hpp"
#include "sl2voa/verify.hpp"

using namespace sl2voa;

namespace {

struct Tally {
  std::size_t passed = 0, failed = 0, unverified = 0;
  std::string first_failure;
};

std::string clip(const std::string& s, std::size_t n = 160) {
  return s.size() <= n ? s : s.substr(0, n) + "...";
}

std::string describe(const CaseResult& r) {
  std::string out = r.case_id + " k=" + std::to_string(r.k);
  for (const auto& [key, value] : r.params)
    if (key == "i" || key == "j") out += " " + key + "=" + value;
  return out + ": got " + clip(r.witness) + ", expected " + clip(r.expected);
}

const char* kTitles[] = {
    "",
    "omega_1 on top vectors",
    "Delta(h'',z) displays",
    "twisted composite modes as operator identities",
    "lowest weight of eta",
    "W3 on eta truth table",
    "lowest weight checks at i = k/2",
    "twisted lowest weights",
    "W3 on sigma-stable top vectors",
    "classification counts",
    "property suites",
};

}  // namespace

int main() {
  const std::vector<int> levels = {3, 4, 5, 6};
  const auto start = std::chrono::steady_clock::now();
  std::map<int, Tally> tallies;
  double slowest = 0;
  std::string slowest_id;

  for (int k : levels) {
    for (const CaseInfo& info : registered_cases()) {
      if (info.criterion == 0) continue;
      Tally& t = tallies[info.criterion];
      for (const CaseResult& r : verify(info.id, k)) {
        if (r.runtime_ms > slowest) {
          slowest = r.runtime_ms;
          slowest_id = r.case_id + " k=" + std::to_string(k);
        }
        switch (r.status) {
          case Status::pass: ++t.passed; break;
          case Status::unverified: ++t.unverified; break;
          case Status::fail:
            if (t.failed++ == 0) t.first_failure = describe(r);
            break;
        }
      }
    }
    Tally& counts = tallies[9];
    const ClassificationTable table = classify(k);
    if (table.weights_match()) {
      ++counts.passed;
    } else if (counts.failed++ == 0) {
      counts.first_failure = "classify k=" + std::to_string(k) + ": a row weight differs from its closed form";
    }
    Tally& props = tallies[10];
    for (const PropertyResult& p : run_properties(k)) {
      slowest = std::max(slowest, p.runtime_ms);
      if (p.passed) {
        ++props.passed;
      } else if (props.failed++ == 0) {
        props.first_failure = p.name + " k=" + std::to_string(k) + ": " + clip(p.detail);
      }
    }
  }

  bool ok = true;
  for (int c = 1; c <= 10; ++c) {
    const Tally& t = tallies[c];
    const bool pass = t.failed == 0 && t.passed > 0;
    ok = ok && pass;
    std::printf("criterion %2d %s  %-48s %zu passed, %zu failed, %zu unverified\n", c, pass ? "PASS" : "FAIL",
                kTitles[c], t.passed, t.failed, t.unverified);
    if (!pass && !t.first_failure.empty()) std::printf("             first failure: %s\n", t.first_failure.c_str());
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1f s, slowest single check %.0f ms (%s)\n", total, slowest, slowest_id.c_str());
  return ok ? 0 : 1;
}
