#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sl2voa/classify.hpp"
#include "sl2voa/errors.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/properties.hpp"
#include "sl2voa/session.hpp"
#include "sl2voa/verify.hpp"

namespace {

using namespace sl2voa;

struct VerifyArgs {
  std::vector<std::string> cases;
  bool all = false;
  std::vector<int> levels;
  std::string format = "text";
  int jobs = 1;
};

struct Task {
  std::string id;
  int k;
};

int run_verify(const VerifyArgs& a) {
  std::vector<Task> tasks;
  for (int k : a.levels) {
    if (a.cases.empty() || a.all) {
      for (const CaseInfo& c : registered_cases()) tasks.push_back({c.id, k});
    } else {
      for (const std::string& id : a.cases) tasks.push_back({id, k});
    }
  }
  for (const Task& t : tasks) {
    const auto& reg = registered_cases();
    if (std::none_of(reg.begin(), reg.end(), [&](const CaseInfo& c) { return c.id == t.id; }))
      throw UnknownName("unknown case id: " + t.id);
  }

  std::vector<std::vector<CaseResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t n = next++; n < tasks.size(); n = next++) slots[n] = verify(tasks[n].id, tasks[n].k);
  };
  const int jobs = std::max(1, std::min<int>(a.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<CaseResult> results;
  for (auto& s : slots) results.insert(results.end(), s.begin(), s.end());
  if (!a.cases.empty() && !a.all && results.empty()) {
    std::cerr << "no requested case applies at the given level(s)\n";
    return 1;
  }
  std::cout << (a.format == "json" ? to_json(results) + "\n" : to_text(results));
  return all_passed(results) ? 0 : 1;
}

int run_classify(int k, const std::string& out, const std::string& format) {
  const ClassificationTable table = classify(k);
  const std::string body = format == "json" ? table.to_json() + "\n" : table.to_text();
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << body;
    std::cout << "wrote " << table.rows.size() << " rows to " << out << "\n";
  }
  return table.weights_match() ? 0 : 1;
}

std::pair<int, int> parse_context(const std::string& text) {
  std::istringstream in(text);
  int k = 0, i = 0;
  char comma = 0;
  if (!(in >> k >> comma >> i) || comma != ',' || !(in >> std::ws).eof())
    throw Error("context must look like k,i: " + text);
  return {k, i};
}

// "name,index": a '/' in the index, or --twisted, selects the twisted mode.
std::string mode_prefix(const std::string& mode, bool twisted) {
  const auto comma = mode.rfind(',');
  if (comma == std::string::npos) throw Error("mode must look like name,index: " + mode);
  const std::string name = mode.substr(0, comma);
  const std::string index = mode.substr(comma + 1);
  if (twisted || index.find('/') != std::string::npos) return name + "_{" + index + "}";
  return name + "(" + index + ")";
}

int run_eval(const std::string& expr, const std::string& context, const std::string& mode, bool twisted,
             bool raw) {
  const auto [k, i] = parse_context(context);
  Session session(k);
  LaurentVector value = evaluate(parse_literal(expr), session, i);
  if (!mode.empty()) {
    const Literal op = parse_literal(mode_prefix(mode, twisted) + "|w>");
    LaurentVector applied;
    for (const auto& [exponent, v] : value.entries()) {
      Bindings b;
      b.operand = v;
      applied.add(exponent, evaluate_vector(op, session, i, b));
    }
    value = applied;
  }
  if (!raw) {
    LaurentVector reduced;
    for (const auto& [exponent, v] : value.entries()) reduced.add(exponent, session.quotient(i).reduce(v));
    value = reduced;
  }
  std::cout << render(value) << "\n";
  return 0;
}

int run_gram(int k, int i, int degree) {
  Session session(k);
  Quotient& q = session.quotient(i);
  const GramBlock block = q.gram_block(degree);
  const ModuleId id = session.space(i).id();
  std::cout << "V(" << k << "," << i << ") degree " << degree << ", dimension " << block.basis.size() << "\n";
  std::cout << "basis:\n";
  for (std::size_t n = 0; n < block.basis.size(); ++n)
    std::cout << "  [" << n << "] " << render(FockVector(id, block.basis[n])) << "\n";
  std::cout << "matrix:\n";
  for (const auto& row : block.matrix) {
    std::cout << " ";
    for (const Scalar& x : row) std::cout << " " << to_string(x);
    std::cout << "\n";
  }
  std::cout << "rank: " << rank(block.matrix) << "\n";
  const auto radical = q.radical_basis(degree);
  std::cout << "radical (" << radical.size() << "):\n";
  for (const FockVector& v : radical) std::cout << "  " << render(v) << "\n";
  return 0;
}

int run_properties(const std::vector<int>& levels, const PropertyOptions& opts, const std::string& only) {
  bool ok = true;
  for (int k : levels) {
    const std::vector<PropertyResult> results =
        only.empty() ? sl2voa::run_properties(k, opts) : std::vector{run_property(only, k, opts)};
    for (const PropertyResult& r : results) {
      ok = ok && r.passed;
      std::cout << "[" << (r.passed ? "pass" : "fail") << "] " << r.name << " k=" << k << " " << r.detail << " ("
                << static_cast<long>(r.runtime_ms) << " ms)\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for level-k sl2 parafermion orbifolds"};
  app.require_subcommand(1);

  VerifyArgs va;
  va.levels = {3, 4, 5, 6};
  auto* verify_cmd = app.add_subcommand("verify", "Run named verification cases");
  auto* case_opt = verify_cmd->add_option("--case", va.cases, "Case id (repeatable)");
  verify_cmd->add_flag("--all", va.all, "Run every registered case")->excludes(case_opt);
  verify_cmd->add_option("--k", va.levels, "Level(s)")->check(CLI::Range(1, 64))->delimiter(',');
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--jobs,-j", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bool list_cases = false;
  verify_cmd->add_flag("--list", list_cases, "List registered case ids and exit");

  int ck = 0;
  std::string out, cformat = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Build the orbifold classification table");
  classify_cmd->add_option("--k", ck, "Level")->required();
  classify_cmd->add_option("--out", out, "Write the table to a file");
  classify_cmd->add_option("--format", cformat)->check(CLI::IsMember({"text", "json"}));

  std::string expr, context, mode;
  bool twisted = false, raw = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a vector literal");
  eval_cmd->add_option("--expr", expr, "Vector literal")->required();
  eval_cmd->add_option("--context", context, "k,i")->required();
  eval_cmd->add_option("--mode", mode, "name,index applied to the result");
  eval_cmd->add_flag("--twisted", twisted, "Treat an integer mode index as twisted");
  eval_cmd->add_flag("--raw", raw, "Print the V(k,i) representative without reducing");

  int gk = 0, gi = 0, gd = 0;
  auto* gram_cmd = app.add_subcommand("gram", "Gram block of the contravariant form");
  gram_cmd->add_option("--k", gk)->required();
  gram_cmd->add_option("--i", gi)->required();
  gram_cmd->add_option("--degree", gd)->required()->check(CLI::NonNegativeNumber);

  std::vector<int> plevels = {3, 4, 5, 6};
  PropertyOptions popts;
  std::string only;
  auto* prop_cmd = app.add_subcommand("properties", "Run the property suites");
  prop_cmd->add_option("--k", plevels)->delimiter(',');
  prop_cmd->add_option("--seed", popts.seed);
  prop_cmd->add_option("--samples", popts.samples);
  prop_cmd->add_option("--name", only, "Run a single property");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) {
      if (list_cases) {
        for (const CaseInfo& c : registered_cases())
          std::cout << c.id << "\t" << c.criterion << "\t" << c.summary << "\n";
        return 0;
      }
      return run_verify(va);
    }
    if (*classify_cmd) return run_classify(ck, out, cformat);
    if (*eval_cmd) return run_eval(expr, context, mode, twisted, raw);
    if (*gram_cmd) return run_gram(gk, gi, gd);
    if (*prop_cmd) return run_properties(plevels, popts, only);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
