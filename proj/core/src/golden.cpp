#include "sl2voa/golden.hpp"

#include <sstream>

#include "sl2voa/errors.hpp"

namespace sl2voa {

namespace detail {
extern const std::string_view golden_text;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> load() {
  std::map<std::string, std::string> table;
  std::istringstream in{std::string(detail::golden_text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw Error("malformed golden line: " + line);
    table.emplace(trim(line.substr(0, eq)), trim(line.substr(eq + 3)));
  }
  return table;
}

}  // namespace

const std::map<std::string, std::string>& golden_table() {
  static const std::map<std::string, std::string> table = load();
  return table;
}

const std::string& golden(std::string_view key) {
  const auto& table = golden_table();
  auto it = table.find(std::string(key));
  if (it == table.end()) throw UnknownName("no golden entry '" + std::string(key) + "'");
  return it->second;
}

Scalar golden_scalar(std::string_view key, const std::map<std::string, Scalar>& vars) {
  return evaluate_scalar(golden(key), vars);
}

LaurentVector golden_laurent(std::string_view key, Session& session, int i, const Bindings& b) {
  return evaluate(parse_literal(golden(key)), session, i, b);
}

FockVector golden_vector(std::string_view key, Session& session, int i, const Bindings& b) {
  return evaluate_vector(parse_literal(golden(key)), session, i, b);
}

}  // namespace sl2voa
