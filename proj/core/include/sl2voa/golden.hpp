#pragma once

// Expected values from data/golden.txt, compiled into the library.

#include <map>
#include <string>
#include <string_view>

#include "sl2voa/literal.hpp"

namespace sl2voa {

const std::map<std::string, std::string>& golden_table();
// Throws UnknownName for a missing key.
const std::string& golden(std::string_view key);

Scalar golden_scalar(std::string_view key, const std::map<std::string, Scalar>& vars);
LaurentVector golden_laurent(std::string_view key, Session& session, int i, const Bindings& b = {});
FockVector golden_vector(std::string_view key, Session& session, int i, const Bindings& b = {});

}  // namespace sl2voa
