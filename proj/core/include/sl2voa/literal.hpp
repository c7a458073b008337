#pragma once

// Text form of vectors.
//
//   expr   := "0" | ["+"|"-"] term (("+"|"-") term)*
//   term   := prefix* op* ket
//   prefix := rational ["*"] | "{" arith "}" ["*"] | "z^{" arith "}" ["*"]
//   op     := gen "(" int ")"            untwisted generator mode
//           | gen "_{" arith "}"         twisted generator mode
//           | state "(" int ")"          untwisted mode of a state of V(k,0)
//           | state "_{" arith "}"       twisted mode of a state
//           | "(" word (("+"|"-") word)* ")"   word := prefix* op*; any op may take "^" int
//   gen    := h | e | f | h' | e' | f' | h'' | "(" linear combination ")"
//   state  := omega | omega_aff | omega_gamma | W3 | xi1..xi9 | "[" expr "]"
//   ket    := "|" i "," j ">" | "|eta>" | "|w>" | "|" state ">"
//   arith  := rationals, variables k i j, + - * / ^ and parentheses; juxtaposition multiplies
//
// Operators act right to left. The renderer emits only rational prefixes,
// z-powers, canonical untwisted factors and "|i,j>" kets.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "sl2voa/session.hpp"

namespace sl2voa {

struct Bindings {
  std::map<std::string, Scalar> vars;  // k and i are bound automatically
  std::optional<FockVector> operand;   // the vector named by |w>
  bool lenient_kets = false;           // out-of-range |i,j> evaluates to 0
};

class Literal {
public:
  struct Node;
  explicit Literal(std::shared_ptr<const Node> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}
  const Node& root() const { return *root_; }
  const std::string& text() const { return text_; }

private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Throws ParseError carrying the offending position.
Literal parse_literal(std::string_view text);

LaurentVector evaluate(const Literal& lit, Session& session, int i, const Bindings& b = {});
// As above; z-powers other than z^0 are an error.
FockVector evaluate_vector(const Literal& lit, Session& session, int i, const Bindings& b = {});

FockVector parse_vector_literal(std::string_view text, Session& session, int i);

Scalar evaluate_scalar(std::string_view arith, const std::map<std::string, Scalar>& vars);

std::string render(const FockVector& v);
std::string render(const LaurentVector& v);

}  // namespace sl2voa
