#pragma once

// Irreducible modules of the sigma-fixed parafermion subalgebra K0^sigma:
// lowest-weight certification and the classification table.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2voa/report.hpp"
#include "sl2voa/session.hpp"

namespace sl2voa {

inline constexpr int kMinLevel = 3;
inline constexpr int kMaxLevel = 8;

enum class Origin {
  untwisted,        // a K0-module that is not sigma-stable
  untwisted_split,  // a summand of a sigma-stable K0-module
  twisted_split,    // a summand of a sigma-twisted K0-module
};

std::string to_string(Origin o);

struct ClassificationRow {
  std::string label;
  Origin origin = Origin::untwisted;
  std::string generator;
  Scalar weight;                 // computed from mode actions
  Scalar closed_form;            // the formula the row is checked against
  std::string closed_form_name;  // its golden key
  bool matches() const { return weight == closed_form; }
};

struct ClassificationTable {
  int k = 0;
  std::vector<ClassificationRow> rows;
  std::size_t untwisted_count = 0;  // rows of origin untwisted
  std::size_t twisted_family = 0;   // twisted modules W(k,i) and its tilde partner

  bool weights_match() const;
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

// Throws OutOfRange unless kMinLevel <= k <= max_level.
ClassificationTable classify(int k, int max_level = kMaxLevel);
ClassificationTable classify(Session& session);

// lambda with image == lambda * v, for reduced v != 0; nullopt otherwise.
std::optional<Scalar> eigenvalue(const FockVector& v, const FockVector& image);

// L(0) eigenvalue of v in L(k,i) (untwisted) or in the twisted module on L(k,i).
std::optional<Scalar> untwisted_weight(Session& session, int i, const FockVector& v);
std::optional<Scalar> twisted_weight(Session& session, int i, const FockVector& v);

// h(m) v = 0 in L(k,0) for 0 <= m <= deg(v) + 1.
bool check_parafermion_hw(Session& session, const FockVector& v);

// Each check (state, index) asks u_index v = 0 in the twisted module on L(k,i).
// State names are those of parse_state_name; W4 and W5 are reported unverified.
struct TwistedCheck {
  std::string state;
  Scalar index;
};
CaseResult check_twisted_lowest(Session& session, int i, const FockVector& v,
                                const std::vector<TwistedCheck>& checks,
                                const std::string& case_id = "twisted-lowest");

}  // namespace sl2voa
