#include "sl2voa/classify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "sl2voa/errors.hpp"
#include "sl2voa/golden.hpp"
#include "sl2voa/literal.hpp"

namespace sl2voa {

std::string to_string(Origin o) {
  switch (o) {
    case Origin::untwisted: return "untwisted";
    case Origin::untwisted_split: return "untwisted-split";
    case Origin::twisted_split: return "twisted-split";
  }
  return "untwisted";
}

bool ClassificationTable::weights_match() const {
  for (const ClassificationRow& r : rows)
    if (!r.matches()) return false;
  return true;
}

std::string ClassificationTable::to_text() const {
  std::ostringstream os;
  os << "K0^sigma at k=" << k << ": " << rows.size() << " irreducible modules (" << untwisted_count
     << " untwisted, twisted family of " << twisted_family << ")\n";
  for (const ClassificationRow& r : rows) {
    os << "  " << r.label << "  [" << to_string(r.origin) << "]  generator " << r.generator << "  weight "
       << sl2voa::to_string(r.weight);
    if (!r.matches()) os << "  MISMATCH, closed form " << sl2voa::to_string(r.closed_form);
    os << "\n";
  }
  return os.str();
}

std::string ClassificationTable::to_json(int indent) const {
  nlohmann::ordered_json out;
  out["k"] = k;
  out["row_count"] = rows.size();
  out["untwisted_count"] = untwisted_count;
  out["twisted_family"] = twisted_family;
  out["rows"] = nlohmann::ordered_json::array();
  for (const ClassificationRow& r : rows)
    out["rows"].push_back({{"label", r.label},
                           {"origin", to_string(r.origin)},
                           {"generator", r.generator},
                           {"weight", sl2voa::to_string(r.weight)},
                           {"closed_form", sl2voa::to_string(r.closed_form)},
                           {"matches", r.matches()}});
  return out.dump(indent);
}

std::optional<Scalar> eigenvalue(const FockVector& v, const FockVector& image) {
  if (v.is_zero()) return std::nullopt;
  const auto& [m, c] = *v.terms().begin();
  Scalar lambda = image.coeff(m) / c;
  FockVector scaled = v;
  scaled *= lambda;
  if (!(scaled == image)) return std::nullopt;
  return lambda;
}

std::optional<Scalar> untwisted_weight(Session& session, int i, const FockVector& v) {
  Quotient& q = session.quotient(i);
  const FockVector& omega = session.state(StateName::omega).value;
  FockVector r = q.reduce(v);
  return eigenvalue(r, q.reduce(session.modes(i).composite_mode(omega, 1, r)));
}

std::optional<Scalar> twisted_weight(Session& session, int i, const FockVector& v) {
  TwistEngine& tw = session.twist(i);
  const FockVector& omega = session.state(StateName::omega).value;
  FockVector r = session.quotient(i).reduce(v);
  return eigenvalue(r, tw.twisted_mode(omega, TwistedModeIndex(1), r));
}

bool check_parafermion_hw(Session& session, const FockVector& v) {
  FockSpace& space = session.vacuum();
  Quotient& q = session.quotient(0);
  const int top = std::max(v.max_degree(), 0) + 1;
  for (int m = 0; m <= top; ++m)
    if (!q.is_zero_in_simple(space.apply(GenElem::of(Gen::h), m, v))) return false;
  return true;
}

CaseResult check_twisted_lowest(Session& session, int i, const FockVector& v, const std::vector<TwistedCheck>& checks,
                                const std::string& case_id) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult r;
  r.case_id = case_id;
  r.k = session.level();
  r.params = {{"i", std::to_string(i)}, {"v", render(v)}};
  bool ok = true;
  std::size_t evaluated = 0;
  std::string witness, expected;
  for (const TwistedCheck& c : checks) {
    const std::string tag = c.state + "_{" + to_string(c.index) + "}";
    if (!witness.empty()) {
      witness += "; ";
      expected += "; ";
    }
    if (c.state == "W4" || c.state == "W5") {
      witness += tag + ": unverified";
      expected += tag + ": unverified";
      continue;
    }
    auto name = parse_state_name(c.state);
    if (!name) throw UnknownName("unknown state '" + c.state + "'");
    const FockVector& u = session.state(*name).value;
    FockVector out = session.twist(i).twisted_mode(u, TwistedModeIndex(c.index), v);
    witness += tag + ": " + render(out);
    expected += tag + ": 0";
    ok = ok && out.is_zero();
    ++evaluated;
  }
  r.witness = witness;
  r.expected = expected;
  r.status = !ok ? Status::fail : evaluated == 0 ? Status::unverified : Status::pass;
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

struct Builder {
  Session& s;
  int k;
  ClassificationTable table;

  std::map<std::string, Scalar> vars(int i, int j = 0) const {
    return {{"k", Scalar(k)}, {"i", Scalar(i)}, {"j", Scalar(j)}};
  }

  void add(std::string label, Origin origin, std::string generator, std::optional<Scalar> weight,
           const std::string& closed_key, int i, int j = 0) {
    if (!weight) throw Error(label + ": generator " + generator + " is not an L(0)-eigenvector");
    table.rows.push_back({std::move(label), origin, std::move(generator), *weight,
                          golden_scalar(closed_key, vars(i, j)), closed_key});
  }

  static std::string m_label(int i, int j) { return "M^{" + std::to_string(i) + "," + std::to_string(j) + "}"; }
  static std::string v_label(int i, int j) { return "v^{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

  FockVector w3_mode(int i, int m, const FockVector& v) {
    return s.quotient(i).reduce(s.modes(i).composite_mode(s.state(StateName::w3).value, m, v));
  }

  void untwisted() {
    const int i_max = k % 2 ? (k - 1) / 2 : (k - 2) / 2;
    std::vector<std::pair<int, int>> labels;
    for (int i = 1; i <= i_max; ++i) labels.emplace_back(i, 0);
    for (int i = 3; i <= k; ++i)
      for (int j = 1; j <= (i % 2 ? (i - 1) / 2 : i / 2 - 1); ++j) labels.emplace_back(i, j);
    for (auto [i, j] : labels)
      add(m_label(i, j), Origin::untwisted, v_label(i, j), untwisted_weight(s, i, s.space(i).top(j)),
          "prop3.10-lambda", i, j);
    table.untwisted_count = labels.size();
  }

  void split(int i, int j) {
    const FockVector v = s.space(i).top(j);
    const std::string m = "(" + m_label(i, j) + ")";
    add(m + "^0", Origin::untwisted_split, v_label(i, j), untwisted_weight(s, i, v), "prop3.10-lambda", i, j);
    if (i == k && j == 0) {
      // M^{k,0} is K0 itself; the odd summand is generated by W3.
      add(m + "^1", Origin::untwisted_split, "W3", untwisted_weight(s, 0, s.state(StateName::w3).value),
          "prop3.10-split-w3", i, j);
    } else if (2 * j == i && i != k) {
      add(m + "^1", Origin::untwisted_split, "W3(1)" + v_label(i, j), untwisted_weight(s, i, w3_mode(i, 1, v)),
          "prop3.10-split-1", i, j);
    } else {
      add(m + "^1", Origin::untwisted_split, "W3(0)" + v_label(i, j), untwisted_weight(s, i, w3_mode(i, 0, v)),
          "prop3.10-split-2", i, j);
    }
  }

  void untwisted_splits() {
    for (int i = 2; i <= k; i += 2) split(i, i / 2);
    if (k % 2 == 0) split(k / 2, 0);
    split(k, 0);
  }

  void twisted() {
    const int i_max = k % 2 ? (k - 1) / 2 : k / 2;
    const Scalar half = make_scalar(1, 2);
    const FockVector& w3 = s.state(StateName::w3).value;
    for (int i = 0; i <= i_max; ++i) {
      TwistEngine& tw = s.twist(i);
      const FockVector eta = tw.eta();
      const std::string w = "W(" + std::to_string(k) + "," + std::to_string(i) + ")";
      Scalar n = 3 * half;
      std::string u1_key = "prop3.9-u1", u2_key = "prop3.9-u2";
      if (i == 0) {
        n = half;
        u2_key = "prop3.9-u2-i0";
      } else if (2 * i == k && k == 4) {
        n = -half;
        u1_key = "prop3.9-u1-k4";
        u2_key = "prop3.9-u2-k4";
      } else if (2 * i == k) {
        n = half;
        u2_key = "prop3.9-u2-half";
      }
      add(w + "^1", Origin::twisted_split, "eta", twisted_weight(s, i, eta), u1_key, i);
      add(w + "^2", Origin::twisted_split, "W3_{" + to_string(n) + "}eta",
          twisted_weight(s, i, tw.twisted_mode(w3, TwistedModeIndex(n), eta)), u2_key, i);
    }
    table.twisted_family = static_cast<std::size_t>(i_max + 1);
    if (k % 2 == 0) {
      const int i = k / 2;
      TwistEngine& tw = s.twist(i);
      const FockVector u1 = tw.twisted_gen_mode(GenElem{{Gen::e, 1}, {Gen::f, -1}}, TwistedModeIndex(-half), tw.eta());
      const std::string w = "~W(" + std::to_string(k) + "," + std::to_string(i) + ")";
      add(w + "^1", Origin::twisted_split, "(e-f)_{-1/2}eta", twisted_weight(s, i, u1), "prop3.9-t1", i);
      add(w + "^2", Origin::twisted_split, "W3_{3/2}(e-f)_{-1/2}eta",
          twisted_weight(s, i, tw.twisted_mode(w3, TwistedModeIndex(3 * half), u1)), "prop3.9-t2", i);
      ++table.twisted_family;
    }
  }
};

}  // namespace

ClassificationTable classify(int k, int max_level) {
  if (k < kMinLevel || k > max_level)
    throw OutOfRange("level " + std::to_string(k) + " outside " + std::to_string(kMinLevel) + ".." +
                     std::to_string(max_level));
  Session session(k);
  return classify(session);
}

ClassificationTable classify(Session& session) {
  Builder b{session, session.level(), {}};
  b.table.k = b.k;
  b.untwisted();
  b.untwisted_splits();
  b.twisted();
  return b.table;
}

}  // namespace sl2voa
