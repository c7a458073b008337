#include <chrono>
#include <functional>
#include <memory>

#include "sl2voa/classify.hpp"
#include "sl2voa/errors.hpp"
#include "sl2voa/golden.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/verify.hpp"

namespace sl2voa {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Outcome = std::pair<std::string, std::string>;  // witness, expected

Scalar half(long n) { return make_scalar(n, 2); }
GenElem e_minus_f() { return GenElem{{Gen::e, 1}, {Gen::f, -1}}; }

// Everything one case needs: its own session and the results collected so far.
class Ctx {
public:
  Ctx(std::string id, int k, int cap) : id_(std::move(id)), k_(k), s_(k, cap) {}

  int k() const { return k_; }
  Session& s() { return s_; }
  std::vector<CaseResult> take() { return std::move(out_); }

  void record(Params params, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult r;
    r.case_id = id_;
    r.k = k_;
    r.params = std::move(params);
    try {
      auto [witness, expected] = body();
      r.witness = std::move(witness);
      r.expected = std::move(expected);
      r.status = compare(r.witness, r.expected);
    } catch (const Error& e) {
      r.witness = std::string("error: ") + e.what();
      r.expected = "no evaluation error";
      r.status = Status::fail;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(r));
  }

  void unverified(Params params, std::string witness, std::string expected) {
    out_.push_back({id_, k_, std::move(params), Status::unverified, std::move(witness), std::move(expected), 0});
  }

  // Engines on L(k,i).
  FockVector reduce(int i, const FockVector& v) { return s_.quotient(i).reduce(v); }
  FockVector tgen(int i, const GenElem& a, const Scalar& n, const FockVector& w) {
    return s_.twist(i).twisted_gen_mode_raw(a, TwistedModeIndex(n), w);
  }
  FockVector tmode(int i, const FockVector& u, const Scalar& n, const FockVector& w) {
    return s_.twist(i).twisted_mode_raw(u, TwistedModeIndex(n), w);
  }
  FockVector mode(int i, const FockVector& u, int m, const FockVector& w) {
    return s_.modes(i).composite_mode(u, m, w);
  }
  FockVector eta(int i) { return s_.space(i).eta(); }
  FockVector ef_eta(int i) { return tgen(i, e_minus_f(), half(-1), eta(i)); }

  // Named states of V(k,0).
  FockVector state(StateName n) { return s_.state(n).value; }
  FockVector word(std::initializer_list<std::pair<int, int>> factors) {
    FockSpace& v = s_.vacuum();
    FockVector out = v.vacuum();
    for (auto it = std::rbegin(factors); it != std::rend(factors); ++it) out = v.apply(it->first, it->second, out);
    return out;
  }
  FockVector h3() { return word({{0, -3}}); }
  FockVector h1cubed() { return word({{0, -1}, {0, -1}, {0, -1}}); }
  FockVector x_state() { return word({{0, -1}, {1, -1}, {2, -1}}) + word({{0, -1}, {2, -1}, {1, -1}}); }
  FockVector y_state() { return word({{1, -2}, {2, -1}}) - word({{1, -1}, {2, -2}}); }

  Bindings bind(int i, int j = 0, std::optional<FockVector> w = std::nullopt) {
    Bindings b;
    b.vars = {{"k", Scalar(k_)}, {"i", Scalar(i)}, {"j", Scalar(j)}};
    b.operand = std::move(w);
    b.lenient_kets = true;
    return b;
  }
  std::map<std::string, Scalar> vars(int i, int j = 0) const {
    return {{"k", Scalar(k_)}, {"i", Scalar(i)}, {"j", Scalar(j)}};
  }
  std::string expected_in_l(const std::string& key, int i, const Bindings& b) {
    return render(reduce(i, golden_vector(key, s_, i, b)));
  }

  // lhs(i) == golden(key) in L(k,i).
  void display(const std::string& key, int i, const std::function<FockVector()>& lhs, Params extra = {}) {
    Params p{{"i", std::to_string(i)}};
    for (auto& e : extra) p.push_back(e);
    p.emplace_back("display", golden(key));
    record(p, [&] { return Outcome{render(reduce(i, lhs())), expected_in_l(key, i, bind(i))}; });
  }

  void display_ij(const std::string& key, int i, int j, const std::function<FockVector()>& lhs) {
    Params p{{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"display", golden(key)}};
    record(p, [&] { return Outcome{render(reduce(i, lhs())), expected_in_l(key, i, bind(i, j))}; });
  }

  // lhs(i) != 0 in L(k,i), or == 0 when `zero` is set.
  void vanishing(int i, bool zero, const std::function<FockVector()>& lhs, Params extra = {}) {
    Params p{{"i", std::to_string(i)}};
    for (auto& e : extra) p.push_back(e);
    FockVector v;
    record(p, [&] {
      v = reduce(i, lhs());
      return Outcome{v.is_zero() ? "0" : "nonzero", zero ? "0" : "nonzero"};
    });
    if (!v.is_zero()) out_.back().params.emplace_back("vector", render(v));
  }

  // u_n w == golden(key)[w] in L(k,i) for each operand w.
  void operator_identity(const std::string& key, int i, const FockVector& u, const Scalar& n,
                         const std::vector<FockVector>& operands) {
    Params p{{"i", std::to_string(i)}, {"mode", to_string(n)}};
    const Literal rhs = parse_literal(golden(key));
    std::size_t checked = 0;
    FockVector shown;
    record(p, [&] {
      Outcome last{"0", "0"};
      for (const FockVector& w : operands) {
        ++checked;
        shown = w;
        last = {render(reduce(i, tmode(i, u, n, w))), render(reduce(i, evaluate_vector(rhs, s_, i, bind(i, 0, w))))};
        if (last.first != last.second) break;
      }
      return last;
    });
    auto& params = out_.back().params;
    params.emplace_back("operands", std::to_string(operands.size()));
    params.emplace_back("checked", std::to_string(checked));
    params.emplace_back("w", render(shown));
    params.emplace_back("display", golden(key));
  }

  // Reduced monomials of degree <= 2, zero ones dropped.
  std::vector<FockVector> low_basis(int i) {
    std::vector<FockVector> out;
    FockSpace& sp = s_.space(i);
    for (int d = 0; d <= 2; ++d)
      for (const Monomial& m : sp.basis(d)) {
        FockVector w = reduce(i, FockVector(sp.id(), m));
        if (!w.is_zero()) out.push_back(std::move(w));
      }
    return out;
  }

private:
  std::string id_;
  int k_;
  Session s_;
  std::vector<CaseResult> out_;
};

bool even(int k) { return k % 2 == 0; }
bool any_k(int) { return true; }

struct Case {
  CaseInfo info;
  std::function<bool(int)> applies;
  std::function<void(Ctx&)> run;
  int cap = kDefaultDegreeCap;
};

void for_all_i(Ctx& c, const std::function<void(int)>& f) {
  for (int i = 0; i <= c.k(); ++i) f(i);
}

void lemma34(Ctx& c, const std::string& key, const FockVector& u, const std::string& part = {}) {
  Params p;
  if (!part.empty()) p.emplace_back("part", part);
  p.emplace_back("display", golden(key));
  c.record(p, [&] {
    return Outcome{render(c.s().twist(0).delta_apply(u)), render(golden_laurent(key, c.s(), 0, c.bind(0)))};
  });
}

// Twisted modes of h(-3)1 and h(-1)^3 1 as operator identities on L(k,i).
Case operator_case(const std::string& eq, const std::string& half_name, Scalar n) {
  const std::string id = eq + "-" + half_name;
  return {{id, 3, "(" + std::string(half_name == "h3" ? "h(-3)1" : "h(-1)^3 1") + ")_{" + to_string(n) +
                      "} as an operator identity on degree <= 2 vectors of every L(k,i)"},
          any_k,
          [id, half_name, n](Ctx& c) {
            const FockVector u = half_name == "h3" ? c.h3() : c.h1cubed();
            for_all_i(c, [&](int i) { c.operator_identity(id, i, u, n, c.low_basis(i)); });
          }};
}

// The same display applied to the vector the proof uses it on.
Case applied_case(const std::string& eq, Scalar n, bool on_ef_eta) {
  const std::string key = eq + "-h1cubed";
  return {{key + "-applied", 0,
           "(h(-1)^3 1)_{" + to_string(n) + "} on " + (on_ef_eta ? "(e-f)_{-1/2}eta at i=k/2" : "eta, all i")},
          on_ef_eta ? std::function<bool(int)>(even) : std::function<bool(int)>(any_k),
          [key, n, on_ef_eta](Ctx& c) {
            const FockVector u = c.h1cubed();
            auto run = [&](int i) {
              c.operator_identity(key, i, u, n, {c.reduce(i, on_ef_eta ? c.ef_eta(i) : c.eta(i))});
            };
            if (on_ef_eta) run(c.k() / 2);
            else for_all_i(c, run);
          }};
}

std::vector<Case> build_cases() {
  std::vector<Case> cases;
  auto add = [&](std::string id, int criterion, std::string summary, std::function<bool(int)> applies,
                 std::function<void(Ctx&)> run) {
    cases.push_back({{std::move(id), criterion, std::move(summary)}, std::move(applies), std::move(run)});
  };

  add("lemma2.1", 1, "omega(1) v^{i,j} = lambda_{i,j} v^{i,j}", any_k, [](Ctx& c) {
    const FockVector omega = c.state(StateName::omega);
    for_all_i(c, [&](int i) {
      for (int j = 0; j <= i; ++j)
        c.display_ij("lemma2.1", i, j, [&] { return c.mode(i, omega, 1, c.s().space(i).top(j)); });
    });
  });

  add("lemma3.4-omega", 2, "Delta(h'',z) omega", any_k,
      [](Ctx& c) { lemma34(c, "lemma3.4-omega", c.state(StateName::omega)); });
  add("lemma3.4-omega-aff", 2, "Delta(h'',z) omega_aff", any_k,
      [](Ctx& c) { lemma34(c, "lemma3.4-omega-aff", c.state(StateName::omega_aff)); });
  add("lemma3.4-hpp", 2, "Y_sigma(h'',z) = Y(h'' + (k/8) z^{-1}, z)", any_k, [](Ctx& c) {
    lemma34(c, "lemma3.4-hpp", c.s().vacuum().apply(hpp(), -1, c.s().vacuum().vacuum()));
  });
  add("lemma3.4-hp", 2, "Y_sigma(h',z) = Y(h' + (k/2) z^{-1}, z)", any_k, [](Ctx& c) {
    lemma34(c, "lemma3.4-hp", c.s().vacuum().apply(GenElem::of(Gen::hp), -1, c.s().vacuum().vacuum()));
  });
  add("lemma3.4-ep-fp", 2, "Y_sigma(e',z) = z^{1/2} Y(e',z), Y_sigma(f',z) = z^{-1/2} Y(f',z)", any_k, [](Ctx& c) {
    FockSpace& v = c.s().vacuum();
    lemma34(c, "lemma3.4-ep", v.apply(GenElem::of(Gen::ep), -1, v.vacuum()), "e'");
    lemma34(c, "lemma3.4-fp", v.apply(GenElem::of(Gen::fp), -1, v.vacuum()), "f'");
  });

  const std::vector<std::pair<std::string, Scalar>> ops = {
      {"eq3.10", half(5)}, {"eq3.13", half(3)}, {"eq3.17", half(3)}, {"eq3.22", half(1)}, {"eq3.31", half(-1)}};
  for (const auto& [eq, n] : ops) {
    cases.push_back(operator_case(eq, "h3", n));
    cases.push_back(operator_case(eq, "h1cubed", n));
  }
  cases.push_back(applied_case("eq3.10", half(5), true));
  cases.push_back(applied_case("eq3.13", half(3), true));
  cases.push_back(applied_case("eq3.17", half(3), false));
  cases.push_back(applied_case("eq3.22", half(1), false));
  cases.push_back(applied_case("eq3.31", half(-1), false));

  add("eq3.11", 0, "X_{5/2} on (e-f)_{-1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.operator_identity("eq3.11", i, c.x_state(), half(5), {c.reduce(i, c.ef_eta(i))});
  });
  add("eq3.12", 0, "Y_{5/2} as an operator identity on degree <= 2 vectors of L(k,k/2)", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.operator_identity("eq3.12", i, c.y_state(), half(5), c.low_basis(i));
  });
  add("eq3.12-applied", 0, "Y_{5/2} on (e-f)_{-1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.operator_identity("eq3.12", i, c.y_state(), half(5), {c.reduce(i, c.ef_eta(i))});
  });
  add("eq3.14", 0, "h_{1/2}(e-f)_{-1/2}eta = 2(e+f)_0 eta = 2(-i+k/2)eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    auto lhs = [&] { return c.tgen(i, GenElem::of(Gen::h), half(1), c.ef_eta(i)); };
    c.display("eq3.14", i, lhs, {{"part", "bracket"}});
    c.display("eq3.14-value", i, lhs, {{"part", "value"}});
  });
  add("lemma3.6-bracket", 0, "(e+f)_0(e-f)_{1/2}(e-f)_{-1/2}eta = -k(e+f)_0 eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("lemma3.6-bracket", i, [&] {
      return c.tgen(i, GenElem{{Gen::e, 1}, {Gen::f, 1}}, 0, c.tgen(i, e_minus_f(), half(1), c.ef_eta(i)));
    });
  });
  add("lemma3.6-omega", 6, "omega_2 (e-f)_{-1/2}eta = 0 at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.record({{"i", std::to_string(i)}}, [&] {
      auto r = check_twisted_lowest(c.s(), i, c.reduce(i, c.ef_eta(i)), {{"omega", 2}}, "lemma3.6-omega");
      return Outcome{r.witness, r.expected};
    });
  });
  add("lemma3.6-w3", 6, "W3_{5/2} (e-f)_{-1/2}eta = 0 at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.record({{"i", std::to_string(i)}}, [&] {
      auto r = check_twisted_lowest(c.s(), i, c.reduce(i, c.ef_eta(i)), {{"W3", half(5)}}, "lemma3.6-w3");
      return Outcome{r.witness, r.expected};
    });
  });
  add("lemma3.6-w4", 6, "W4_4 (e-f)_{-1/2}eta = 0 (W4 is not constructed)", even, [](Ctx& c) {
    c.unverified({{"i", std::to_string(c.k() / 2)}}, "W4_{4}: unverified", "W4_{4}: 0");
  });
  add("lemma3.6-w5", 6, "W5_{9/2} (e-f)_{-1/2}eta = 0 (W5 is not constructed)", even, [](Ctx& c) {
    c.unverified({{"i", std::to_string(c.k() / 2)}}, "W5_{9/2}: unverified", "W5_{9/2}: 0");
  });
  add("eq3.15", 0, "X_{3/2}(e-f)_{-1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("eq3.15", i, [&] { return c.tmode(i, c.x_state(), half(3), c.ef_eta(i)); });
  });
  add("eq3.16", 0, "Y_{3/2}(e-f)_{-1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("eq3.16", i, [&] { return c.tmode(i, c.y_state(), half(3), c.ef_eta(i)); });
  });
  add("lemma3.8-1-display", 0, "W3_{3/2}(e-f)_{-1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("lemma3.8-1", i, [&] { return c.tmode(i, c.state(StateName::w3), half(3), c.ef_eta(i)); });
  });
  add("lemma3.8-1", 5, "W3_{3/2}(e-f)_{-1/2}eta != 0 at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.vanishing(i, false, [&] { return c.tmode(i, c.state(StateName::w3), half(3), c.ef_eta(i)); });
  });

  add("lemma3.7", 4, "L(0) eta", any_k, [](Ctx& c) {
    for_all_i(c, [&](int i) {
      c.record({{"i", std::to_string(i)}, {"display", golden("lemma3.7")}}, [&] {
        auto w = twisted_weight(c.s(), i, c.eta(i));
        return Outcome{w ? to_string(*w) : "not an eigenvector", to_string(golden_scalar("lemma3.7", c.vars(i)))};
      });
    });
  });

  add("lemma3.8-2", 5, "W3_{3/2}eta = 0 iff i in {0, k/2}", any_k, [](Ctx& c) {
    for_all_i(c, [&](int i) {
      c.vanishing(i, i == 0 || 2 * i == c.k(), [&] { return c.tmode(i, c.state(StateName::w3), half(3), c.eta(i)); });
    });
  });
  add("eq3.18", 0, "h_{1/2}eta = 0", any_k, [](Ctx& c) {
    for_all_i(c, [&](int i) {
      c.display("eq3.18", i, [&] { return c.tgen(i, GenElem::of(Gen::h), half(1), c.eta(i)); });
    });
  });
  const std::vector<std::tuple<std::string, int, std::string, long>> on_eta = {
      {"eq3.19", 0, "X", 3}, {"eq3.20", 0, "Y", 3}, {"eq3.21", 5, "W3", 3},
      {"eq3.23", 0, "X", 1}, {"eq3.24", 0, "Y", 1}, {"eq3.25", 0, "W3", 1}};
  for (const auto& [key, criterion, state, twice_n] : on_eta) {
    add(key, criterion, state + "_{" + to_string(half(twice_n)) + "}eta", any_k,
        [key = key, state = state, n = half(twice_n)](Ctx& c) {
          const FockVector u = state == "X" ? c.x_state() : state == "Y" ? c.y_state() : c.state(StateName::w3);
          for_all_i(c, [&](int i) { c.display(key, i, [&] { return c.tmode(i, u, n, c.eta(i)); }); });
        });
  }

  add("lemma3.8-3-k4", 5, "W3_{1/2}eta = 0 at k=4, i=2", [](int k) { return k == 4; }, [](Ctx& c) {
    c.vanishing(2, true, [&] { return c.tmode(2, c.state(StateName::w3), half(1), c.eta(2)); });
  });
  add("lemma3.8-3-generic", 5, "W3_{1/2}eta != 0 at i=k/2, k != 4", [](int k) { return even(k) && k != 4; },
      [](Ctx& c) {
        const int i = c.k() / 2;
        c.vanishing(i, false, [&] { return c.tmode(i, c.state(StateName::w3), half(1), c.eta(i)); });
      });
  add("eq3.26", 0, "W3_{1/2}eta at i=k/2", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("eq3.26", i, [&] { return c.tmode(i, c.state(StateName::w3), half(1), c.eta(i)); });
  });
  add("eq3.27", 0, "W3_{1/2}eta at i=k/2 in untwisted primed modes", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display("eq3.27", i, [&] { return c.tmode(i, c.state(StateName::w3), half(1), c.eta(i)); });
  });
  const std::vector<std::pair<std::string, Gen>> contractions = {
      {"eq3.28", Gen::ep}, {"eq3.29", Gen::fp}, {"eq3.30", Gen::hp}};
  for (const auto& [key, g] : contractions) {
    add(key, 0, name(g) + "(1) W3_{1/2}eta at i=k/2", even, [key = key, g = g](Ctx& c) {
      const int i = c.k() / 2;
      c.display(key, i, [&] {
        return c.s().space(i).apply(GenElem::of(g), 1, c.tmode(i, c.state(StateName::w3), half(1), c.eta(i)));
      });
    });
  }

  auto k4 = [](int k) { return k == 4; };
  add("lemma3.8-4", 5, "W3_{-1/2}eta != 0 at k=4, i=2", k4, [](Ctx& c) {
    c.vanishing(2, false, [&] { return c.tmode(2, c.state(StateName::w3), half(-1), c.eta(2)); });
  });
  add("eq3.32", 0, "X_{-1/2}eta at k=4, i=2", k4,
      [](Ctx& c) { c.display("eq3.32", 2, [&] { return c.tmode(2, c.x_state(), half(-1), c.eta(2)); }); });
  add("eq3.33", 0, "Y_{-1/2}eta at k=4, i=2", k4,
      [](Ctx& c) { c.display("eq3.33", 2, [&] { return c.tmode(2, c.y_state(), half(-1), c.eta(2)); }); });
  add("eq3.34", 0, "W3_{-1/2}eta at k=4, i=2", k4, [](Ctx& c) {
    c.display("eq3.34", 2, [&] { return c.tmode(2, c.state(StateName::w3), half(-1), c.eta(2)); });
  });

  add("prop3.9", 7, "lowest weights of the twisted summands", any_k, [](Ctx& c) {
    const ClassificationTable t = classify(c.s());
    for (const ClassificationRow& r : t.rows) {
      if (r.origin != Origin::twisted_split) continue;
      c.record({{"label", r.label}, {"generator", r.generator}, {"display", golden(r.closed_form_name)}},
               [&] { return Outcome{to_string(r.weight), to_string(r.closed_form)}; });
    }
  });
  add("prop3.9-grade", 0, "twisted grade of the second generator above the first", any_k, [](Ctx& c) {
    const ClassificationTable t = classify(c.s());
    const ClassificationRow* first = nullptr;
    for (const ClassificationRow& r : t.rows) {
      if (r.origin != Origin::twisted_split) continue;
      if (r.label.back() == '1') {
        first = &r;
        continue;
      }
      std::string key = "prop3.9-grade";
      if (r.label[0] == '~') key += "-tilde";
      else if (r.closed_form_name == "prop3.9-u2-i0") key += "-i0";
      else if (r.closed_form_name == "prop3.9-u2-k4") key += "-k4";
      else if (r.closed_form_name == "prop3.9-u2-half") key += "-half";
      c.record({{"label", r.label}, {"generator", r.generator}}, [&] {
        return Outcome{to_string(r.weight - first->weight), to_string(golden_scalar(key, c.vars(0)))};
      });
    }
  });

  add("eq3.35", 8, "W3(1) v^{i,j}", any_k, [](Ctx& c) {
    const FockVector w3 = c.state(StateName::w3);
    for_all_i(c, [&](int i) {
      for (int j = 0; j <= i; ++j)
        c.display_ij("eq3.35", i, j, [&] { return c.mode(i, w3, 1, c.s().space(i).top(j)); });
    });
  });
  const std::vector<std::tuple<std::string, int, std::string>> stable = {
      {"eq3.36", -1, "W3(1) v^{i,i/2}"},
      {"eq3.36-e", 1, "e(1) W3(1) v^{i,i/2}"},
      {"eq3.37", 2, "f(1) W3(1) v^{i,i/2}"},
      {"eq3.38", 0, "h(1) W3(1) v^{i,i/2}"}};
  for (const auto& [key, slot, summary] : stable) {
    add(key, 8, summary, any_k, [key = key, slot = slot](Ctx& c) {
      const FockVector w3 = c.state(StateName::w3);
      for (int i = 0; i <= c.k(); i += 2) {
        const int j = i / 2;
        c.display_ij(key, i, j, [&] {
          FockVector v = c.mode(i, w3, 1, c.s().space(i).top(j));
          return slot < 0 ? v : c.s().space(i).apply(slot, 1, v);
        });
      }
    });
  }
  add("eq3.39", 8, "W3(0) v^{i,j}", any_k, [](Ctx& c) {
    const FockVector w3 = c.state(StateName::w3);
    for_all_i(c, [&](int i) {
      for (int j = 0; j <= i; ++j)
        c.display_ij("eq3.39", i, j, [&] { return c.mode(i, w3, 0, c.s().space(i).top(j)); });
    });
  });
  add("eq3.40", 8, "W3(0) v^{k,k/2} and its non-vanishing", even, [](Ctx& c) {
    const int i = c.k(), j = i / 2;
    auto lhs = [&] { return c.mode(i, c.state(StateName::w3), 0, c.s().space(i).top(j)); };
    c.display_ij("eq3.40", i, j, lhs);
    c.vanishing(i, false, lhs, {{"j", std::to_string(j)}, {"part", "nonzero"}});
  });
  add("eq3.41", 8, "W3(0) v^{k/2,0} and its non-vanishing", even, [](Ctx& c) {
    const int i = c.k() / 2;
    auto lhs = [&] { return c.mode(i, c.state(StateName::w3), 0, c.s().space(i).top(0)); };
    c.display_ij("eq3.41", i, 0, lhs);
    c.vanishing(i, false, lhs, {{"j", "0"}, {"part", "nonzero"}});
  });
  add("prop3.10-w3-1-top", 8, "W3(1) v^{k,k/2} = 0 in L(k,k)", even, [](Ctx& c) {
    const int i = c.k(), j = i / 2;
    c.display_ij("prop3.10-w3-1-top", i, j, [&] { return c.mode(i, c.state(StateName::w3), 1, c.s().space(i).top(j)); });
    c.display_ij("eq3.36-e", i, j, [&] {
      return c.s().space(i).apply(1, 1, c.mode(i, c.state(StateName::w3), 1, c.s().space(i).top(j)));
    });
  });
  add("prop3.10-w3-1-half", 8, "W3(1) v^{k/2,0} = 0", even, [](Ctx& c) {
    const int i = c.k() / 2;
    c.display_ij("prop3.10-w3-1-half", i, 0, [&] { return c.mode(i, c.state(StateName::w3), 1, c.s().space(i).top(0)); });
  });
  add("prop3.10", 0, "lowest weights of the untwisted rows", any_k, [](Ctx& c) {
    const ClassificationTable t = classify(c.s());
    for (const ClassificationRow& r : t.rows) {
      if (r.origin == Origin::twisted_split) continue;
      c.record({{"label", r.label}, {"generator", r.generator}, {"display", golden(r.closed_form_name)}},
               [&] { return Outcome{to_string(r.weight), to_string(r.closed_form)}; });
    }
  });

  add("thm3.11-count", 9, "number of irreducible K0^sigma-modules", any_k, [](Ctx& c) {
    const ClassificationTable t = classify(c.s());
    const std::string parity = even(c.k()) ? "even" : "odd";
    c.record({{"part", "rows"}, {"display", golden("thm3.11-" + parity)}}, [&] {
      return Outcome{std::to_string(t.rows.size()), to_string(golden_scalar("thm3.11-" + parity, c.vars(0)))};
    });
    c.record({{"part", "twisted family"}, {"display", golden("prop3.2-twisted-" + parity)}}, [&] {
      return Outcome{std::to_string(t.twisted_family), to_string(golden_scalar("prop3.2-twisted-" + parity, c.vars(0)))};
    });
    c.record({{"part", "untwisted"}, {"display", golden("untwisted-" + parity)}}, [&] {
      return Outcome{std::to_string(t.untwisted_count), to_string(golden_scalar("untwisted-" + parity, c.vars(0)))};
    });
  });

  return cases;
}

const std::vector<Case>& cases() {
  static const std::vector<Case> all = build_cases();
  return all;
}

const Case& find(std::string_view id) {
  for (const Case& c : cases())
    if (c.info.id == id) return c;
  throw UnknownName("unknown case '" + std::string(id) + "'");
}

}  // namespace

const std::vector<CaseInfo>& registered_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> out;
    for (const Case& c : cases()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

bool case_applies(std::string_view case_id, int k) { return find(case_id).applies(k); }

std::vector<CaseResult> verify(std::string_view case_id, int k) {
  const Case& c = find(case_id);
  if (k < kMinLevel) throw OutOfRange("level " + std::to_string(k) + " below " + std::to_string(kMinLevel));
  if (!c.applies(k)) return {};
  Ctx ctx(c.info.id, k, c.cap);
  c.run(ctx);
  return ctx.take();
}

std::vector<CaseResult> verify_all(int k) {
  std::vector<CaseResult> out;
  for (const Case& c : cases()) {
    auto r = verify(c.info.id, k);
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return out;
}

}  // namespace sl2voa
