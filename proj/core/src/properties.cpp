#include "sl2voa/properties.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "sl2voa/classify.hpp"
#include "sl2voa/errors.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/session.hpp"

namespace sl2voa {

namespace {

class Rng {
public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Scalar coeff() {
    int p = 0;
    while (p == 0) p = uniform(-4, 4);
    return make_scalar(p, uniform(1, 3));
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  // A few monomials of one degree with random coefficients.
  FockVector homogeneous(FockSpace& space, int degree) {
    const auto basis = space.basis(degree);
    FockVector v = space.zero();
    const int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) v.add(pick(basis), coeff());
    return v;
  }
  FockVector vector(FockSpace& space, int max_degree) {
    FockVector v = space.zero();
    const int parts = uniform(1, 2);
    for (int t = 0; t < parts; ++t) v += homogeneous(space, uniform(0, max_degree));
    return v;
  }
  GenElem gen() {
    if (uniform(0, 2) == 0) return GenElem::of(symbol(Basis::primed, uniform(0, 2)), coeff());
    GenElem a;
    for (int s = 0; s < 3; ++s)
      if (uniform(0, 1)) a += GenElem::of(symbol(Basis::chevalley, s), coeff());
    return a.is_zero() ? GenElem::of(Gen::e) : a;
  }

private:
  std::mt19937 gen_;
};

struct Outcome {
  bool passed = true;
  std::size_t samples = 0;
  std::string detail;

  // Records one sample; keeps the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++samples;
    if (!ok && passed) {
      passed = false;
      detail = describe();
    }
  }
};

using Runner = std::function<Outcome(int, const PropertyOptions&)>;

Outcome commutator_law(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed);
  Outcome out;
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    FockSpace& sp = s.space(i);
    const GenElem a = rng.gen(), b = rng.gen();
    const int m = rng.uniform(-2, 2), n = rng.uniform(-2, 2);
    const FockVector w = rng.vector(sp, 2);
    FockVector lhs = sp.apply(a, m, sp.apply(b, n, w)) - sp.apply(b, n, sp.apply(a, m, w));
    FockVector rhs = sp.zero();
    const GenElem ac = convert_basis(a, Basis::chevalley), bc = convert_basis(b, Basis::chevalley);
    const GenElem ab = bracket(ac, bc);
    if (!ab.is_zero()) rhs = sp.apply(ab, m + n, w);
    if (m + n == 0) rhs.add_scaled(w, Scalar(m * k) * invariant_form(ac, bc));
    out.check(lhs == rhs, [&] {
      return "[" + a.to_string() + "(" + std::to_string(m) + ")," + b.to_string() + "(" + std::to_string(n) +
             ")] on " + render(w);
    });
  }
  return out;
}

Outcome virasoro(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed + 1);
  Outcome out;
  const std::vector<std::pair<StateName, Scalar>> states = {
      {StateName::omega_aff, Scalar(3 * k) / (k + 2)},
      {StateName::omega_gamma, Scalar(1)},
      {StateName::omega, Scalar(2 * (k - 1)) / (k + 2)}};
  for (const auto& [name, c] : states) {
    const NamedState& st = s.state(name);
    out.check(st.central_charge && *st.central_charge == c,
              [&] { return to_string(name) + ": central charge " + (st.central_charge ? to_string(*st.central_charge) : "none"); });
    for (std::size_t t = 0; t < o.samples / 3 + 1; ++t) {
      const int i = rng.uniform(0, k);
      ModeEngine& me = s.modes(i);
      const FockVector w = rng.vector(s.space(i), 1);
      const int m = rng.uniform(-2, 2), n = rng.uniform(-2, 2);
      auto L = [&](int p, const FockVector& x) { return me.composite_mode(st.value, p + 1, x); };
      FockVector lhs = L(m, L(n, w)) - L(n, L(m, w));
      FockVector rhs = Scalar(m - n) * L(m + n, w);
      if (m + n == 0) rhs.add_scaled(w, Scalar(m * m * m - m) / 12 * c);
      out.check(lhs == rhs, [&] {
        return to_string(name) + ": [L(" + std::to_string(m) + "),L(" + std::to_string(n) + ")] on " + render(w);
      });
    }
  }
  return out;
}

Outcome route_agreement(int k, const PropertyOptions& o) {
  Session s(k, o.route_degree_cap);
  Rng rng(o.seed + 2);
  Outcome out;
  FockSpace& vac = s.vacuum();
  std::vector<FockVector> states;
  for (StateName n : all_state_names()) states.push_back(s.state(n).value);
  for (Gen g : {Gen::hp, Gen::ep, Gen::fp}) states.push_back(vac.apply(GenElem::of(g), -1, vac.vacuum()));
  for (std::size_t t = 0; t < o.route_samples; ++t) {
    const int i = rng.uniform(0, k);
    TwistEngine& tw = s.twist(i);
    const FockVector& u = rng.pick(states);
    const int grade = tw.sigma_grade(u);
    const Scalar n = make_scalar(2 * rng.uniform(grade ? -3 : -2, 2) + grade, 2);
    const FockVector w = s.quotient(i).reduce(rng.vector(s.space(i), 2));
    const TwistedModeIndex idx(n);
    const FockVector delta = tw.twisted_mode_raw(u, idx, w);
    const FockVector iterate = tw.twisted_iterate_raw(u, idx, w);
    out.check(delta == iterate, [&] {
      return "u=" + render(u) + " n=" + to_string(n) + " w=" + render(w) + ": " + render(delta) + " vs " +
             render(iterate);
    });
  }
  return out;
}

Outcome generator_table(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed + 3);
  Outcome out;
  FockSpace& vac = s.vacuum();
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    const Gen g = rng.pick(std::vector<Gen>{Gen::hp, Gen::ep, Gen::fp});
    const Scalar n = make_scalar(2 * rng.uniform(-2, 2) + (g == Gen::hp ? 0 : 1), 2);
    const FockVector w = rng.vector(s.space(i), 2);
    TwistEngine& tw = s.twist(i);
    const FockVector table = tw.twisted_gen_mode_raw(GenElem::of(g), TwistedModeIndex(n), w);
    const FockVector delta =
        tw.twisted_mode_raw(vac.apply(GenElem::of(g), -1, vac.vacuum()), TwistedModeIndex(n), w);
    out.check(table == delta, [&] { return name(g) + "_{" + to_string(n) + "} on " + render(w); });
  }
  return out;
}

std::vector<FockVector> twisted_samples_states(Session& s) {
  FockSpace& vac = s.vacuum();
  std::vector<FockVector> out = {s.state(StateName::omega).value};
  for (Gen g : {Gen::hp, Gen::ep, Gen::fp}) out.push_back(vac.apply(GenElem::of(g), -1, vac.vacuum()));
  return out;
}

Outcome twisted_commutator(int k, const PropertyOptions& o) {
  Session s(k, o.route_degree_cap);
  Rng rng(o.seed + 6);
  Outcome out;
  const std::vector<FockVector> states = twisted_samples_states(s);
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    TwistEngine& tw = s.twist(i);
    const FockVector& u = rng.pick(states);
    const FockVector& v = rng.pick(states);
    const int r = tw.sigma_grade(u), q = tw.sigma_grade(v);
    const Scalar p = make_scalar(2 * rng.uniform(-1, 1) + r, 2);
    const Scalar n = make_scalar(2 * rng.uniform(-1, 1) + q, 2);
    const FockVector w = s.quotient(i).reduce(rng.vector(s.space(i), 1));
    const TwistedModeIndex pi(p), ni(n);
    FockVector lhs = tw.twisted_mode_raw(u, pi, tw.twisted_mode_raw(v, ni, w)) -
                     tw.twisted_mode_raw(v, ni, tw.twisted_mode_raw(u, pi, w));
    FockVector rhs = s.space(i).zero();
    for (int j = 0;; ++j) {
      const FockVector uv = s.modes(0).composite_mode(u, j, v);
      if (uv.is_zero() && j > 0 && v.max_degree() + u.max_degree() - j - 1 < 0) break;
      if (!uv.is_zero()) rhs.add_scaled(tw.twisted_mode_raw(uv, TwistedModeIndex(p + n - j), w), binomial(p, j));
    }
    lhs = s.quotient(i).reduce(lhs);
    rhs = s.quotient(i).reduce(rhs);
    out.check(lhs == rhs, [&] {
      return "[u_{" + to_string(p) + "}, v_{" + to_string(n) + "}] with u=" + render(u) + " v=" + render(v) +
             " on " + render(w);
    });
  }
  return out;
}

// Only modes of parafermion states are graded by the parafermion L(0).
Outcome twisted_grading(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed + 7);
  Outcome out;
  const std::vector<FockVector> states = {s.state(StateName::omega).value, s.state(StateName::w3).value};
  const std::vector<int> weights = {2, 3};
  auto random_mode = [&](TwistEngine& tw, std::size_t which, int lo, int hi) {
    return make_scalar(2 * rng.uniform(lo, hi) + tw.sigma_grade(states[which]), 2);
  };
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    TwistEngine& tw = s.twist(i);
    FockVector w = tw.eta();
    if (rng.uniform(0, 1) == 1) {
      const std::size_t first = static_cast<std::size_t>(rng.uniform(0, 1));
      w = tw.twisted_mode(states[first], TwistedModeIndex(random_mode(tw, first, -1, 1)), w);
    }
    const auto lw = twisted_weight(s, i, w);
    if (!lw) continue;
    const std::size_t which = static_cast<std::size_t>(rng.uniform(0, 1));
    const Scalar n = random_mode(tw, which, -1, 2);
    const Scalar want = *lw + weights[which] - n - 1;
    if (want - *twisted_weight(s, i, tw.eta()) > 2) continue;
    const FockVector x = tw.twisted_mode(states[which], TwistedModeIndex(n), w);
    if (x.is_zero()) continue;
    const auto lx = twisted_weight(s, i, x);
    out.check(lx && *lx == want, [&] {
      return "u_{" + to_string(n) + "} on " + render(w) + ": weight " + (lx ? to_string(*lx) : "none") +
             ", expected " + to_string(want);
    });
  }
  return out;
}

Outcome gram_contravariance(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed + 4);
  Outcome out;
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    FockSpace& sp = s.space(i);
    Quotient& q = s.quotient(i);
    const int slot = rng.uniform(0, 2);
    const int d = rng.uniform(0, 2);
    const int n = rng.uniform(-2, d);
    const FockVector u = rng.homogeneous(sp, d);
    const FockVector v = rng.homogeneous(sp, d - n);
    const Scalar lhs = q.pairing(sp.apply(slot, n, u), v);
    const Scalar rhs = q.pairing(u, sp.apply(adjoint(slot, n), v));
    const FockVector v2 = rng.homogeneous(sp, d);
    out.check(q.pairing(u, v2) == q.pairing(v2, u), [&] { return "pairing not symmetric on " + render(u); });
    out.check(lhs == rhs, [&] {
      return "slot " + std::to_string(slot) + " mode " + std::to_string(n) + ": " + to_string(lhs) + " vs " +
             to_string(rhs);
    });
  }
  for (int i = 0; i <= k; ++i)
    for (int d = 0; d <= 3; ++d) {
      const GramBlock g = s.quotient(i).gram_block(d);
      bool symmetric = true;
      for (std::size_t r = 0; r < g.matrix.size(); ++r)
        for (std::size_t c = 0; c < r; ++c) symmetric = symmetric && g.matrix[r][c] == g.matrix[c][r];
      out.check(symmetric, [&] { return "Gram block i=" + std::to_string(i) + " d=" + std::to_string(d) + " not symmetric"; });
    }
  return out;
}

Outcome radical_closure(int k, const PropertyOptions&) {
  Session s(k);
  Outcome out;
  for (int i = 0; i <= k; ++i) {
    FockSpace& sp = s.space(i);
    Quotient& q = s.quotient(i);
    for (int d = 0; d <= 3; ++d)
      for (const FockVector& r : q.radical_basis(d))
        for (int slot = 0; slot < 3; ++slot)
          for (int m = -1; m <= d; ++m) {
            const FockVector image = sp.apply(slot, m, r);
            out.check(q.reduce(image).is_zero(), [&] {
              return std::string(1, "hef"[slot]) + "(" + std::to_string(m) + ") on radical vector " + render(r);
            });
          }
  }
  return out;
}

Outcome singular_vector(int k, const PropertyOptions&) {
  Session s(k);
  Outcome out;
  for (int i = 0; i <= k; ++i) {
    const int power = k - i + 1;
    if (power > s.degree_cap()) continue;
    FockSpace& sp = s.space(i);
    FockVector v = sp.top(0);
    for (int p = 0; p < power; ++p) v = sp.apply(1, -1, v);
    out.check(!v.is_zero() && s.quotient(i).is_zero_in_simple(v),
              [&] { return "e(-1)^" + std::to_string(power) + " v^{" + std::to_string(i) + ",0}"; });
    // highest-weight certificate: a(n) v = 0 for n >= 1 and e(0) v = 0
    for (int slot = 0; slot < 3; ++slot)
      for (int n = 1; n <= power; ++n)
        out.check(sp.apply(slot, n, v).is_zero(), [&] {
          return std::string(1, "hef"[slot]) + "(" + std::to_string(n) + ") on e(-1)^" + std::to_string(power) +
                 " v^{" + std::to_string(i) + ",0}";
        });
    out.check(sp.apply(1, 0, v).is_zero(), [&] { return "e(0) on the singular vector"; });
  }
  return out;
}

Outcome parser_round_trip(int k, const PropertyOptions& o) {
  Session s(k);
  Rng rng(o.seed + 5);
  Outcome out;
  for (std::size_t t = 0; t < o.samples; ++t) {
    const int i = rng.uniform(0, k);
    const FockVector v = rng.vector(s.space(i), 3);
    const std::string text = render(v);
    out.check(parse_vector_literal(text, s, i) == v, [&] { return text; });
  }
  return out;
}

Outcome hpp_omega(int k, const PropertyOptions&) {
  Session s(k);
  Outcome out;
  FockSpace& vac = s.vacuum();
  const FockVector& omega = s.state(StateName::omega).value;
  const FockVector once = vac.apply(hpp(), 1, omega);
  const FockVector twice = vac.apply(hpp(), 1, once);
  out.check(once == Scalar(k - 1) / k * vac.apply(hpp(), -1, vac.vacuum()), [&] { return "h''(1)omega = " + render(once); });
  out.check(twice == Scalar(k - 1) / 8 * vac.vacuum(), [&] { return "h''(1)^2 omega = " + render(twice); });
  return out;
}

Outcome commutant(int k, const PropertyOptions&) {
  Session s(k);
  Outcome out;
  FockSpace& vac = s.vacuum();
  out.check(check_parafermion_hw(s, s.state(StateName::omega).value), [] { return "omega rejected"; });
  out.check(check_parafermion_hw(s, s.state(StateName::w3).value), [] { return "W3 rejected"; });
  out.check(!check_parafermion_hw(s, vac.apply(0, -1, vac.vacuum())), [] { return "h(-1)1 accepted"; });
  return out;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> all = {
      {"commutator-law", commutator_law},
      {"virasoro", virasoro},
      {"route-agreement", route_agreement},
      {"generator-table", generator_table},
      {"twisted-commutator", twisted_commutator},
      {"twisted-grading", twisted_grading},
      {"gram-contravariance", gram_contravariance},
      {"radical-closure", radical_closure},
      {"singular-vector", singular_vector},
      {"parser-round-trip", parser_round_trip},
      {"hpp-omega", hpp_omega},
      {"commutant", commutant},
  };
  return all;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, run] : registry()) out.push_back(name);
  return out;
}

PropertyResult run_property(const std::string& name, int k, const PropertyOptions& opts) {
  for (const auto& [n, run] : registry()) {
    if (n != name) continue;
    const auto start = std::chrono::steady_clock::now();
    PropertyResult r;
    r.name = name;
    r.k = k;
    try {
      Outcome o = run(k, opts);
      r.passed = o.passed;
      r.samples = o.samples;
      r.detail = o.passed ? std::to_string(o.samples) + " samples" : o.detail;
    } catch (const Error& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw UnknownName("unknown property '" + name + "'");
}

std::vector<PropertyResult> run_properties(int k, const PropertyOptions& opts) {
  std::vector<PropertyResult> out;
  for (const auto& [name, run] : registry()) out.push_back(run_property(name, k, opts));
  return out;
}

}  // namespace sl2voa
