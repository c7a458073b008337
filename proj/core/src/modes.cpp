#include "sl2voa/modes.hpp"

#include <array>
#include <utility>

#include "sl2voa/errors.hpp"

namespace sl2voa {

namespace {

constexpr std::array<std::pair<StateName, std::string_view>, 13> kNames{{
    {StateName::omega_aff, "omega_aff"},
    {StateName::omega_gamma, "omega_gamma"},
    {StateName::omega, "omega"},
    {StateName::w3, "w3"},
    {StateName::xi1, "xi1"},
    {StateName::xi2, "xi2"},
    {StateName::xi3, "xi3"},
    {StateName::xi4, "xi4"},
    {StateName::xi5, "xi5"},
    {StateName::xi6, "xi6"},
    {StateName::xi7, "xi7"},
    {StateName::xi8, "xi8"},
    {StateName::xi9, "xi9"},
}};

// A PBW word x1(n1) ... xs(ns) 1 with a coefficient.
struct Term {
  Scalar coeff;
  std::vector<std::pair<Gen, int>> word;
};

FockVector combine(FockSpace& vac, const std::vector<Term>& terms) {
  FockVector out = vac.zero();
  for (const auto& t : terms) {
    std::vector<ModeOp> ops;
    for (const auto& [g, n] : t.word) ops.push_back(ModeOp{GenElem::of(g), n});
    out.add_scaled(vac.canonicalize(ops, 0), t.coeff);
  }
  return out;
}

Scalar q(long a, long b = 1) { return make_scalar(a, b); }

}  // namespace

std::string to_string(StateName name) {
  for (const auto& [n, s] : kNames)
    if (n == name) return std::string(s);
  return "?";
}

std::optional<StateName> parse_state_name(std::string_view text) {
  for (const auto& [n, s] : kNames)
    if (s == text) return n;
  if (text == "W3") return StateName::w3;
  return std::nullopt;
}

std::vector<StateName> all_state_names() {
  std::vector<StateName> out;
  for (const auto& [n, s] : kNames) out.push_back(n);
  return out;
}

NamedState build(std::string_view name, FockSpace& vacuum) {
  auto parsed = parse_state_name(name);
  if (!parsed) throw UnknownName("unknown state '" + std::string(name) + "'");
  return build(*parsed, vacuum);
}

NamedState build(StateName name, FockSpace& vac) {
  if (vac.top_label() != 0) throw ContextMismatch("named states live in V(k,0)");
  const long k = vac.level();
  using enum Gen;
  const Scalar half = q(1, 2);
  switch (name) {
    case StateName::omega_aff: {
      FockVector v = combine(vac, {{-1, {{h, -2}}}, {half, {{h, -1}, {h, -1}}}, {2, {{e, -1}, {f, -1}}}});
      return {name, q(1, 2 * (k + 2)) * v, q(3 * k, k + 2)};
    }
    case StateName::omega_gamma:
      return {name, combine(vac, {{q(1, 4 * k), {{h, -1}, {h, -1}}}}), Scalar(1)};
    case StateName::omega: {
      FockVector v = build(StateName::omega_aff, vac).value - build(StateName::omega_gamma, vac).value;
      return {name, v, q(2 * (k - 1), k + 2)};
    }
    case StateName::w3:
      return {name,
              combine(vac, {{k * k, {{h, -3}}},
                            {3 * k, {{h, -2}, {h, -1}}},
                            {2, {{h, -1}, {h, -1}, {h, -1}}},
                            {-6 * k, {{h, -1}, {e, -1}, {f, -1}}},
                            {3 * k * k, {{e, -2}, {f, -1}}},
                            {-3 * k * k, {{e, -1}, {f, -2}}}}),
              std::nullopt};
    case StateName::xi1:
      return {name, combine(vac, {{1, {{e, -2}}}, {1, {{f, -2}}}}), std::nullopt};
    case StateName::xi2:
      return {name, combine(vac, {{-half, {{h, -1}, {h, -1}}}, {1, {{e, -1}, {e, -1}}}, {1, {{f, -1}, {f, -1}}}}),
              std::nullopt};
    case StateName::xi3:
      return {name,
              combine(vac, {{-half, {{h, -2}}}, {q(1, 4), {{h, -1}, {h, -1}}}, {1, {{e, -1}, {f, -1}}}}),
              std::nullopt};
    case StateName::xi4:
      return {name,
              combine(vac, {{-half, {{h, -2}}},
                            {-1, {{e, -2}}},
                            {-1, {{f, -2}}},
                            {-half, {{h, -1}, {h, -1}}},
                            {-half, {{e, -1}, {e, -1}}},
                            {-half, {{f, -1}, {f, -1}}},
                            {1, {{h, -1}, {e, -1}}},
                            {-1, {{h, -1}, {f, -1}}},
                            {1, {{e, -1}, {f, -1}}}}),
              std::nullopt};
    case StateName::xi5:
      return {name,
              combine(vac, {{-half, {{h, -2}}},
                            {1, {{e, -2}}},
                            {1, {{f, -2}}},
                            {-half, {{h, -1}, {h, -1}}},
                            {-half, {{e, -1}, {e, -1}}},
                            {-half, {{f, -1}, {f, -1}}},
                            {-1, {{h, -1}, {e, -1}}},
                            {1, {{h, -1}, {f, -1}}},
                            {1, {{e, -1}, {f, -1}}}}),
              std::nullopt};
    case StateName::xi6:
      return {name, combine(vac, {{1, {{h, -2}}}, {-1, {{e, -2}}}, {1, {{f, -2}}}}), std::nullopt};
    case StateName::xi7:
      return {name,
              combine(vac, {{-1, {{h, -2}}},
                            {-1, {{e, -1}, {e, -1}}},
                            {1, {{f, -1}, {f, -1}}},
                            {1, {{h, -1}, {e, -1}}},
                            {1, {{h, -1}, {f, -1}}}}),
              std::nullopt};
    case StateName::xi8:
      return {name, combine(vac, {{-1, {{h, -2}}}, {-1, {{e, -2}}}, {1, {{f, -2}}}}), std::nullopt};
    case StateName::xi9:
      return {name,
              combine(vac, {{1, {{h, -2}}},
                            {1, {{e, -1}, {e, -1}}},
                            {-1, {{f, -1}, {f, -1}}},
                            {1, {{h, -1}, {e, -1}}},
                            {1, {{h, -1}, {f, -1}}}}),
              std::nullopt};
  }
  throw UnknownName("unknown state");
}

ModeEngine::ModeEngine(FockSpace& vacuum, FockSpace& target) : vacuum_(vacuum), target_(target) {
  if (vacuum.top_label() != 0 || vacuum.level() != target.level())
    throw ContextMismatch("mode engine needs V(k,0) and a V(k,i) at the same level");
}

FockVector ModeEngine::apply_mode(const GenElem& a, int m, const FockVector& w) {
  return target_.apply(a, m, w);
}

std::size_t ModeEngine::KeyHash::operator()(const Key& key) const noexcept {
  return MonomialHash{}(key.u) * 31 + MonomialHash{}(key.w) * 1000003 + static_cast<std::size_t>(key.m + 4096);
}

FockVector ModeEngine::composite_mode(const FockVector& u, int m, const FockVector& w) {
  if (u.context() != vacuum_.id()) throw ContextMismatch("state must live in V(k,0)");
  if (w.context() != target_.id()) throw ContextMismatch("vector must live in " + to_string(target_.id()));
  FockVector out = target_.zero();
  for (const auto& [um, uc] : u.terms())
    for (const auto& [wm, wc] : w.terms()) out.add_scaled(monomial_mode(um, m, wm), uc * wc);
  return out;
}

const FockVector& ModeEngine::monomial_mode(const Monomial& u, int m, const Monomial& w) {
  Key key{u, m, w};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  FockVector value = compute(u, m, w);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

FockVector ModeEngine::compute(const Monomial& u, int m, const Monomial& w) {
  FockVector out = target_.zero();
  const FockVector wv(target_.id(), w);
  if (u.factors.empty()) {
    if (m == -1) out = wv;
    return out;
  }
  const Factor a = u.factors.front();
  const Monomial v{{u.factors.begin() + 1, u.factors.end()}, 0};
  const int p = a.mode;
  const int dw = w.degree();
  const int wt_v = v.degree();
  const Scalar parity_p = (p % 2 == 0) ? 1 : -1;

  // First sum: v(m+j) vanishes on w once m + j > dw + wt_v - 1.
  const int j_first = dw + wt_v - 1 - m;
  for (int j = 0; j <= j_first; ++j) {
    const Scalar c = ((j % 2 == 0) ? 1 : -1) * binomial(Scalar(p), j);
    FockVector inner = monomial_mode(v, m + j, w);
    if (inner.is_zero()) continue;
    out.add_scaled(target_.apply(a.slot, p - j, inner), c);
  }
  // Second sum: a(j) kills w once j > dw.
  for (int j = 0; j <= dw; ++j) {
    const Scalar c = ((j % 2 == 0) ? 1 : -1) * binomial(Scalar(p), j);
    FockVector inner = target_.apply(a.slot, j, wv);
    if (inner.is_zero()) continue;
    FockVector outer = composite_mode(FockVector(vacuum_.id(), v), p + m - j, inner);
    out.add_scaled(outer, -c * parity_p);
  }
  return out;
}

}  // namespace sl2voa
