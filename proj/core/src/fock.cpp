#include "sl2voa/fock.hpp"

#include <algorithm>
#include <functional>

#include "sl2voa/errors.hpp"

namespace sl2voa {

void ModuleId::validate() const {
  if (k < 3) throw OutOfRange("level k must be at least 3, got " + std::to_string(k));
  if (i < 0 || i > k)
    throw OutOfRange("top label i must lie in [0, k], got " + std::to_string(i));
}

std::string to_string(const ModuleId& id) {
  return "V(" + std::to_string(id.k) + "," + std::to_string(id.i) + ")";
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d -= f.mode;
  return d;
}

int Monomial::charge(int i) const {
  int c = i - 2 * top;
  for (const auto& f : factors) {
    if (f.slot == 1) c += 2;
    if (f.slot == 2) c -= 2;
  }
  return c;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  if (a.factors != b.factors) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  }
  return a.top < b.top;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.top) * 0x9e3779b97f4a7c15ULL;
  for (const auto& f : m.factors) {
    h ^= static_cast<std::size_t>(f.slot * 64 - f.mode) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

FockVector::FockVector(ModuleId context, Monomial m, Scalar c) : context_(context) {
  add(m, c);
}

Scalar FockVector::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void FockVector::add(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FockVector::add_scaled(const FockVector& v, const Scalar& c) {
  require_same_context(v);
  if (c == 0) return;
  for (const auto& [m, x] : v.terms_) add(m, c * x);
}

FockVector& FockVector::operator+=(const FockVector& v) {
  add_scaled(v, 1);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& v) {
  add_scaled(v, -1);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

int FockVector::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::map<int, FockVector> FockVector::by_degree() const {
  std::map<int, FockVector> out;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = out.try_emplace(m.degree(), FockVector(context_));
    it->second.add(m, c);
  }
  return out;
}

void FockVector::require_same_context(const FockVector& v) const {
  if (v.context_ != context_)
    throw ContextMismatch("vectors live in " + to_string(context_) + " and " + to_string(v.context_));
}

std::optional<int> grade(const FockVector& v) {
  if (v.is_zero()) return 0;
  const int d = v.terms().begin()->first.degree();
  for (const auto& [m, c] : v.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

FockSpace::FockSpace(ModuleId id, int degree_cap) : id_(id), degree_cap_(degree_cap) {
  id_.validate();
}

FockVector FockSpace::top(int j) const {
  if (j < 0 || j > id_.i)
    throw OutOfRange("top index " + std::to_string(j) + " outside [0, " + std::to_string(id_.i) + "]");
  return FockVector(id_, Monomial{{}, j});
}

FockVector FockSpace::vacuum() const {
  if (id_.i != 0) throw ContextMismatch("the vacuum lives in V(k,0)");
  return top(0);
}

void FockSpace::require_context(const FockVector& w) const {
  if (w.context() != id_)
    throw ContextMismatch("vector from " + to_string(w.context()) + " used in " + to_string(id_));
}

FockVector FockSpace::apply(int slot, int mode, const FockVector& w) {
  require_context(w);
  FockVector out(id_);
  for (const auto& [m, c] : w.terms()) out.add_scaled(apply_monomial(slot, mode, m), c);
  return out;
}

FockVector FockSpace::apply(const GenElem& a, int mode, const FockVector& w) {
  const GenElem chev = convert_basis(a, Basis::chevalley);
  FockVector out(id_);
  for (int s = 0; s < 3; ++s)
    if (chev.coeff(s) != 0) out.add_scaled(apply(s, mode, w), chev.coeff(s));
  return out;
}

FockVector FockSpace::canonicalize(std::span<const ModeOp> word, int top_index) {
  FockVector v = top(top_index);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
  return v;
}

std::size_t FockSpace::KeyHash::operator()(const Key& key) const noexcept {
  return MonomialHash{}(key.m) ^ (static_cast<std::size_t>(key.slot + 3 * (key.mode + 1024)) * 0x100000001b3ULL);
}

const FockVector& FockSpace::apply_monomial(int slot, int mode, const Monomial& m) {
  Key key{slot, mode, m};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  FockVector value = compute(slot, mode, m);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

FockVector FockSpace::top_action(int slot, int mode, int j) const {
  FockVector out(id_);
  if (mode >= 1) return out;
  const int i = id_.i;
  if (mode == 0) {
    switch (slot) {
      case 0:
        out.add(Monomial{{}, j}, i - 2 * j);
        break;
      case 1:
        if (j >= 1) out.add(Monomial{{}, j - 1}, i - j + 1);
        break;
      default:
        if (j < i) out.add(Monomial{{}, j + 1}, j + 1);
        break;
    }
    return out;
  }
  if (-mode > degree_cap_) throw DegreeCapExceeded("degree cap " + std::to_string(degree_cap_) + " exceeded");
  out.add(Monomial{{Factor{slot, mode}}, j}, 1);
  return out;
}

FockVector FockSpace::compute(int slot, int mode, const Monomial& m) {
  if (m.factors.empty()) return top_action(slot, mode, m.top);

  const Factor first = m.factors.front();
  const Factor incoming{slot, mode};
  if (mode <= -1 && !(first < incoming)) {
    Monomial out = m;
    out.factors.insert(out.factors.begin(), incoming);
    if (out.degree() > degree_cap_)
      throw DegreeCapExceeded("degree cap " + std::to_string(degree_cap_) + " exceeded");
    return FockVector(id_, std::move(out));
  }

  // a(n) x(m) R = x(m) a(n) R + [a, x](n + m) R + n delta_{n+m,0} k (a|x) R
  Monomial rest{{m.factors.begin() + 1, m.factors.end()}, m.top};
  FockVector inner = apply_monomial(slot, mode, rest);
  FockVector result = apply(first.slot, first.mode, inner);

  auto [c, z] = bracket_slots(slot, first.slot);
  if (c != 0) result.add_scaled(apply_monomial(z, mode + first.mode, rest), c);
  if (mode + first.mode == 0) {
    const long form = form_slots(slot, first.slot);
    if (form != 0) result.add(rest, Scalar(static_cast<long>(mode) * id_.k * form));
  }
  return result;
}

std::vector<Monomial> FockSpace::basis(int degree) const {
  std::vector<Monomial> out;
  std::vector<Factor> current;
  // Factors are emitted in canonical order; each new factor is >= the previous.
  std::function<void(int, Factor)> recurse = [&](int remaining, Factor lower) {
    if (remaining == 0) {
      for (int j = 0; j <= id_.i; ++j) out.push_back(Monomial{current, j});
      return;
    }
    for (int mode = lower.mode; mode <= -1; ++mode) {
      if (-mode > remaining) continue;
      for (int s = (mode == lower.mode ? lower.slot : 0); s < 3; ++s) {
        current.push_back(Factor{s, mode});
        recurse(remaining + mode, Factor{s, mode});
        current.pop_back();
      }
    }
  };
  recurse(degree, Factor{0, -degree});
  std::sort(out.begin(), out.end());
  return out;
}

FockVector FockSpace::eta() const {
  FockVector v(id_);
  for (int j = 0; j <= id_.i; ++j) v.add(Monomial{{}, j}, (j % 2 == 0) ? 1 : -1);
  return v;
}

std::vector<FockVector> FockSpace::primed_top_basis() {
  std::vector<FockVector> out;
  FockVector v = eta();
  const GenElem ep = GenElem::of(Gen::ep);
  for (int m = 0; m <= id_.i; ++m) {
    out.push_back(v);
    v = apply(ep, 0, v);
  }
  return out;
}

FockVector FockSpace::sigma(const FockVector& u) {
  require_context(u);
  if (id_.i != 0) throw ContextMismatch("sigma is defined on V(k,0) only");
  static constexpr int image[3] = {0, 2, 1};
  FockVector out(id_);
  for (const auto& [m, c] : u.terms()) {
    std::vector<ModeOp> word;
    Scalar sign = c;
    for (const auto& f : m.factors) {
      word.push_back(ModeOp{GenElem::of(symbol(Basis::chevalley, image[f.slot])), f.mode});
      if (f.slot == 0) sign = -sign;
    }
    out.add_scaled(canonicalize(word, 0), sign);
  }
  return out;
}

std::vector<std::pair<Scalar, FockVector>> hpp_eigendecompose(FockSpace& space, const FockVector& v) {
  std::vector<std::pair<Scalar, FockVector>> out;
  if (v.is_zero()) return out;
  const GenElem h2 = hpp();
  const int i = space.top_label();
  const int dmax = v.max_degree();

  // Eigenvalues lie in -i/4 + (1/2)Z within [-i/4 - d/2, i/4 + d/2].
  std::vector<Scalar> candidates;
  for (int t = 0; t <= i + 2 * dmax; ++t) candidates.push_back(make_scalar(-i - 2 * dmax + 2 * t, 4));

  std::vector<FockVector> powers{v};
  for (std::size_t p = 1; p < candidates.size(); ++p) powers.push_back(space.apply(h2, 0, powers.back()));

  for (const auto& mu : candidates) {
    // Lagrange projector prod_{nu != mu} (H - nu)/(mu - nu) as a polynomial in H.
    std::vector<Scalar> poly{Scalar(1)};
    for (const auto& nu : candidates) {
      if (nu == mu) continue;
      const Scalar scale = 1 / Scalar(mu - nu);
      std::vector<Scalar> next(poly.size() + 1, Scalar(0));
      for (std::size_t p = 0; p < poly.size(); ++p) {
        next[p + 1] += poly[p] * scale;
        next[p] -= poly[p] * nu * scale;
      }
      poly = std::move(next);
    }
    FockVector component(v.context());
    for (std::size_t p = 0; p < poly.size(); ++p) component.add_scaled(powers[p], poly[p]);
    if (component.is_zero()) continue;
    if (space.apply(h2, 0, component) != mu * component)
      throw Error("h''(0) eigen-decomposition failed to separate eigenvalue " + to_string(mu));
    out.emplace_back(mu, std::move(component));
  }
  return out;
}

}  // namespace sl2voa
