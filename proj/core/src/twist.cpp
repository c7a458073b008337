#include "sl2voa/twist.hpp"

#include <cmath>

#include "sl2voa/errors.hpp"

namespace sl2voa {

namespace {

int word_weight(const std::vector<std::pair<int, int>>& word) {
  int wt = 0;
  for (const auto& [s, m] : word) wt -= m;
  return wt;
}

int word_grade(const std::vector<std::pair<int, int>>& word) {
  int g = 0;
  for (const auto& [s, m] : word) g += (s != 0);
  return g % 2;
}

Scalar sign_of_parity(long p) { return (p % 2 == 0) ? 1 : -1; }

}  // namespace

TwistedModeIndex::TwistedModeIndex(const Scalar& v) : value(v) {
  if (is_integer(v)) sigma_grade = 0;
  else if (is_half_odd(v)) sigma_grade = 1;
  else throw ParityMismatch("twisted mode index " + to_string(v) + " is not in (1/2)Z");
}

void LaurentVector::add(const Scalar& exponent, const FockVector& v, const Scalar& c) {
  if (v.is_zero() || c == 0) return;
  auto [it, inserted] = entries_.try_emplace(exponent, FockVector(v.context()));
  it->second.add_scaled(v, c);
  if (it->second.is_zero()) entries_.erase(it);
}

FockVector LaurentVector::at(const Scalar& exponent) const {
  auto it = entries_.find(exponent);
  if (it != entries_.end()) return it->second;
  if (entries_.empty()) return FockVector();
  return FockVector(entries_.begin()->second.context());
}

TwistEngine::TwistEngine(ModeEngine& modes, Quotient& quotient) : modes_(modes), quotient_(quotient) {
  if (&quotient.space() != &modes.target()) throw ContextMismatch("quotient and mode engine disagree on the module");
}

int TwistEngine::sigma_grade(const FockVector& u) {
  const FockVector s = vacuum().sigma(u);
  if (s == u) return 0;
  if (s == -u) return 1;
  throw ParityMismatch("vector is not a sigma-eigenvector; decompose it first");
}

const LaurentVector& TwistEngine::delta_monomial(const Monomial& m) {
  if (auto it = delta_memo_.find(m); it != delta_memo_.end()) return it->second;
  FockSpace& vac = vacuum();
  const GenElem h2 = hpp();

  // exp(X) with X = sum_m c_m z^{-m} h''(m), c_m = (-1)^{m+1}/m; keyed by the power of z^{-1}.
  std::map<int, FockVector> total{{0, FockVector(vac.id(), m)}};
  std::map<int, FockVector> current = total;
  for (int order = 1; !current.empty(); ++order) {
    std::map<int, FockVector> next;
    for (const auto& [power, v] : current) {
      for (int mode = 1; mode <= v.max_degree(); ++mode) {
        FockVector x = vac.apply(h2, mode, v);
        if (x.is_zero()) continue;
        const Scalar c = make_scalar(mode % 2 == 1 ? 1 : -1, mode) / order;
        auto [it, _] = next.try_emplace(power + mode, vac.zero());
        it->second.add_scaled(x, c);
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [power, v] : next) {
      auto [it, _] = total.try_emplace(power, vac.zero());
      it->second += v;
    }
    current = std::move(next);
  }

  LaurentVector out;
  for (const auto& [power, v] : total)
    for (const auto& [mu, component] : hpp_eigendecompose(vac, v)) out.add(mu - power, component);
  return delta_memo_.emplace(m, std::move(out)).first->second;
}

LaurentVector TwistEngine::delta_apply(const FockVector& u) {
  if (u.context() != vacuum().id()) throw ContextMismatch("Delta acts on states of V(k,0)");
  LaurentVector out;
  for (const auto& [m, c] : u.terms())
    for (const auto& [q, v] : delta_monomial(m).entries()) out.add(q, v, c);
  return out;
}

void TwistEngine::check_parity(const FockVector& u, const TwistedModeIndex& n) {
  if (u.is_zero()) return;
  if (sigma_grade(u) != n.sigma_grade)
    throw ParityMismatch("mode index " + to_string(n.value) + " does not match the sigma-grade of the state");
}

FockVector TwistEngine::twisted_mode_raw(const FockVector& u, const TwistedModeIndex& n, const FockVector& w) {
  check_parity(u, n);
  FockVector out = target().zero();
  const LaurentVector expanded = delta_apply(u);
  for (const auto& [q, v] : expanded.entries()) {
    const Scalar mode = n.value + q;
    if (!is_integer(mode)) throw ParityMismatch("Delta entry z^" + to_string(q) + " gives a non-integral mode");
    out += modes_.composite_mode(v, static_cast<int>(to_long(mode)), w);
  }
  return out;
}

FockVector TwistEngine::twisted_mode(const FockVector& u, const TwistedModeIndex& n, const FockVector& w) {
  return quotient_.reduce(twisted_mode_raw(u, n, quotient_.reduce(w)));
}

FockVector TwistEngine::gen_slot_mode(int slot, const Scalar& n, const FockVector& w) {
  FockSpace& space = target();
  if (slot == 0) {
    if (!is_integer(n)) throw ParityMismatch("h' has integral twisted modes only");
    const int mode = static_cast<int>(to_long(n));
    FockVector out = space.apply(GenElem::of(Gen::hp), mode, w);
    if (mode == 0) out.add_scaled(w, make_scalar(space.level(), 2));
    return out;
  }
  if (!is_half_odd(n)) throw ParityMismatch("e' and f' have half-integral twisted modes only");
  const Scalar shifted = slot == 1 ? Scalar(n + make_scalar(1, 2)) : Scalar(n - make_scalar(1, 2));
  return space.apply(GenElem::of(symbol(Basis::primed, slot)), static_cast<int>(to_long(shifted)), w);
}

FockVector TwistEngine::twisted_gen_mode_raw(const GenElem& a, const TwistedModeIndex& n, const FockVector& w) {
  const GenElem p = convert_basis(a, Basis::primed);
  FockVector out = target().zero();
  for (int s = 0; s < 3; ++s)
    if (p.coeff(s) != 0) out.add_scaled(gen_slot_mode(s, n.value, w), p.coeff(s));
  return out;
}

FockVector TwistEngine::twisted_gen_mode(const GenElem& a, const TwistedModeIndex& n, const FockVector& w) {
  return quotient_.reduce(twisted_gen_mode_raw(a, n, quotient_.reduce(w)));
}

TwistEngine::WordSum TwistEngine::to_words(const FockVector& u) const {
  // h = e' + f', e = (h' - e' + f')/2, f = (h' + e' - f')/2 in slots (h', e', f').
  static const std::array<std::array<Scalar, 3>, 3> expand{{
      {Scalar(0), Scalar(1), Scalar(1)},
      {make_scalar(1, 2), make_scalar(-1, 2), make_scalar(1, 2)},
      {make_scalar(1, 2), make_scalar(1, 2), make_scalar(-1, 2)},
  }};
  WordSum out;
  for (const auto& [m, c] : u.terms()) {
    WordSum partial{{Word{}, c}};
    for (const auto& f : m.factors) {
      WordSum next;
      for (const auto& [w, x] : partial)
        for (int s = 0; s < 3; ++s) {
          if (expand[f.slot][s] == 0) continue;
          Word extended = w;
          extended.emplace_back(s, f.mode);
          next[extended] += x * expand[f.slot][s];
        }
      partial = std::move(next);
    }
    for (const auto& [w, x] : partial) out[w] += x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TwistEngine::WordSum TwistEngine::word_action(int slot, int mode, const Word& v) {
  // a(mode), mode >= 0, pushed to the right through the word; a(mode) 1 = 0.
  WordSum out;
  if (v.empty()) return out;
  const auto [xs, xm] = v.front();
  const Word rest(v.begin() + 1, v.end());
  for (const auto& [w, c] : word_action(slot, mode, rest)) {
    Word extended{{xs, xm}};
    extended.insert(extended.end(), w.begin(), w.end());
    out[extended] += c;
  }
  auto [c, z] = bracket_slots(slot, xs);
  if (c != 0) {
    const int combined = mode + xm;
    if (combined <= -1) {
      Word extended{{z, combined}};
      extended.insert(extended.end(), rest.begin(), rest.end());
      out[extended] += c;
    } else {
      for (const auto& [w, x] : word_action(z, combined, rest)) out[w] += c * x;
    }
  }
  if (mode + xm == 0) {
    const long form = form_slots(slot, xs);
    if (form != 0) out[rest] += Scalar(static_cast<long>(mode) * target().level() * form);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FockVector TwistEngine::iterate_vector(const Word& word, const Scalar& n, const FockVector& w) {
  FockVector out = target().zero();
  for (const auto& [m, c] : w.terms()) out.add_scaled(iterate_word(word, n, m), c);
  return out;
}

const FockVector& TwistEngine::iterate_word(const Word& word, const Scalar& n, const Monomial& w) {
  auto key = std::make_tuple(word, n, w);
  if (auto it = iterate_memo_.find(key); it != iterate_memo_.end()) return it->second;
  FockVector value = iterate_compute(word, n, w);
  return iterate_memo_.emplace(std::move(key), std::move(value)).first->second;
}

FockVector TwistEngine::iterate_compute(const Word& word, const Scalar& n, const Monomial& w) {
  FockSpace& space = target();
  const FockVector wv(space.id(), w);
  if (word.empty()) return n == -1 ? wv : space.zero();

  const auto [a, p] = word.front();
  const Word v(word.begin() + 1, word.end());
  const int r = (a != 0);
  const int s = word_grade(v);
  const Scalar r2 = make_scalar(r, 2);
  const Scalar s2 = make_scalar(s, 2);
  const Scalar base = n - make_scalar(r + s, 2);  // n' in the identity
  if (!is_integer(base)) throw ParityMismatch("twisted index " + to_string(n) + " does not match the word's grade");

  // Twisted weights on V(k,i) stay within [-i/4, 3d/2 + i/4]; a mode x_N of a
  // weight-wt state lowers them by N - wt + 1.
  const int d = w.degree();
  const Scalar ceiling = make_scalar(3 * d, 2) + make_scalar(space.top_label(), 2);
  const int wt_v = word_weight(v);

  FockVector out = space.zero();
  const long i_first = floor_to_long(ceiling + wt_v - 1 - (base + s2));
  for (long t = 0; t <= i_first; ++t) {
    const Scalar c = sign_of_parity(t) * binomial(Scalar(p), static_cast<int>(t));
    FockVector inner = iterate_word(v, base + s2 + t, w);
    if (inner.is_zero()) continue;
    out.add_scaled(gen_slot_mode(a, Scalar(p) + r2 - t, inner), c);
  }
  const long i_second = floor_to_long(ceiling - r2);
  for (long t = 0; t <= i_second; ++t) {
    const Scalar c = sign_of_parity(t) * binomial(Scalar(p), static_cast<int>(t));
    FockVector inner = gen_slot_mode(a, r2 + t, wv);
    if (inner.is_zero()) continue;
    out.add_scaled(iterate_vector(v, Scalar(p) + base + s2 - t, inner), -c * sign_of_parity(p));
  }
  if (r == 1) {
    // Correction terms sum_{t>=1} C(1/2, t) (a(p+t) v)_{n-t}.
    for (int t = 1; p + t <= wt_v; ++t) {
      const Scalar c = binomial(r2, t);
      WordSum shifted;
      if (p + t <= -1) {
        Word extended{{a, p + t}};
        extended.insert(extended.end(), v.begin(), v.end());
        shifted[extended] = 1;
      } else {
        shifted = word_action(a, p + t, v);
      }
      for (const auto& [sw, x] : shifted) out.add_scaled(iterate_word(sw, n - t, w), -c * x);
    }
  }
  return out;
}

FockVector TwistEngine::twisted_iterate_raw(const FockVector& u, const TwistedModeIndex& n, const FockVector& w) {
  if (u.context() != vacuum().id()) throw ContextMismatch("state must live in V(k,0)");
  check_parity(u, n);
  FockVector out = target().zero();
  for (const auto& [word, c] : to_words(u)) {
    // Words of the other grade sum to the zero component of u.
    if (word_grade(word) != n.sigma_grade) continue;
    out.add_scaled(iterate_vector(word, n.value, w), c);
  }
  return out;
}

FockVector TwistEngine::twisted_iterate(const FockVector& u, const TwistedModeIndex& n, const FockVector& w) {
  return quotient_.reduce(twisted_iterate_raw(u, n, quotient_.reduce(w)));
}

}  // namespace sl2voa
