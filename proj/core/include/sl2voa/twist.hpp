#pragma once

// sigma-twisted modes on V(k,i) and its simple quotient L(k,i).
//
// Delta route: Y_sigma(u, z) = Y(Delta(h'', z) u, z) with
//   Delta(h'', z) = z^{h''(0)} exp( sum_{m>=1} h''(m) / (-m) (-z)^{-m} ),
// so u_n = sum_q (q-entry of Delta u)(n + q).
//
// Iterate route: the twisted iterate identity with T = 2, applied to u
// written as words in the sigma-eigenbasis {h', e', f'}, using only the
// generator table h'_n = h'(n) + (k/2) delta_{n,0}, e'_n = e'(n + 1/2),
// f'_n = f'(n - 1/2).

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "sl2voa/fock.hpp"
#include "sl2voa/modes.hpp"
#include "sl2voa/quotient.hpp"

namespace sl2voa {

struct TwistedModeIndex {
  Scalar value;
  int sigma_grade = 0;

  // Grade follows from the denominator (1 -> 0, 2 -> 1); others throw.
  explicit TwistedModeIndex(const Scalar& v);
};

class LaurentVector {
public:
  using Entries = std::map<Scalar, FockVector>;

  LaurentVector() = default;
  void add(const Scalar& exponent, const FockVector& v, const Scalar& c = 1);
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  FockVector at(const Scalar& exponent) const;

  friend bool operator==(const LaurentVector&, const LaurentVector&) = default;

private:
  Entries entries_;
};

class TwistEngine {
public:
  TwistEngine(ModeEngine& modes, Quotient& quotient);

  ModeEngine& modes() { return modes_; }
  Quotient& quotient() { return quotient_; }
  FockSpace& target() { return modes_.target(); }
  FockSpace& vacuum() { return modes_.vacuum(); }

  // 0 if sigma fixes u, 1 if it negates u; otherwise ParityMismatch.
  int sigma_grade(const FockVector& u);
  LaurentVector delta_apply(const FockVector& u);

  FockVector eta() { return target().eta(); }

  // Delta route on V(k,i); the reduced variants return L(k,i) representatives.
  FockVector twisted_mode_raw(const FockVector& u, const TwistedModeIndex& n, const FockVector& w);
  FockVector twisted_mode(const FockVector& u, const TwistedModeIndex& n, const FockVector& w);

  FockVector twisted_gen_mode_raw(const GenElem& a, const TwistedModeIndex& n, const FockVector& w);
  FockVector twisted_gen_mode(const GenElem& a, const TwistedModeIndex& n, const FockVector& w);

  FockVector twisted_iterate_raw(const FockVector& u, const TwistedModeIndex& n, const FockVector& w);
  FockVector twisted_iterate(const FockVector& u, const TwistedModeIndex& n, const FockVector& w);

private:
  // Primed word x1(n1) ... xs(ns) 1 (slot 0 = h', 1 = e', 2 = f'); not ordered.
  using Word = std::vector<std::pair<int, int>>;
  using WordSum = std::map<Word, Scalar>;

  void check_parity(const FockVector& u, const TwistedModeIndex& n);
  const LaurentVector& delta_monomial(const Monomial& m);
  WordSum to_words(const FockVector& u) const;
  WordSum word_action(int slot, int mode, const Word& v);
  FockVector gen_slot_mode(int slot, const Scalar& n, const FockVector& w);
  const FockVector& iterate_word(const Word& word, const Scalar& n, const Monomial& w);
  FockVector iterate_compute(const Word& word, const Scalar& n, const Monomial& w);
  FockVector iterate_vector(const Word& word, const Scalar& n, const FockVector& w);

  ModeEngine& modes_;
  Quotient& quotient_;
  std::map<Monomial, LaurentVector> delta_memo_;
  std::map<std::tuple<Word, Scalar, Monomial>, FockVector> iterate_memo_;
};

}  // namespace sl2voa
