#pragma once

// PBW model of the generalized Verma module V(k,i): canonical monomials of
// creation modes applied to a top-level vector v^{i,j}, normal ordering via
// the affine commutator, grading, and the h''(0) eigen-decomposition.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sl2voa/algebra.hpp"
#include "sl2voa/scalar.hpp"

namespace sl2voa {

inline constexpr int kDefaultDegreeCap = 6;

struct ModuleId {
  int k = 3;
  int i = 0;

  void validate() const;  // k >= 3, 0 <= i <= k
  auto operator<=>(const ModuleId&) const = default;
};

std::string to_string(const ModuleId& id);

// One creation factor a(mode), a a Chevalley slot (0 = h, 1 = e, 2 = f).
struct Factor {
  int slot = 0;
  int mode = -1;

  bool operator==(const Factor&) const = default;
  // Canonical order: mode ascending, ties broken by h < e < f.
  std::strong_ordering operator<=>(const Factor& o) const {
    if (auto c = mode <=> o.mode; c != 0) return c;
    return slot <=> o.slot;
  }
};

struct Monomial {
  std::vector<Factor> factors;  // sorted: mode ascending, then slot
  int top = 0;                  // j in v^{i,j}

  int degree() const;
  // h(0)-weight of the monomial inside V(k,i).
  int charge(int i) const;

  bool operator==(const Monomial&) const = default;
};

// Presentation order: degree, then factor list, then top index.
bool operator<(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class FockVector {
public:
  using Terms = std::map<Monomial, Scalar>;

  FockVector() = default;
  explicit FockVector(ModuleId context) : context_(context) {}
  FockVector(ModuleId context, Monomial m, Scalar c = 1);

  ModuleId context() const { return context_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Monomial& m) const;

  void add(const Monomial& m, const Scalar& c);
  void add_scaled(const FockVector& v, const Scalar& c);

  FockVector& operator+=(const FockVector& v);
  FockVector& operator-=(const FockVector& v);
  FockVector& operator*=(const Scalar& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector a) { return a *= c; }
  friend FockVector operator-(FockVector a) { return a *= -1; }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.context_ == b.context_ && a.terms_ == b.terms_;
  }

  // Largest monomial degree, -1 for the zero vector.
  int max_degree() const;
  // Split into homogeneous components keyed by degree.
  std::map<int, FockVector> by_degree() const;

private:
  void require_same_context(const FockVector& v) const;

  ModuleId context_;
  Terms terms_;
};

// Conformal degree if every monomial has the same degree, nullopt otherwise.
// The zero vector is reported as degree 0.
std::optional<int> grade(const FockVector& v);

// A single affine generator mode a(n) written as a Chevalley or primed element.
struct ModeOp {
  GenElem gen;
  int mode = 0;
};

class FockSpace {
public:
  explicit FockSpace(ModuleId id, int degree_cap = kDefaultDegreeCap);

  ModuleId id() const { return id_; }
  int level() const { return id_.k; }
  int top_label() const { return id_.i; }
  int degree_cap() const { return degree_cap_; }

  FockVector zero() const { return FockVector(id_); }
  FockVector top(int j) const;  // v^{i,j}
  FockVector vacuum() const;    // requires i == 0

  // a(mode) applied to w, a a Chevalley slot.
  FockVector apply(int slot, int mode, const FockVector& w);
  // a(mode) for any generator element; primed input is converted first.
  FockVector apply(const GenElem& a, int mode, const FockVector& w);
  FockVector apply(const ModeOp& op, const FockVector& w) { return apply(op.gen, op.mode, w); }

  // Applies the word right to left to v^{i,top}: word = x1(n1) ... xs(ns).
  FockVector canonicalize(std::span<const ModeOp> word, int top);

  // Canonical monomials of the given degree, all top indices.
  std::vector<Monomial> basis(int degree) const;

  // h'(0)-eigenbasis {e'(0)^m eta}, eigenvalues -i + 2m.
  std::vector<FockVector> primed_top_basis();
  FockVector eta() const;

  // The sigma lift on V(k,0): h -> -h, e <-> f on every factor.
  FockVector sigma(const FockVector& u);

  std::size_t cache_size() const { return memo_.size(); }

private:
  struct Key {
    int slot;
    int mode;
    Monomial m;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };

  const FockVector& apply_monomial(int slot, int mode, const Monomial& m);
  FockVector compute(int slot, int mode, const Monomial& m);
  FockVector top_action(int slot, int mode, int j) const;
  void require_context(const FockVector& w) const;

  ModuleId id_;
  int degree_cap_;
  std::unordered_map<Key, FockVector, KeyHash> memo_;
};

// Decomposition of v into h''(0)-eigencomponents, ordered by eigenvalue.
std::vector<std::pair<Scalar, FockVector>> hpp_eigendecompose(FockSpace& space, const FockVector& v);

}  // namespace sl2voa
