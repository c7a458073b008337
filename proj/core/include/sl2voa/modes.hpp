#pragma once

// Untwisted vertex-operator modes on V(k,i): generator modes a(m) and the
// modes u(m) of arbitrary states u of V(k,0), obtained by peeling the
// leftmost factor of u = a(-n)v with the normal-ordered product formula
//   (a(p)v)(m) = sum_j (-1)^j C(p,j) [ a(p-j) v(m+j) - (-1)^p v(p+m-j) a(j) ].

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sl2voa/fock.hpp"

namespace sl2voa {

enum class StateName {
  omega_aff,
  omega_gamma,
  omega,
  w3,
  xi1,
  xi2,
  xi3,
  xi4,
  xi5,
  xi6,
  xi7,
  xi8,
  xi9,
};

std::string to_string(StateName name);
std::optional<StateName> parse_state_name(std::string_view text);
std::vector<StateName> all_state_names();

struct NamedState {
  StateName name;
  FockVector value;
  std::optional<Scalar> central_charge;
};

// Builds the named state in V(k,0); `vacuum` must be the V(k,0) space.
NamedState build(StateName name, FockSpace& vacuum);
NamedState build(std::string_view name, FockSpace& vacuum);  // throws UnknownName

class ModeEngine {
public:
  // `vacuum` is V(k,0) (where states u live); `target` is V(k,i).
  ModeEngine(FockSpace& vacuum, FockSpace& target);

  FockSpace& vacuum() { return vacuum_; }
  FockSpace& target() { return target_; }

  FockVector apply_mode(const GenElem& a, int m, const FockVector& w);
  // m-th mode of Y(u, z) on w.
  FockVector composite_mode(const FockVector& u, int m, const FockVector& w);

private:
  struct Key {
    Monomial u;
    int m;
    Monomial w;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };

  const FockVector& monomial_mode(const Monomial& u, int m, const Monomial& w);
  FockVector compute(const Monomial& u, int m, const Monomial& w);

  FockSpace& vacuum_;
  FockSpace& target_;
  std::unordered_map<Key, FockVector, KeyHash> memo_;
};

}  // namespace sl2voa
