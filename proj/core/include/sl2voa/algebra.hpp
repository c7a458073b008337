#pragma once

// sl2 data: structure constants, the normalized invariant form, the
// involution sigma, and the change between the Chevalley basis {h, e, f}
// and the primed basis {h', e', f'} with h' = e + f,
// e' = (h - e + f)/2, f' = (h + e - f)/2.

#include <array>
#include <initializer_list>
#include <string>
#include <utility>

#include "sl2voa/scalar.hpp"

namespace sl2voa {

enum class Basis { chevalley, primed };

// The six generator symbols. hp/ep/fp are the primed h', e', f'.
enum class Gen { h, e, f, hp, ep, fp };

Basis basis_of(Gen g);
// Position 0..2 of a symbol inside its basis (h < e < f, h' < e' < f').
int slot(Gen g);
Gen symbol(Basis b, int slot);
std::string name(Gen g);

class GenElem {
public:
  GenElem() = default;
  explicit GenElem(Basis basis) : basis_(basis) {}
  // Throws BasisMismatch when symbols from both bases are mixed.
  GenElem(std::initializer_list<std::pair<Gen, Scalar>> terms);

  static GenElem of(Gen g, const Scalar& c = 1);

  Basis basis() const { return basis_; }
  const Scalar& coeff(int slot) const { return coeffs_[slot]; }
  const Scalar& coeff(Gen g) const;
  bool is_zero() const;

  GenElem& operator+=(const GenElem& other);
  GenElem& operator-=(const GenElem& other);
  GenElem& operator*=(const Scalar& c);

  friend GenElem operator+(GenElem a, const GenElem& b) { return a += b; }
  friend GenElem operator-(GenElem a, const GenElem& b) { return a -= b; }
  friend GenElem operator*(const Scalar& c, GenElem a) { return a *= c; }
  friend GenElem operator-(GenElem a) { return a *= -1; }
  friend bool operator==(const GenElem& a, const GenElem& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

private:
  Basis basis_ = Basis::chevalley;
  std::array<Scalar, 3> coeffs_{};
};

// h'' = h'/4, kept as a scalar multiple rather than a seventh symbol.
GenElem hpp();

GenElem bracket(const GenElem& a, const GenElem& b);
Scalar invariant_form(const GenElem& a, const GenElem& b);
GenElem sigma_gen(const GenElem& a);
GenElem convert_basis(const GenElem& a, Basis target);

// Bracket of two basis symbols in the same basis: [x, y] = c * z, c may be 0.
std::pair<Scalar, int> bracket_slots(int x, int y);
// Form on basis slots (same for both bases since each is an sl2-triple).
long form_slots(int x, int y);

}  // namespace sl2voa
