#include "sl2voa/algebra.hpp"

#include "sl2voa/errors.hpp"

namespace sl2voa {

Basis basis_of(Gen g) {
  switch (g) {
    case Gen::h:
    case Gen::e:
    case Gen::f:
      return Basis::chevalley;
    default:
      return Basis::primed;
  }
}

int slot(Gen g) {
  switch (g) {
    case Gen::h:
    case Gen::hp:
      return 0;
    case Gen::e:
    case Gen::ep:
      return 1;
    default:
      return 2;
  }
}

Gen symbol(Basis b, int s) {
  static constexpr std::array<Gen, 3> chev{Gen::h, Gen::e, Gen::f};
  static constexpr std::array<Gen, 3> prim{Gen::hp, Gen::ep, Gen::fp};
  return b == Basis::chevalley ? chev.at(s) : prim.at(s);
}

std::string name(Gen g) {
  switch (g) {
    case Gen::h: return "h";
    case Gen::e: return "e";
    case Gen::f: return "f";
    case Gen::hp: return "h'";
    case Gen::ep: return "e'";
    case Gen::fp: return "f'";
  }
  return "?";
}

GenElem::GenElem(std::initializer_list<std::pair<Gen, Scalar>> terms) {
  bool first = true;
  for (const auto& [g, c] : terms) {
    if (first) {
      basis_ = basis_of(g);
      first = false;
    } else if (basis_of(g) != basis_) {
      throw BasisMismatch("generator element mixes Chevalley and primed symbols");
    }
    coeffs_[slot(g)] += c;
  }
}

GenElem GenElem::of(Gen g, const Scalar& c) {
  GenElem x(basis_of(g));
  x.coeffs_[slot(g)] = c;
  return x;
}

const Scalar& GenElem::coeff(Gen g) const {
  if (basis_of(g) != basis_) throw BasisMismatch("symbol " + name(g) + " not in this basis");
  return coeffs_[slot(g)];
}

bool GenElem::is_zero() const {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0;
}

GenElem& GenElem::operator+=(const GenElem& other) {
  if (is_zero()) basis_ = other.basis_;
  if (other.basis_ != basis_ && !other.is_zero()) throw BasisMismatch("adding across bases");
  for (int s = 0; s < 3; ++s) coeffs_[s] += other.coeffs_[s];
  return *this;
}

GenElem& GenElem::operator-=(const GenElem& other) { return *this += -1 * other; }

GenElem& GenElem::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string GenElem::to_string() const {
  std::string out;
  for (int s = 0; s < 3; ++s) {
    const Scalar& c = coeffs_[s];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Scalar a = abs(c);
    if (a != 1) out += sl2voa::to_string(a) + "*";
    out += name(symbol(basis_, s));
  }
  return out.empty() ? "0" : out;
}

GenElem hpp() { return GenElem::of(Gen::hp, make_scalar(1, 4)); }

std::pair<Scalar, int> bracket_slots(int x, int y) {
  // slots: 0 = h, 1 = e, 2 = f (or primed analogues).
  if (x == y) return {0, 0};
  if (x == 0 && y == 1) return {2, 1};
  if (x == 1 && y == 0) return {-2, 1};
  if (x == 0 && y == 2) return {-2, 2};
  if (x == 2 && y == 0) return {2, 2};
  if (x == 1 && y == 2) return {1, 0};
  return {-1, 0};  // [f, e] = -h
}

long form_slots(int x, int y) {
  if (x == 0 && y == 0) return 2;
  if ((x == 1 && y == 2) || (x == 2 && y == 1)) return 1;
  return 0;
}

namespace {

void require_same_basis(const GenElem& a, const GenElem& b) {
  if (a.basis() != b.basis() && !a.is_zero() && !b.is_zero())
    throw BasisMismatch("operands live in different bases");
}

}  // namespace

GenElem bracket(const GenElem& a, const GenElem& b) {
  require_same_basis(a, b);
  GenElem out(a.is_zero() ? b.basis() : a.basis());
  for (int x = 0; x < 3; ++x) {
    if (a.coeff(x) == 0) continue;
    for (int y = 0; y < 3; ++y) {
      if (b.coeff(y) == 0) continue;
      auto [c, z] = bracket_slots(x, y);
      if (c == 0) continue;
      out += GenElem::of(symbol(out.basis(), z), a.coeff(x) * b.coeff(y) * c);
    }
  }
  return out;
}

Scalar invariant_form(const GenElem& a, const GenElem& b) {
  require_same_basis(a, b);
  Scalar out = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) out += a.coeff(x) * b.coeff(y) * form_slots(x, y);
  return out;
}

GenElem sigma_gen(const GenElem& a) {
  GenElem out(a.basis());
  if (a.basis() == Basis::chevalley) {
    out += GenElem::of(Gen::h, -a.coeff(0));
    out += GenElem::of(Gen::e, a.coeff(2));
    out += GenElem::of(Gen::f, a.coeff(1));
  } else {
    out += GenElem::of(Gen::hp, a.coeff(0));
    out += GenElem::of(Gen::ep, -a.coeff(1));
    out += GenElem::of(Gen::fp, -a.coeff(2));
  }
  return out;
}

GenElem convert_basis(const GenElem& a, Basis target) {
  if (a.basis() == target) return a;
  const Scalar half = make_scalar(1, 2);
  GenElem out(target);
  if (target == Basis::chevalley) {
    // h' = e + f, e' = (h - e + f)/2, f' = (h + e - f)/2
    out += a.coeff(0) * GenElem{{Gen::e, 1}, {Gen::f, 1}};
    out += a.coeff(1) * GenElem{{Gen::h, half}, {Gen::e, -half}, {Gen::f, half}};
    out += a.coeff(2) * GenElem{{Gen::h, half}, {Gen::e, half}, {Gen::f, -half}};
  } else {
    // h = e' + f', e = (h' - e' + f')/2, f = (h' + e' - f')/2
    out += a.coeff(0) * GenElem{{Gen::ep, 1}, {Gen::fp, 1}};
    out += a.coeff(1) * GenElem{{Gen::hp, half}, {Gen::ep, -half}, {Gen::fp, half}};
    out += a.coeff(2) * GenElem{{Gen::hp, half}, {Gen::ep, half}, {Gen::fp, -half}};
  }
  return out;
}

}  // namespace sl2voa
