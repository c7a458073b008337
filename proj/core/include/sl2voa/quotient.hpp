#pragma once

// Contravariant form on V(k,i) (adjoint e(n) <-> f(-n), h(n) <-> h(-n),
// <v^{i,j}, v^{i,j}> = C(i,j)), its graded Gram blocks, and reduction modulo
// the radical, which is the maximal proper submodule. Equality in the simple
// quotient L(k,i) is decided degree by degree.

#include <map>
#include <utility>
#include <vector>

#include "sl2voa/fock.hpp"

namespace sl2voa {

using Matrix = std::vector<std::vector<Scalar>>;

struct GramBlock {
  ModuleId context;
  int degree = 0;
  std::vector<Monomial> basis;
  Matrix matrix;
};

// Exact nullspace via fraction-free (Bareiss) elimination. Each returned
// vector has a 1 at its own free column and 0 at every other free column.
struct Nullspace {
  std::vector<int> free_columns;
  std::vector<std::vector<Scalar>> vectors;
};
Nullspace nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

// The adjoint theta(a(n)) of a Chevalley generator mode.
ModeOp adjoint(int slot, int mode);

class Quotient {
public:
  explicit Quotient(FockSpace& space);

  FockSpace& space() { return space_; }

  Scalar pairing(const FockVector& u, const FockVector& v);
  GramBlock gram_block(int degree);
  std::vector<FockVector> radical_basis(int degree);

  // Canonical coset representative; v must be homogeneous.
  FockVector reduce_mod_max(const FockVector& v);
  // Degree-wise reduction of an arbitrary vector.
  FockVector reduce(const FockVector& v);
  bool is_zero_in_simple(const FockVector& v);

private:
  struct Piece {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    Nullspace radical;
  };

  Scalar pair_monomials(const Monomial& a, const Monomial& b);
  Matrix gram_matrix(const std::vector<Monomial>& basis);
  const Piece& piece(int degree, int charge);
  FockVector reduce_homogeneous(const FockVector& v);

  FockSpace& space_;
  std::map<std::pair<int, int>, Piece> pieces_;
  std::map<std::pair<Monomial, Monomial>, Scalar> pair_memo_;
};

}  // namespace sl2voa
