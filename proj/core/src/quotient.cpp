#include "sl2voa/quotient.hpp"

#include <algorithm>

#include "sl2voa/errors.hpp"

namespace sl2voa {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row echelon form by fraction-free elimination; returns pivot columns.
std::vector<int> bareiss_echelon(IntMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

IntMatrix to_integer_rows(const Matrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    mpz_class lcm = 1;
    for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.get_num() * (lcm / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Nullspace nullspace(const Matrix& m) {
  Nullspace out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  IntMatrix a = to_integer_rows(m);
  const std::vector<int> pivots = bareiss_echelon(a);

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.free_columns.push_back(static_cast<int>(c));

  for (int f : out.free_columns) {
    std::vector<Scalar> x(cols, Scalar(0));
    x[f] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const int pc = pivots[r];
      Scalar s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0 && a[r][j] != 0) s += Scalar(a[r][j]) * x[j];
      x[pc] = -s / Scalar(a[r][pc]);
    }
    out.vectors.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = to_integer_rows(m);
  return bareiss_echelon(a).size();
}

ModeOp adjoint(int slot, int mode) {
  static constexpr int image[3] = {0, 2, 1};
  return ModeOp{GenElem::of(symbol(Basis::chevalley, image[slot])), -mode};
}

Quotient::Quotient(FockSpace& space) : space_(space) {}

Scalar Quotient::pair_monomials(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree() || a.charge(space_.top_label()) != b.charge(space_.top_label())) return 0;
  auto key = std::make_pair(a, b);
  if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;

  FockVector v(space_.id(), b);
  for (const auto& f : a.factors) {
    v = space_.apply(adjoint(f.slot, f.mode), v);
    if (v.is_zero()) break;
  }
  Scalar value = 0;
  if (!v.is_zero()) {
    // Top-level normalization: (j+1) N_{j+1} = (i-j) N_j, N_0 = 1.
    const Scalar c = v.coeff(Monomial{{}, a.top});
    if (c != 0) value = c * binomial(Scalar(space_.top_label()), a.top);
  }
  pair_memo_.emplace(std::move(key), value);
  return value;
}

Scalar Quotient::pairing(const FockVector& u, const FockVector& v) {
  if (u.context() != space_.id() || v.context() != space_.id())
    throw ContextMismatch("pairing needs vectors from " + to_string(space_.id()));
  Scalar out = 0;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      Scalar p = pair_monomials(a, b);
      if (p != 0) out += ca * cb * p;
    }
  return out;
}

Matrix Quotient::gram_matrix(const std::vector<Monomial>& basis) {
  const std::size_t n = basis.size();
  Matrix g(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      g[r][c] = pair_monomials(basis[r], basis[c]);
      g[c][r] = g[r][c];
    }
  return g;
}

GramBlock Quotient::gram_block(int degree) {
  if (degree < 0 || degree > space_.degree_cap())
    throw DegreeCapExceeded("gram block degree " + std::to_string(degree) + " outside the cap");
  GramBlock block{space_.id(), degree, space_.basis(degree), {}};
  block.matrix = gram_matrix(block.basis);
  return block;
}

const Quotient::Piece& Quotient::piece(int degree, int charge) {
  auto key = std::make_pair(degree, charge);
  if (auto it = pieces_.find(key); it != pieces_.end()) return it->second;
  if (degree > space_.degree_cap())
    throw DegreeCapExceeded("reduction at degree " + std::to_string(degree) + " exceeds the cap");
  Piece p;
  for (auto& m : space_.basis(degree))
    if (m.charge(space_.top_label()) == charge) p.basis.push_back(std::move(m));
  for (std::size_t t = 0; t < p.basis.size(); ++t) p.index.emplace(p.basis[t], t);
  p.radical = nullspace(gram_matrix(p.basis));
  return pieces_.emplace(key, std::move(p)).first->second;
}

std::vector<FockVector> Quotient::radical_basis(int degree) {
  if (degree < 0 || degree > space_.degree_cap())
    throw DegreeCapExceeded("radical degree " + std::to_string(degree) + " outside the cap");
  std::vector<FockVector> out;
  const int i = space_.top_label();
  for (int charge = i + 2 * degree; charge >= -i - 2 * degree; charge -= 2) {
    const Piece& p = piece(degree, charge);
    for (const auto& vec : p.radical.vectors) {
      FockVector v = space_.zero();
      for (std::size_t t = 0; t < vec.size(); ++t) v.add(p.basis[t], vec[t]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

FockVector Quotient::reduce_homogeneous(const FockVector& v) {
  std::map<int, FockVector> by_charge;
  const int i = space_.top_label();
  for (const auto& [m, c] : v.terms()) {
    auto [it, _] = by_charge.try_emplace(m.charge(i), space_.zero());
    it->second.add(m, c);
  }
  FockVector out = space_.zero();
  const int degree = *grade(v);
  for (auto& [charge, part] : by_charge) {
    const Piece& p = piece(degree, charge);
    std::vector<Scalar> x(p.basis.size(), Scalar(0));
    for (const auto& [m, c] : part.terms()) x[p.index.at(m)] = c;
    for (std::size_t t = 0; t < p.radical.free_columns.size(); ++t) {
      const Scalar lead = x[p.radical.free_columns[t]];
      if (lead == 0) continue;
      const auto& r = p.radical.vectors[t];
      for (std::size_t s = 0; s < x.size(); ++s)
        if (r[s] != 0) x[s] -= lead * r[s];
    }
    for (std::size_t s = 0; s < x.size(); ++s) out.add(p.basis[s], x[s]);
  }
  return out;
}

FockVector Quotient::reduce_mod_max(const FockVector& v) {
  if (v.context() != space_.id()) throw ContextMismatch("reduction needs a vector from " + to_string(space_.id()));
  if (!grade(v)) throw NotHomogeneous("reduce_mod_max needs a homogeneous vector");
  return reduce_homogeneous(v);
}

FockVector Quotient::reduce(const FockVector& v) {
  if (v.context() != space_.id()) throw ContextMismatch("reduction needs a vector from " + to_string(space_.id()));
  FockVector out = space_.zero();
  for (const auto& [d, part] : v.by_degree()) out += reduce_homogeneous(part);
  return out;
}

bool Quotient::is_zero_in_simple(const FockVector& v) { return reduce_mod_max(v).is_zero(); }

}  // namespace sl2voa
