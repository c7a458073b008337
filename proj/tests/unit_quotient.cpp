#include <doctest.h>

#include "sl2voa/literal.hpp"
#include "sl2voa/session.hpp"

using namespace sl2voa;

namespace {
FockVector e_power(FockSpace& v, int n) {
  FockVector x = v.vacuum();
  for (int t = 0; t < n; ++t) x = v.apply(1, -1, x);
  return x;
}
}  // namespace

TEST_SUITE("simple-quotient") {
  TEST_CASE("pairing") {
    Session s(4);
    FockSpace& v = s.vacuum();
    Quotient& q = s.quotient(0);
    CHECK(q.pairing(v.vacuum(), v.vacuum()) == 1);
    CHECK(q.pairing(v.apply(1, -1, v.vacuum()), v.apply(1, -1, v.vacuum())) == 4);
    CHECK(q.pairing(v.apply(0, -1, v.vacuum()), v.apply(1, -1, v.vacuum())) == 0);
  }

  TEST_CASE("gram blocks") {
    for (int k : {3, 4}) {
      Session s(k);
      Quotient& q = s.quotient(0);
      const GramBlock g0 = q.gram_block(0);
      CHECK(g0.matrix == Matrix{{Scalar(1)}});
      const GramBlock g1 = q.gram_block(1);
      REQUIRE(g1.basis.size() == 3);
      CHECK(g1.matrix == Matrix{{Scalar(2 * k), 0, 0}, {0, Scalar(k), 0}, {0, 0, Scalar(k)}});
      CHECK(q.radical_basis(0).empty());
      for (int d = 1; d <= k; ++d) CHECK(q.radical_basis(d).empty());
    }
  }

  TEST_CASE("singular vector at k=3") {
    Session s(3);
    Quotient& q = s.quotient(0);
    const FockVector e4 = e_power(s.vacuum(), 4);
    const GramBlock g4 = q.gram_block(4);
    std::vector<Scalar> coords;
    for (const Monomial& m : g4.basis) coords.push_back(e4.coeff(m));
    for (const auto& row : g4.matrix) {
      Scalar dot = 0;
      for (std::size_t c = 0; c < row.size(); ++c) dot += row[c] * coords[c];
      CHECK(dot == 0);
    }
    CHECK_FALSE(q.radical_basis(4).empty());
    CHECK(rank(g4.matrix) + q.radical_basis(4).size() == g4.basis.size());
    CHECK(q.is_zero_in_simple(e4));
  }

  TEST_CASE("reduction") {
    for (int k : {3, 4}) {
      Session s(k);
      Quotient& q = s.quotient(0);
      CHECK(q.reduce(e_power(s.vacuum(), k + 1)).is_zero());
      CHECK(q.reduce(s.vacuum().vacuum()) == s.vacuum().vacuum());
      CHECK(q.reduce(s.state(StateName::w3).value) == s.state(StateName::w3).value);
      CHECK_FALSE(q.is_zero_in_simple(s.vacuum().vacuum()));
    }
  }

  TEST_CASE("right side of the k=4 degree-2 identity survives") {
    Session s(4);
    const FockVector rhs = parse_vector_literal(
        "6*h_{-3/2}(h_{-1/2})^2|eta> + 12*(e+f)_{-1}(e-f)_{-3/2}|eta> - 36*(e+f)_{-2}(e-f)_{-1/2}|eta>"
        " - 6*h_{-1/2}((e+f)_{-1})^2|eta> + 12*h_{-1/2}(e-f)_{-3/2}(e-f)_{-1/2}|eta>"
        " + 6*h_{-3/2}((e-f)_{-1/2})^2|eta>",
        s, 2);
    CHECK_FALSE(s.quotient(2).reduce(rhs).is_zero());
  }
}
