#include <doctest.h>

#include "sl2voa/algebra.hpp"
#include "sl2voa/errors.hpp"

using namespace sl2voa;

TEST_SUITE("algebra") {
  const GenElem h = GenElem::of(Gen::h), e = GenElem::of(Gen::e), f = GenElem::of(Gen::f);
  const GenElem hp = GenElem::of(Gen::hp), ep = GenElem::of(Gen::ep), fp = GenElem::of(Gen::fp);

  TEST_CASE("bracket") {
    CHECK(bracket(h, e) == 2 * e);
    CHECK(bracket(h, h).is_zero());
    CHECK(bracket(e, f) == h);
    CHECK(bracket(ep, fp) == hp);
    CHECK(bracket(ep, fp) == Scalar(4) * hpp());
  }

  TEST_CASE("invariant form") {
    CHECK(invariant_form(hpp(), hpp()) == make_scalar(1, 8));
    CHECK(invariant_form(h, e) == 0);
    CHECK(invariant_form(h, h) == 2);
    CHECK(invariant_form(e, f) == 1);
    CHECK(invariant_form(hp, hp) == 2);
  }

  TEST_CASE("sigma") {
    CHECK(sigma_gen(h) == -h);
    CHECK(sigma_gen(e + f) == e + f);
    CHECK(sigma_gen(sigma_gen(e)) == e);
    CHECK(sigma_gen(ep) == -ep);
    CHECK(sigma_gen(hp) == hp);
  }

  TEST_CASE("basis conversion") {
    CHECK(convert_basis(hp, Basis::chevalley) == e + f);
    CHECK(convert_basis(ep + fp, Basis::chevalley) == h);
    CHECK(convert_basis(convert_basis(e, Basis::primed), Basis::chevalley) == e);
    CHECK(convert_basis(ep, Basis::chevalley) == make_scalar(1, 2) * (h - e + f));
  }

  TEST_CASE("mixed bases are rejected") {
    CHECK_THROWS_AS(bracket(h, ep), BasisMismatch);
    CHECK_THROWS_AS((GenElem{{Gen::h, 1}, {Gen::ep, 1}}), BasisMismatch);
  }

  TEST_CASE("Jacobi and invariance on all basis triples") {
    for (Basis b : {Basis::chevalley, Basis::primed})
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          for (int z = 0; z < 3; ++z) {
            const GenElem a = GenElem::of(symbol(b, x)), c = GenElem::of(symbol(b, y)), d = GenElem::of(symbol(b, z));
            const GenElem jac = bracket(a, bracket(c, d)) + bracket(c, bracket(d, a)) + bracket(d, bracket(a, c));
            CHECK(jac.is_zero());
            CHECK(bracket(a, c) == -bracket(c, a));
            CHECK(invariant_form(bracket(a, c), d) == invariant_form(a, bracket(c, d)));
          }
  }

  TEST_CASE("sigma is an automorphism and conversion intertwines bracket") {
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const GenElem a = GenElem::of(symbol(Basis::chevalley, x)), c = GenElem::of(symbol(Basis::chevalley, y));
        CHECK(sigma_gen(bracket(a, c)) == bracket(sigma_gen(a), sigma_gen(c)));
        CHECK(convert_basis(bracket(a, c), Basis::primed) ==
              bracket(convert_basis(a, Basis::primed), convert_basis(c, Basis::primed)));
        CHECK(invariant_form(a, c) == invariant_form(convert_basis(a, Basis::primed), convert_basis(c, Basis::primed)));
      }
  }
}
