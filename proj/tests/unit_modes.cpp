#include <doctest.h>

#include "sl2voa/literal.hpp"
#include "sl2voa/session.hpp"

using namespace sl2voa;

namespace {
Scalar lambda(int k, int i, int j) {
  const int d = i - 2 * j;
  return Scalar(k * d - d * d + 2 * k * j * (i - j + 1)) / Scalar(2 * k * (k + 2));
}
}  // namespace

TEST_SUITE("mode-engine") {
  TEST_CASE("generator modes") {
    for (int k : {3, 4}) {
      Session s(k);
      FockSpace& v = s.vacuum();
      const FockVector h1 = v.apply(0, -1, v.vacuum());
      CHECK(s.modes(0).apply_mode(GenElem::of(Gen::h), 1, h1) == Scalar(2 * k) * v.vacuum());
      for (int i = 0; i <= k; ++i) {
        FockSpace& w = s.space(i);
        CHECK(s.modes(i).apply_mode(GenElem::of(Gen::e), 0, w.top(0)).is_zero());
        for (int j = 0; j < i; ++j)
          CHECK(s.modes(i).apply_mode(GenElem::of(Gen::f), 0, w.top(j)) == Scalar(j + 1) * w.top(j + 1));
      }
    }
  }

  TEST_CASE("omega(1) on top vectors") {
    for (int k : {3, 4, 5, 6}) {
      Session s(k);
      const FockVector& omega = s.state(StateName::omega).value;
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= i; ++j) {
          const FockVector v = s.space(i).top(j);
          CHECK(s.modes(i).composite_mode(omega, 1, v) == lambda(k, i, j) * v);
        }
    }
    Session s(3);
    const FockVector v = s.space(1).top(0);
    CHECK(s.modes(1).composite_mode(s.state(StateName::omega).value, 1, v) == make_scalar(1, 15) * v);
    CHECK(s.modes(0).composite_mode(s.state(StateName::omega_aff).value, 1, s.vacuum().vacuum()).is_zero());
  }

  TEST_CASE("named states") {
    for (int k : {3, 4}) {
      Session s(k);
      const Scalar kk(k);
      const FockVector omega = s.state(StateName::omega).value;
      FockVector rhs = Scalar(1) / (8 * kk) * s.state(StateName::xi2).value;
      rhs += (3 * kk - 2) / (4 * kk * (kk + 2)) * s.state(StateName::xi3).value;
      rhs += Scalar(1) / (8 * kk) * s.state(StateName::xi4).value;
      rhs += Scalar(1) / (8 * kk) * s.state(StateName::xi5).value;
      CHECK(omega == rhs);
      CHECK(grade(s.state(StateName::w3).value) == 3);
      CHECK(s.twist(0).sigma_grade(s.state(StateName::w3).value) == 1);
      CHECK(s.state(StateName::omega_gamma).value == parse_vector_literal("{1/(4k)}*h(-1)h(-1)|0,0>", s, 0));
      CHECK(s.state(StateName::omega).central_charge == 2 * (kk - 1) / (kk + 2));
    }
  }

  TEST_CASE("vacuum acts as the identity") {
    Session s(3);
    const FockVector w = parse_vector_literal("e(-1)|2,1> + 1/3*h(-2)|2,0>", s, 2);
    CHECK(s.modes(2).composite_mode(s.vacuum().vacuum(), -1, w) == w);
    CHECK(s.modes(2).composite_mode(s.vacuum().vacuum(), 0, w).is_zero());
  }
}
