#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sl2voa/errors.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/session.hpp"

using namespace sl2voa;

TEST_SUITE("fockspace") {
  TEST_CASE("canonicalize") {
    Session s(4);
    FockSpace& v = s.vacuum();
    const GenElem h = GenElem::of(Gen::h), e = GenElem::of(Gen::e), f = GenElem::of(Gen::f);
    const std::vector<ModeOp> eh = {{e, -1}, {h, -1}};
    CHECK(v.canonicalize(eh, 0) == parse_vector_literal("h(-1)e(-1)|0,0> - 2*e(-2)|0,0>", s, 0));
    const std::vector<ModeOp> ef = {{e, 1}, {f, -1}};
    CHECK(v.canonicalize(ef, 0) == Scalar(4) * v.vacuum());
    FockSpace& w = s.space(3);
    for (int j = 0; j <= 3; ++j) CHECK(w.apply(0, 2, w.top(j)).is_zero());
  }

  TEST_CASE("ordering does not matter") {
    Session s(3);
    FockSpace& v = s.space(2);
    std::vector<ModeOp> word = {{GenElem::of(Gen::e), -1}, {GenElem::of(Gen::f), -2}, {GenElem::of(Gen::h), 1},
                                {GenElem::of(Gen::f), 0}, {GenElem::of(Gen::e), -1}};
    // x1 x2 R = x2 x1 R + [x1, x2] R
    const FockVector base = v.canonicalize(word, 1);
    std::vector<ModeOp> swapped = word;
    std::swap(swapped[0], swapped[1]);
    FockVector corrected = v.canonicalize(swapped, 1);
    const GenElem c = bracket(word[0].gen, word[1].gen);
    std::vector<ModeOp> rest(word.begin() + 2, word.end());
    FockVector tail = v.canonicalize(rest, 1);
    corrected += v.apply(c, word[0].mode + word[1].mode, tail);
    CHECK(base == corrected);
  }

  TEST_CASE("grade") {
    Session s(3);
    CHECK(grade(s.state(StateName::w3).value) == 3);
    CHECK(grade(s.vacuum().vacuum()) == 0);
    CHECK_FALSE(grade(parse_vector_literal("h(-1)|0,0> + h(-2)|0,0>", s, 0)).has_value());
  }

  TEST_CASE("graded dimension") {
    Session s(3);
    CHECK(s.vacuum().basis(0).size() == 1);
    CHECK(s.vacuum().basis(1).size() == 3);
    CHECK(s.vacuum().basis(2).size() == 9);
    CHECK(s.space(2).basis(0).size() == 3);
  }

  TEST_CASE("primed top basis") {
    Session s(5);
    auto b0 = s.space(0).primed_top_basis();
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == s.vacuum().vacuum());
    FockSpace& v1 = s.space(1);
    auto b1 = v1.primed_top_basis();
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == v1.top(0) - v1.top(1));
    CHECK(b1[1] == v1.apply(GenElem::of(Gen::ep), 0, b1[0]));
    FockSpace& v2 = s.space(2);
    auto b2 = v2.primed_top_basis();
    REQUIRE(b2.size() == 3);
    for (std::size_t m = 0; m < 3; ++m)
      CHECK(v2.apply(GenElem::of(Gen::hp), 0, b2[m]) == Scalar(-2 + 2 * static_cast<int>(m)) * b2[m]);
  }

  TEST_CASE("eta") {
    Session s(4);
    CHECK(s.space(0).eta() == s.vacuum().vacuum());
    CHECK(s.space(2).eta() == parse_vector_literal("|2,0> - |2,1> + |2,2>", s, 2));
  }

  TEST_CASE("h'' eigen-decomposition") {
    Session s(4);
    FockSpace& v = s.vacuum();
    const FockVector xi4 = s.state(StateName::xi4).value;
    const FockVector xi6 = s.state(StateName::xi6).value;
    auto d4 = hpp_eigendecompose(v, xi4);
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].first == 1);
    CHECK(d4[0].second == xi4);
    auto d6 = hpp_eigendecompose(v, xi6);
    REQUIRE(d6.size() == 1);
    CHECK(d6[0].first == make_scalar(1, 2));
    auto d0 = hpp_eigendecompose(v, v.vacuum());
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].first == 0);
    const FockVector mixed = s.state(StateName::omega).value;
    FockVector sum = v.zero();
    for (const auto& [lambda, part] : hpp_eigendecompose(v, mixed)) {
      CHECK(v.apply(hpp(), 0, part) == lambda * part);
      sum += part;
    }
    CHECK(sum == mixed);
  }

  TEST_CASE("errors") {
    Session s(3);
    CHECK_THROWS_AS(s.space(4), OutOfRange);
    CHECK_THROWS_AS((void)s.space(0).top(1), OutOfRange);
    CHECK_THROWS_AS(s.vacuum().apply(1, -7, s.vacuum().vacuum()), DegreeCapExceeded);
  }
}
