#include <doctest.h>

#include "sl2voa/errors.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/session.hpp"

using namespace sl2voa;

namespace {
TwistedModeIndex idx(long num, long den = 1) { return TwistedModeIndex(make_scalar(num, den)); }
}  // namespace

TEST_SUITE("twist-engine") {
  TEST_CASE("sigma grade") {
    Session s(3);
    TwistEngine& tw = s.twist(0);
    FockSpace& v = s.vacuum();
    CHECK(tw.sigma_grade(s.state(StateName::omega).value) == 0);
    CHECK(tw.sigma_grade(s.state(StateName::w3).value) == 1);
    CHECK(tw.sigma_grade(v.apply(0, -1, v.vacuum())) == 1);
    CHECK_THROWS_AS(tw.sigma_grade(parse_vector_literal("h(-1)|0,0> + (e+f)(-1)|0,0>", s, 0)), ParityMismatch);
  }

  TEST_CASE("mode index parity") {
    CHECK(idx(3, 2).sigma_grade == 1);
    CHECK(idx(-2).sigma_grade == 0);
    CHECK_THROWS(idx(1, 3));
    Session s(3);
    CHECK_THROWS_AS(s.twist(1).twisted_mode(s.state(StateName::w3).value, idx(1), s.twist(1).eta()), ParityMismatch);
  }

  TEST_CASE("delta") {
    for (int k : {3, 4}) {
      Session s(k);
      TwistEngine& tw = s.twist(0);
      FockSpace& v = s.vacuum();
      LaurentVector one;
      one.add(0, v.vacuum());
      CHECK(tw.delta_apply(v.vacuum()) == one);
      LaurentVector aff;
      aff.add(0, s.state(StateName::omega_aff).value);
      aff.add(-1, v.apply(hpp(), -1, v.vacuum()));
      aff.add(-2, v.vacuum(), make_scalar(k, 16));
      CHECK(tw.delta_apply(s.state(StateName::omega_aff).value) == aff);
    }
  }

  TEST_CASE("generator table") {
    for (int k : {3, 4}) {
      Session s(k);
      for (int i = 0; i <= k; ++i) {
        TwistEngine& tw = s.twist(i);
        FockSpace& v = s.space(i);
        const FockVector eta = tw.eta();
        CHECK(tw.twisted_gen_mode(GenElem::of(Gen::hp), idx(0), eta) == Scalar(k - 2 * i) / 2 * eta);
        const FockVector w = v.apply(2, -1, v.top(0));
        CHECK(tw.twisted_gen_mode_raw(GenElem::of(Gen::ep), idx(-1, 2), w) == v.apply(GenElem::of(Gen::ep), 0, w));
        CHECK(tw.twisted_gen_mode_raw(GenElem::of(Gen::fp), idx(-3, 2), w) == v.apply(GenElem::of(Gen::fp), -2, w));
      }
    }
  }

  TEST_CASE("h'' zero mode shift") {
    Session s(4);
    FockSpace& v = s.vacuum();
    const FockVector hpp1 = v.apply(hpp(), -1, v.vacuum());
    CHECK(s.twist(0).twisted_mode(hpp1, idx(0), v.vacuum()) == make_scalar(1, 2) * v.vacuum());
  }

  TEST_CASE("h(-3) modes on low degree vectors") {
    const int k = 4, i = 2;
    Session s(k);
    TwistEngine& tw = s.twist(i);
    FockSpace& v = s.vacuum();
    const FockVector h3 = v.apply(0, -3, v.vacuum());
    const GenElem h = GenElem::of(Gen::h);
    for (int d = 0; d <= 2; ++d)
      for (const Monomial& m : s.space(i).basis(d)) {
        const FockVector w(s.space(i).id(), m);
        CHECK(tw.twisted_mode(h3, idx(5, 2), w) == make_scalar(15, 8) * tw.twisted_gen_mode(h, idx(1, 2), w));
        CHECK(tw.twisted_mode(h3, idx(3, 2), w) == make_scalar(3, 8) * tw.twisted_gen_mode(h, idx(-1, 2), w));
      }
  }

  TEST_CASE("twisted lowest weight of eta") {
    for (int k : {3, 4, 5, 6}) {
      Session s(k);
      for (int i = 0; i <= k; ++i) {
        const FockVector eta = s.twist(i).eta();
        const Scalar want = Scalar(i * (i - k)) / (4 * (k + 2)) + Scalar(k - 1) / 16;
        CHECK(s.twist(i).twisted_mode(s.state(StateName::omega).value, idx(1), eta) == want * eta);
      }
    }
  }

  TEST_CASE("delta route and iterate route") {
    Session s(3, 8);
    TwistEngine& tw = s.twist(1);
    const FockVector eta = tw.eta();
    const FockVector& omega = s.state(StateName::omega).value;
    const FockVector& w3 = s.state(StateName::w3).value;
    for (int n = -1; n <= 2; ++n) CHECK(tw.twisted_iterate_raw(omega, idx(n), eta) == tw.twisted_mode_raw(omega, idx(n), eta));
    for (int n = -1; n <= 5; n += 2)
      CHECK(tw.twisted_iterate_raw(w3, idx(n, 2), eta) == tw.twisted_mode_raw(w3, idx(n, 2), eta));
  }
}
