#include <doctest.h>

#include <json.hpp>

#include "sl2voa/classify.hpp"
#include "sl2voa/errors.hpp"
#include "sl2voa/golden.hpp"
#include "sl2voa/literal.hpp"
#include "sl2voa/verify.hpp"

using namespace sl2voa;

TEST_SUITE("classifier-cli") {
  TEST_CASE("literal parsing") {
    Session s(4);
    CHECK(render(parse_vector_literal("h(-1)e(-1)|0,0>", s, 0)) == "h(-1)e(-1)|0,0>");
    CHECK(render(parse_vector_literal("e(-1)h(-1)|0,0>", s, 0)) == "-2*e(-2)|0,0> + h(-1)e(-1)|0,0>");
    CHECK(parse_vector_literal(" 1/2 * e( -1 ) | 0 , 0 > ", s, 0) == parse_vector_literal("1/2*e(-1)|0,0>", s, 0));
    try {
      parse_vector_literal("g(-1)|0,0>", s, 0);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 0);
    }
    CHECK_THROWS_AS(parse_vector_literal("h(-1)|0,0", s, 0), ParseError);
    CHECK_THROWS_AS(parse_vector_literal("|1,2>", s, 1), OutOfRange);
    CHECK_THROWS_AS(parse_vector_literal("|1,0>", s, 0), ContextMismatch);
  }

  TEST_CASE("parity errors are never silent") {
    Session s(4);
    CHECK_THROWS_AS(parse_vector_literal("(e-f)_{-1}|eta>", s, 2), ParityMismatch);
    CHECK_THROWS_AS(parse_vector_literal("0*(e-f)_{-1}|eta>", s, 2), ParityMismatch);
  }

  TEST_CASE("round trip") {
    Session s(5);
    for (int i : {0, 2, 5}) {
      FockSpace& v = s.space(i);
      for (int d = 0; d <= 3; ++d) {
        FockVector x = v.zero();
        int c = 1;
        for (const Monomial& m : v.basis(d)) x.add(m, make_scalar(c++ % 7 - 3, 1 + c % 4));
        CHECK(parse_vector_literal(render(x), s, i) == x);
      }
    }
  }

  TEST_CASE("parafermion highest weight") {
    Session s(4);
    FockSpace& v = s.vacuum();
    CHECK(check_parafermion_hw(s, s.state(StateName::omega).value));
    CHECK(check_parafermion_hw(s, s.state(StateName::w3).value));
    CHECK_FALSE(check_parafermion_hw(s, v.apply(0, -1, v.vacuum())));
  }

  TEST_CASE("twisted lowest weight checks") {
    {
      Session s(4);
      const FockVector v = s.twist(2).twisted_gen_mode(GenElem{{Gen::e, 1}, {Gen::f, -1}},
                                                       TwistedModeIndex(make_scalar(-1, 2)), s.twist(2).eta());
      const CaseResult r = check_twisted_lowest(s, 2, v, {{"omega", 2}, {"W3", make_scalar(5, 2)}});
      CHECK(r.status == Status::pass);
      const CaseResult u = check_twisted_lowest(s, 2, v, {{"W4", 3}});
      CHECK(u.status == Status::unverified);
    }
    {
      Session s(5);
      CHECK(check_twisted_lowest(s, 1, s.twist(1).eta(), {{"W3", make_scalar(3, 2)}}).status == Status::fail);
    }
    for (int k : {3, 4, 5, 6}) {
      Session s(k);
      CHECK(check_twisted_lowest(s, 0, s.twist(0).eta(), {{"W3", make_scalar(3, 2)}}).status == Status::pass);
    }
  }

  TEST_CASE("classification counts") {
    const std::pair<int, std::size_t> want[] = {{3, 10}, {4, 19}, {5, 18}, {6, 28}};
    for (auto [k, rows] : want) {
      const ClassificationTable t = classify(k);
      CHECK(t.rows.size() == rows);
      CHECK(t.weights_match());
      CHECK(t.twisted_family == static_cast<std::size_t>(k % 2 ? (k - 1) / 2 + 1 : k / 2 + 2));
    }
    const ClassificationTable t4 = classify(4);
    bool low = false, high = false;
    for (const ClassificationRow& r : t4.rows) {
      low = low || r.weight == make_scalar(1, 48);
      high = high || r.weight == make_scalar(121, 48);
    }
    CHECK(low);
    CHECK(high);
    CHECK_THROWS_AS(classify(2), OutOfRange);
    CHECK_THROWS_AS(classify(kMaxLevel + 1), OutOfRange);
  }

  TEST_CASE("verify") {
    auto only = [](const std::vector<CaseResult>& rs) {
      REQUIRE(rs.size() == 1);
      return rs[0];
    };
    CHECK(only(verify("lemma3.8-3-k4", 4)).status == Status::pass);
    const CaseResult g = only(verify("lemma3.8-3-generic", 6));
    CHECK(g.status == Status::pass);
    REQUIRE_FALSE(g.params.empty());
    CHECK(g.params[0] == std::pair<std::string, std::string>{"i", "3"});
    for (const CaseResult& r : verify("prop3.10-w3-1-top", 4)) CHECK(r.status == Status::pass);
    CHECK(verify("lemma3.8-3-k4", 5).empty());
    CHECK_THROWS_AS(verify("no-such-case", 4), UnknownName);
  }

  TEST_CASE("report schema") {
    std::vector<CaseResult> rs = verify("lemma3.7", 3);
    REQUIRE(rs.size() == 4);
    const auto j = nlohmann::json::parse(to_json(rs));
    REQUIRE(j.is_array());
    for (const auto& row : j) {
      for (const char* key : {"case_id", "k", "params", "status", "witness", "expected", "runtime_ms"})
        CHECK(row.contains(key));
      CHECK(row["status"] == "pass");
      CHECK(row["witness"].is_string());
    }
    CHECK(j[1]["witness"] == "1/40");
    rs.push_back({"x", 3, {}, Status::unverified, "", "", 0});
    CHECK(all_passed(rs));
    rs.push_back({"y", 3, {}, Status::fail, "1", "2", 0});
    CHECK_FALSE(all_passed(rs));
  }

  TEST_CASE("golden table") {
    CHECK(golden_scalar("thm3.11-odd", {{"k", 5}}) == 18);
    CHECK(golden_scalar("thm3.11-even", {{"k", 6}}) == 28);
    CHECK_THROWS_AS(golden("missing"), UnknownName);
  }
}
