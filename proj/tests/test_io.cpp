#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "cw/io.hpp"
#include "support.hpp"

using namespace cw;

TEST_SUITE("io") {
  TEST_CASE("elements round-trip") {
    std::mt19937_64 rng(131);
    for (int k = 0; k < 200; ++k) {
      const auto w = testing::random_element(rng, k % 10);
      CHECK(element_from_json(element_to_json(w)) == w);
      CHECK(element_from_json(nlohmann::json(format_word(reduced_word(w)))) == w);
    }
    CHECK(element_from_json(nlohmann::json::parse(R"({"mu":[1,1]})")) == AffineElement::translation(kPhi));
  }

  TEST_CASE("Hecke elements round-trip") {
    for (int q : {2, 4}) {
      const HeckeAlgebra alg(q);
      std::mt19937_64 rng(137 + q);
      for (int k = 0; k < 30; ++k) {
        const auto h = testing::random_hecke(alg, rng, 5, 6);
        CHECK(hecke_from_json(alg, hecke_to_json(alg, h)) == h);
        const auto x = alg.t_to_x(h);
        CHECK(hecke_from_json(alg, hecke_to_json(alg, x)) == x);
      }
    }
    const HeckeAlgebra numeric(2, Scalar::Mode::kNumeric);
    const auto p = numeric.power(numeric.simple_walk(), 3);
    const auto back = hecke_from_json(numeric, parse_json_text(hecke_to_json(numeric, p).dump()));
    for (const auto& [w, c] : p.terms()) CHECK(std::abs(back.find(w)->numeric_value() - c.numeric_value()) < 1e-15);
  }

  TEST_CASE("errors carry positions") {
    const HeckeAlgebra alg(2);
    try {
      parse_json_text(R"({"terms": [1, }})");
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    try {
      hecke_from_json(alg, nlohmann::json::parse(R"({"terms":[{"index":"1","a":"1"},{"index":{"mu":[1]},"a":"2"}]})"));
      FAIL("expected a bad term");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).rfind("terms[1]", 0) == 0);
    }
    CHECK_THROWS_AS(hecke_from_json(alg, nlohmann::json::parse(R"({"basis":"Y","terms":[]})")), ParseError);
    CHECK_THROWS_AS(hecke_from_json(alg, nlohmann::json::parse(R"({"q":"3","terms":[]})")), ParseError);
    CHECK_THROWS_AS(hecke_from_json(alg, nlohmann::json::parse(R"({"terms":[{"index":"1","re":1}]})")), ParseError);
    CHECK_THROWS_AS(hecke_from_json(alg, nlohmann::json::parse(R"({"terms":[{"index":"1,3","a":"1"}]})")), ParseError);
    // A word index names the product, reduced or not.
    CHECK(hecke_from_json(alg, nlohmann::json::parse(R"({"terms":[{"index":"1,1","a":"1"}]})")) == alg.one());
    CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"mu":[0,0],"u":"0"})")), ParseError);
    CHECK_THROWS_AS(read_hecke_file(alg, "/nonexistent/element.json"), ParseError);
  }

  TEST_CASE("element files") {
    const HeckeAlgebra alg(3);
    const std::string path = "io_test_element.json";
    {
      std::ofstream out(path);
      out << R"({"basis":"T","q":"3","terms":[{"index":"","a":"1/2"},{"index":"0,1","b":-1}]})";
    }
    const auto h = read_hecke_file(alg, path);
    std::remove(path.c_str());
    CHECK(h.size() == 2);
    CHECK(*h.find(AffineElement{}) == alg.field().from_rational(Rational(1, 2)));
    CHECK(*h.find(AffineElement::from_word({0, 1})) == alg.field().mul(alg.field().from_rational(-1), alg.field().sqrt_q()));
  }

  TEST_CASE("number formatting and lists") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
    CHECK(parse_int_list("100,200,400") == std::vector<int>{100, 200, 400});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("1,x"), ParseError);
    CHECK_THROWS_AS(parse_int_list("1.5"), ParseError);
  }
}
