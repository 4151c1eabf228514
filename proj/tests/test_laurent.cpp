#include <catch_amalgamated.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "qtangle/laurent.hpp"

using qtangle::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coef(-9, 9);
  LaurentPoly p;
  for (int t = nterms(rng); t > 0; --t) p.add_term(coef(rng), exp(rng));
  return p;
}

// Schoolbook product on exponent -> coefficient maps.
std::map<int, std::int64_t> product_oracle(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, std::int64_t> out;
  for (auto [ea, ca] : a.terms())
    for (auto [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("printing follows the ascending-term grammar") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK(LaurentPoly(-7).to_string() == "-7");
  CHECK(LaurentPoly::q(1).to_string() == "q");
  CHECK(LaurentPoly::q(-1).to_string() == "q^-1");
  CHECK(qtangle::circle_value().to_string() == "-q^-1 - q");
  LaurentPoly p = LaurentPoly::monomial(-1, -2) + LaurentPoly(3) - LaurentPoly::q(3);
  CHECK(p.to_string() == "-q^-2 + 3 - q^3");
  CHECK(LaurentPoly::monomial(-2, 5).to_string() == "-2*q^5");
  CHECK((LaurentPoly::monomial(4, 1) + LaurentPoly::monomial(-3, -9)).to_string() == "-3*q^-9 + 4*q");
}

TEST_CASE("parse inverts to_string") {
  for (const char* s : {"0", "1", "-q^-1 - q", "-q^-2 + 3 - q^3", "-3*q^-9 + 4*q", "q^-5 + q^5", "2*q^-1 + 2*q"})
    CHECK(LaurentPoly::parse(s).to_string() == s);
  CHECK(LaurentPoly::parse(" q + q ") == LaurentPoly::monomial(2, 1));
  CHECK(LaurentPoly::parse("q - q").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("q^"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("2q 3"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("x"), std::invalid_argument);

  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("hand-expanded products") {
  const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1);
  // (q + q^-1)^2 = q^-2 + 2 + q^2
  CHECK(((q + qi) * (q + qi)).to_string() == "q^-2 + 2 + q^2");
  // (q - q^-1)(q + q^-1) = q^2 - q^-2
  CHECK(((q - qi) * (q + qi)).to_string() == "-q^-2 + q^2");
  // (1 - q^3)(1 + q^3 + q^6) = 1 - q^9
  CHECK(((LaurentPoly(1) - LaurentPoly::q(3)) * (LaurentPoly(1) + LaurentPoly::q(3) + LaurentPoly::q(6))).to_string() ==
        "1 - q^9");
  CHECK((q * qi) == LaurentPoly(1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261015);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a * b).terms() == product_oracle(a, b));
    CHECK(a.shifted(3) == a * LaurentPoly::q(3));
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(11);
  const LaurentPoly unknot = LaurentPoly::q(1) + LaurentPoly::q(-1);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    const auto quot = (a * b).divide_exact(b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
  }
  CHECK_FALSE(LaurentPoly(1).divide_exact(unknot).has_value());
  CHECK_FALSE(LaurentPoly::q(2).divide_exact(LaurentPoly(2)).has_value());
  CHECK(LaurentPoly().divide_exact(unknot) == LaurentPoly());
  CHECK_THROWS_AS(unknot.divide_exact(LaurentPoly()), std::domain_error);
}

TEST_CASE("coefficient overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  LaurentPoly p(big);
  CHECK_THROWS_AS(p + LaurentPoly(1), std::overflow_error);
  CHECK_THROWS_AS(p * LaurentPoly(2), std::overflow_error);
  CHECK((p - LaurentPoly(1)).coeff(0) == big - 1);
}
