#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "qtangle/ktheory.hpp"

using namespace qtangle;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

// [E_j] products at width n: strand 1 is the leading bit.
std::uint64_t E(int n, std::initializer_list<int> js) {
  std::uint64_t d = 0;
  for (int j : js) d |= std::uint64_t{1} << (n - j);
  return d;
}

KVector random_kvector(std::mt19937& rng, int n) {
  KVector v(n);
  std::uniform_int_distribution<int> coef(-3, 3), exp(-4, 4);
  std::uniform_int_distribution<std::uint64_t> idx(0, basis_size(n) - 1);
  for (int t = 0; t < 4; ++t) v.add(idx(rng), LaurentPoly::monomial(coef(rng), exp(rng)));
  return v;
}

}  // namespace

TEST_CASE("cap operator on basis elements") {
  const KVector a = cap_op(1, 2, KVector::basis(0, 0));
  CHECK(a.coeff(E(2, {1})) == P("1"));
  CHECK(a.coeff(E(2, {2})) == P("-q^2"));
  CHECK(a.terms.size() == 2);

  const KVector b = cap_op(1, 4, KVector::basis(2, E(2, {1})));
  CHECK(b.coeff(E(4, {1, 3})) == P("q^2"));
  CHECK(b.coeff(E(4, {2, 3})) == P("-q^4"));
  CHECK(b.terms.size() == 2);

  // i = 2 and delta = (1, 1): q^{1 + 2} ([E_2] - q^2 [E_3]) [E_1] [E_4]
  const KVector c = cap_op(2, 4, KVector::basis(2, E(2, {1, 2})));
  CHECK(c.coeff(E(4, {1, 2, 4})) == P("q^3"));
  CHECK(c.coeff(E(4, {1, 3, 4})) == P("-q^5"));

  CHECK_THROWS_AS(cap_op(2, 2, KVector::basis(0, 0)), std::out_of_range);
  CHECK_THROWS_AS(cap_op(1, 3, KVector::basis(0, 0)), std::invalid_argument);
}

TEST_CASE("cup operator cases") {
  CHECK(cup_op(1, 2, KVector::basis(2, E(2, {2}))) == KVector::basis(0, 0, P("q^-1")));
  CHECK(cup_op(1, 2, KVector::basis(2, E(2, {1}))) == KVector::basis(0, 0, P("-q^-1")));
  CHECK(cup_op(1, 2, KVector::basis(2, 0)).is_zero());
  CHECK(cup_op(1, 2, KVector::basis(2, E(2, {1, 2}))).is_zero());
  // i = 1 on width 4 with delta = (0,1,1,1): q^{-1 - 2*2} [E_1][E_2]
  CHECK(cup_op(1, 4, KVector::basis(4, E(4, {2, 3, 4}))) == KVector::basis(2, E(2, {1, 2}), P("q^-5")));
}

TEST_CASE("cap and cup operators are linear") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const KVector v = random_kvector(rng, 2), w = random_kvector(rng, 2);
    const LaurentPoly a = P("q^2 - 3"), b = P("q^-1");
    CHECK(cap_op(2, 4, a * v + b * w) == a * cap_op(2, 4, v) + b * cap_op(2, 4, w));
    const KVector x = random_kvector(rng, 4), y = random_kvector(rng, 4);
    CHECK(cup_op(3, 4, a * x + b * y) == a * cup_op(3, 4, x) + b * cup_op(3, 4, y));
  }
}

TEST_CASE("circle value and zigzag") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (std::uint64_t d = 0; d < basis_size(n - 2); ++d) {
        const KVector v = KVector::basis(n - 2, d);
        CHECK(cup_op(i, n, cap_op(i, n, v)) == qtangle::circle_value() * v);
        if (i + 1 < n) CHECK(cup_op(i + 1, n, cap_op(i, n, v)) == v);
        if (i > 1) CHECK(cup_op(i - 1, n, cap_op(i, n, v)) == v);
      }
  CHECK(apply(corpus::unknot(), KVector::basis(0, 0)) == KVector::basis(0, 0, P("-q^-1 - q")));
}

TEST_CASE("alpha") {
  CHECK(alpha(KVector::basis(3, 0)) == RepVector::basis(3, 0));
  CHECK(alpha(KVector::basis(2, E(2, {1, 2}))) == RepVector::basis(2, 0b11, P("q^-3")));
  CHECK(alpha(KVector::basis(3, E(3, {3}))) == RepVector::basis(3, 0b001, P("q^-3")));
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const KVector v = random_kvector(rng, 4);
    CHECK(alpha_inv(alpha(v)) == v);
  }
}

TEST_CASE("type-2 crossing from the Kauffman formula") {
  // cup_op(1) = 0 on the empty product
  CHECK(crossing_op(1, 2, 2, KVector::basis(2, 0)) == KVector::basis(2, 0, P("-q^-1")));
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (std::uint64_t d = 0; d < basis_size(n); ++d) {
        const KVector v = KVector::basis(n, d);
        CHECK(crossing_op(i, n, 1, crossing_op(i, n, 2, v)) == v);
        CHECK(crossing_op(i, n, 2, crossing_op(i, n, 1, v)) == v);
        CHECK(crossing_op(i, n, 3, v) == P("q^-3") * crossing_op(i, n, 1, v));
      }
}

TEST_CASE("alpha intertwines every generator") {
  for (int n = 0; n <= 5; ++n) {
    for (int i = 1; i <= n + 1; ++i) CHECK(intertwines(TangleDiagram(n, n + 2, {Layer::cap(i)})));
    for (int i = 1; i < n; ++i) {
      CHECK(intertwines(TangleDiagram(n, n - 2, {Layer::cup(i)})));
      for (int c = 1; c <= 4; ++c) {
        INFO("n=" << n << " i=" << i << " type " << c);
        CHECK(intertwines(TangleDiagram(n, n, {Layer::crossing(i, c)})));
      }
    }
  }
}

TEST_CASE("alpha intertwines composite diagrams") {
  for (const auto& e : corpus::links()) {
    if (e.diagram.crossing_count() > 6) continue;
    INFO(e.name);
    CHECK(alpha(apply(e.diagram, KVector::basis(0, 0))) == apply_matrix(psi(e.diagram), alpha(KVector::basis(0, 0)), 0));
  }
  const TangleDiagram t(2, 2, {Layer::cap(2), Layer::crossing(1, 2), Layer::crossing(3, 4), Layer::cup(2)});
  CHECK(intertwines(t));
}

TEST_CASE("shift diagnostic") {
  for (const auto& d : shift_diagnostic(4, Type4Scalar::kernel_shift)) CHECK(d.agreement == ScalarAgreement::agree);
  for (const auto& d : shift_diagnostic(4, Type4Scalar::braiding_table)) {
    INFO("n=" << d.width << " i=" << d.position << " type " << d.ctype);
    CHECK(d.agreement == (d.ctype == 4 ? ScalarAgreement::sign_mismatch : ScalarAgreement::agree));
  }
  CHECK(std::string(to_string(ScalarAgreement::sign_mismatch)) == "sign mismatch");
}
