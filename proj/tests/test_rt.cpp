#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "qtangle/relations.hpp"
#include "qtangle/rt.hpp"

using namespace qtangle;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

// Basis indices at width 2.
constexpr std::size_t v00 = 0b00, v01 = 0b01, v10 = 0b10, v11 = 0b11;

}  // namespace

TEST_CASE("cap and cup blocks") {
  const LaurentMatrix cap = psi_gen(Layer::cap(1), 0);
  REQUIRE(cap.rows() == 4);
  REQUIRE(cap.cols() == 1);
  CHECK(cap.at(v01, 0) == P("-1"));
  CHECK(cap.at(v10, 0) == P("q^-1"));
  CHECK(cap.at(v00, 0).is_zero());
  CHECK(cap.at(v11, 0).is_zero());

  const LaurentMatrix cup = psi_gen(Layer::cup(1), 2);
  REQUIRE(cup.rows() == 1);
  REQUIRE(cup.cols() == 4);
  CHECK(cup.at(0, v01) == P("q"));
  CHECK(cup.at(0, v10) == P("-1"));
  CHECK(cup.at(0, v00).is_zero());
  CHECK(cup.at(0, v11).is_zero());
}

TEST_CASE("a cap inside other strands acts on the right slots") {
  // cap 2 at width 1: v_a -> v_a (x) (q^-1 v1 v0 - v0 v1)
  const LaurentMatrix m = psi_gen(Layer::cap(2), 1);
  CHECK(m.at(0b010, 0b0) == P("q^-1"));
  CHECK(m.at(0b001, 0b0) == P("-1"));
  CHECK(m.at(0b110, 0b1) == P("q^-1"));
  CHECK(m.at(0b101, 0b1) == P("-1"));
  CHECK(m.nonzero_count() == 4);
  // cap 1 at width 1 puts the pair in front
  const LaurentMatrix f = psi_gen(Layer::cap(1), 1);
  CHECK(f.at(0b100, 0b0) == P("q^-1"));
  CHECK(f.at(0b011, 0b1) == P("-1"));
}

TEST_CASE("type-2 crossing block") {
  const LaurentMatrix t = psi_gen(Layer::crossing(1, 2), 2);
  CHECK(t.at(v00, v00) == P("-q^-1"));
  CHECK(t.at(v10, v01) == P("-q^-2"));
  CHECK(t.at(v01, v10) == P("-q^-2"));
  CHECK(t.at(v10, v10) == P("-q^-1 + q^-3"));
  CHECK(t.at(v11, v11) == P("-q^-1"));
  CHECK(t.nonzero_count() == 5);
}

TEST_CASE("scalar relations between crossing types") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      auto m = [&](int c, Type4Scalar t4 = Type4Scalar::kernel_shift) { return psi_gen(Layer::crossing(i, c), n, t4); };
      CHECK(m(3) == m(1).scaled(LaurentPoly::q(-3)));
      CHECK(m(4) == m(2).scaled(LaurentPoly::q(3)));
      CHECK(m(4, Type4Scalar::braiding_table) == m(2).scaled(LaurentPoly::monomial(-1, 3)));
      CHECK(m(1) * m(2) == LaurentMatrix::identity(basis_size(n)));
      CHECK(m(2) * m(1) == LaurentMatrix::identity(basis_size(n)));
    }
}

TEST_CASE("psi of small diagrams") {
  CHECK(psi(TangleDiagram::identity(3)) == LaurentMatrix::identity(8));
  const LaurentMatrix circle = psi(corpus::unknot());
  REQUIRE(circle.rows() == 1);
  CHECK(circle.at(0, 0) == P("-q^-1 - q"));
  CHECK(psi(TangleDiagram(2, 2, {Layer::crossing(1, 2), Layer::crossing(1, 1)})) == LaurentMatrix::identity(4));
}

TEST_CASE("Kauffman relation on every width") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) CHECK(kauffman_holds(i, n));
}

TEST_CASE("Jones polynomials") {
  CHECK(jones(TangleDiagram(0, 0, {})) == LaurentPoly(1));
  CHECK(jones(corpus::unknot()).to_string() == "q^-1 + q");
  CHECK(jones(braid_closure(2, {})) == P("q^-2 + 2 + q^2"));
  CHECK(jones(braid_closure(3, {})) == P("q^-3 + 3*q^-1 + 3*q + q^3"));
  // (q+q^-1)(q^-5 + q^-1) and its mirror: the two Hopf links
  CHECK(jones(braid_closure(2, {1, 1})) == (P("q + q^-1") * P("q^-5 + q^-1")));
  CHECK(jones(braid_closure(2, {-1, -1})) == (P("q + q^-1") * P("q^5 + q")));
  // trefoil: (q+q^-1)(q^-2 + q^-6 - q^-8), the usual V(t) = -t^-4 + t^-3 + t^-1 at t = q^-2, times the unknot
  CHECK(jones(braid_closure(2, {1, 1, 1})) == P("q + q^-1") * P("q^-2 + q^-6 - q^-8"));
  CHECK(jones(braid_closure(2, {-1, -1, -1})) == jones(braid_closure(2, {1, 1, 1})).bar());
  // figure-eight: V = t^2 - t + 1 - t^-1 + t^-2 is symmetric
  CHECK(jones(braid_closure(3, {1, -2, 1, -2})) == P("q + q^-1") * P("q^-4 - q^-2 + 1 - q^2 + q^4"));
  CHECK_THROWS_AS(jones(TangleDiagram(0, 2, {Layer::cap(1)})), std::invalid_argument);
}

TEST_CASE("Jones is multiplicative under connected sum") {
  const LaurentPoly unknot = jones(corpus::unknot());
  const LaurentPoly t = jones(braid_closure(2, {1, 1, 1}));
  const LaurentPoly f = jones(braid_closure(3, {1, -2, 1, -2}));
  CHECK(jones(braid_closure(4, {1, 1, 1, 2, -3, 2, -3})) * unknot == t * f);
  CHECK(jones(braid_closure(5, {1, -2, 1, -2, 3, -4, 3, -4})) * unknot == f * f);
  CHECK(jones(braid_closure(3, {1, 1, 1, 2, 2, 2})) * unknot == t * t);
  CHECK(jones(braid_closure(3, {1, 1, 1, -2, -2, -2})) * unknot == t * t.bar());
}

TEST_CASE("Jones is unchanged by single moves") {
  for (const auto& p : corpus::move_pairs()) {
    INFO(p.move);
    CHECK(jones(p.before) == jones(p.after));
  }
}
