#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "qtangle/tangle.hpp"

using namespace qtangle;

namespace {

// Cycles of the permutation a braid word induces on its strands.
int permutation_cycles(int strands, const std::vector<int>& word) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : word) {
    const int k = std::abs(letter);
    std::swap(perm[static_cast<std::size_t>(k - 1)], perm[static_cast<std::size_t>(k)]);
  }
  std::vector<bool> seen(perm.size());
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
  }
  return cycles;
}

}  // namespace

TEST_CASE("validation rejects layers that do not fit") {
  CHECK_NOTHROW(TangleDiagram(0, 2, {Layer::cap(1)}));
  CHECK_NOTHROW(TangleDiagram(2, 4, {Layer::cap(3)}));
  CHECK_THROWS_AS(TangleDiagram(2, 4, {Layer::cap(4)}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram(0, 0, {Layer::cup(1)}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram(1, 1, {Layer::crossing(1, 2)}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram(2, 2, {Layer::crossing(1, 5)}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram(2, 2, {Layer::crossing(2, 1)}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram(0, 2, {}), ValidationError);
  try {
    TangleDiagram(2, 2, {Layer::crossing(1, 1), Layer::cup(2)});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.layer_index() == 1);
    CHECK(e.expected() == 1);
    CHECK(e.actual() == 2);
  }
}

TEST_CASE("widths and crossing bookkeeping") {
  const TangleDiagram t = braid_closure(2, {1, -1, 1});
  CHECK(t.widths() == std::vector<int>{0, 2, 4, 4, 4, 4, 2, 0});
  CHECK(t.crossing_layers() == std::vector<std::size_t>{2, 3, 4});
  CHECK(t.crossing_count() == 3);
  const CrossingCounts c = crossing_counts(t);
  CHECK(c.k == std::array<int, 4>{1, 2, 0, 0});
  CHECK(c.r == 1 - 2);
  CHECK(c.s == -1 + 4);
  CHECK(c.n_plus() == 1);
  CHECK(c.n_minus() == 2);
}

TEST_CASE("braid closure layout") {
  const TangleDiagram t = braid_closure(3, {1, -2});
  const std::vector<Layer> want{Layer::cap(1),        Layer::cap(2), Layer::cap(3), Layer::crossing(4, 2),
                                Layer::crossing(5, 1), Layer::cup(3), Layer::cup(2), Layer::cup(1)};
  CHECK(t.layers() == want);
  CHECK_THROWS_AS(braid_closure(2, {2}), std::invalid_argument);
  CHECK_THROWS_AS(braid_closure(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(braid_closure(0, {}), std::invalid_argument);
}

TEST_CASE("component count of braid closures matches the permutation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int strands = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> word;
    if (strands > 1)
      for (int n = std::uniform_int_distribution<int>(0, 8)(rng); n > 0; --n) {
        const int k = std::uniform_int_distribution<int>(1, strands - 1)(rng);
        word.push_back(rng() % 2 ? k : -k);
      }
    CHECK(component_count(braid_closure(strands, word)) == permutation_cycles(strands, word));
  }
  for (const auto& e : corpus::links()) {
    INFO(e.name);
    CHECK(component_count(e.diagram) == e.components);
  }
}

TEST_CASE("mirror reverses layers and switches crossings") {
  const TangleDiagram t(1, 3, {Layer::cap(2), Layer::crossing(1, 1), Layer::crossing(2, 3)});
  const TangleDiagram m = mirror(t);
  CHECK(m.source_width() == 3);
  CHECK(m.target_width() == 1);
  CHECK(m.layers() == std::vector<Layer>{Layer::crossing(2, 4), Layer::crossing(1, 2), Layer::cup(2)});
  CHECK(mirror(m) == t);
  for (int c = 1; c <= 4; ++c) CHECK(mirror_type(mirror_type(c)) == c);
  const CrossingCounts a = crossing_counts(t), b = crossing_counts(m);
  CHECK(b.r == -a.r);
  CHECK(b.n_plus() == a.n_minus());
}

TEST_CASE("compose stacks layers") {
  const TangleDiagram cap(0, 2, {Layer::cap(1)}), cup(2, 0, {Layer::cup(1)});
  CHECK(compose(cap, cup) == corpus::unknot());
  CHECK_THROWS_AS(compose(cap, cap), std::invalid_argument);
}

TEST_CASE("smoothings by unoriented class") {
  CHECK(unoriented_class(1) == CrossingClass::A);
  CHECK(unoriented_class(3) == CrossingClass::A);
  CHECK(unoriented_class(2) == CrossingClass::B);
  CHECK(unoriented_class(4) == CrossingClass::B);
  for (int c = 1; c <= 4; ++c) CHECK(smoothing(c, false) != smoothing(c, true));
  CHECK(smoothing(2, false) == Smoothing::horizontal);
  CHECK(smoothing(1, false) == Smoothing::vertical);
  CHECK_THROWS_AS(unoriented_class(0), std::invalid_argument);
}

TEST_CASE("circles of resolved diagrams") {
  // counted by hand on the closed 2-braid
  const TangleDiagram hopf = braid_closure(2, {1, 1});
  const auto count = [&](std::uint32_t m) { return trace_circles(resolve(hopf, Resolution{m})).circle_count; };
  // type 2: 0-smoothing is horizontal
  CHECK(count(0b00) == 2);
  CHECK(count(0b01) == 1);
  CHECK(count(0b10) == 1);
  CHECK(count(0b11) == 2);
  CHECK(trace_circles(resolve(braid_closure(3, {}), {})).circle_count == 3);
  CHECK_THROWS_AS(resolve(hopf, Resolution{0b100}), std::invalid_argument);

  const CircleTrace arcs = trace_circles(CrossinglessDiagram(TangleDiagram(2, 2, {Layer::cup(1), Layer::cap(1)})));
  CHECK(arcs.circle_count == 0);
  CHECK(arcs.arc_count == 2);
  CHECK(arcs.open_strands == std::vector<int>{0, 0, 1, 1});
  CHECK_THROWS_AS(CrossinglessDiagram(hopf), std::invalid_argument);
}

TEST_CASE("smoothing a single crossing") {
  const TangleDiagram trefoil = braid_closure(2, {1, 1, 1});
  // type 2: the 0-smoothing cuts the closed braid open, the 1-smoothing leaves sigma_1^2
  const TangleDiagram k0 = smooth_one(trefoil, 1, false);
  CHECK(k0.crossing_count() == 2);
  CHECK(k0.layers().size() == trefoil.layers().size() + 1);
  CHECK(component_count(k0) == 1);
  const TangleDiagram k1 = smooth_one(trefoil, 1, true);
  CHECK(k1 == braid_closure(2, {1, 1}));
  CHECK(component_count(k1) == 2);
  CHECK_THROWS_AS(smooth_one(trefoil, 3, true), std::out_of_range);
}

TEST_CASE("marks") {
  const TangleDiagram t = braid_closure(2, {1, 1, 1});
  CHECK(mark_from_cap(t, 1, 1) == Mark{1, 1});
  CHECK(mark_from_cap(t, 2, 2) == Mark{2, 3});
  CHECK_THROWS_AS(mark_from_cap(t, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(mark_from_cap(t, 1, 3), std::invalid_argument);
  CHECK_NOTHROW(check_mark(t, {4, 4}));
  CHECK_THROWS_AS(check_mark(t, {0, 1}), std::invalid_argument);
  const Mark m = mirror_mark(t, {1, 1});
  CHECK(m == Mark{t.layers().size() - 1, 1});
  CHECK_NOTHROW(check_mark(mirror(t), m));
}
