#pragma once

// Link diagrams shared by the test programs.

#include <string>
#include <vector>

#include "qtangle/tangle.hpp"

namespace corpus {

struct Entry {
  std::string name;
  qtangle::TangleDiagram diagram;
  int components;
};

inline qtangle::TangleDiagram unknot() { return qtangle::TangleDiagram(0, 0, {qtangle::Layer::cap(1), qtangle::Layer::cup(1)}); }

/// Unknot with one curl: the loop of a nested cap crosses the outer strand.
inline qtangle::TangleDiagram unknot_kink(int ctype = 2) {
  using qtangle::Layer;
  return qtangle::TangleDiagram(0, 0, {Layer::cap(1), Layer::cap(1), Layer::crossing(2, ctype), Layer::cup(1), Layer::cup(1)});
}

/// Unknot with a twist between the two strands of a single cap.
inline qtangle::TangleDiagram unknot_twist(int ctype = 3) {
  using qtangle::Layer;
  return qtangle::TangleDiagram(0, 0, {Layer::cap(1), Layer::crossing(1, ctype), Layer::cup(1)});
}

inline std::vector<Entry> links() {
  using qtangle::braid_closure;
  return {
      {"unknot", unknot(), 1},
      {"unknot, curl", unknot_kink(2), 1},
      {"unknot, twist", unknot_twist(3), 1},
      {"unknot, 1-strand braid", braid_closure(1, {}), 1},
      {"unknot, braid 2: 1", braid_closure(2, {1}), 1},
      {"unlink of 2", braid_closure(2, {}), 2},
      {"unlink of 3", braid_closure(3, {}), 3},
      {"hopf", braid_closure(2, {1, 1}), 2},
      {"hopf, mirror", braid_closure(2, {-1, -1}), 2},
      {"trefoil", braid_closure(2, {1, 1, 1}), 1},
      {"trefoil, mirror", braid_closure(2, {-1, -1, -1}), 1},
      {"figure-eight", braid_closure(3, {1, -2, 1, -2}), 1},
      {"granny", braid_closure(3, {1, 1, 1, 2, 2, 2}), 1},
      {"square", braid_closure(3, {1, 1, 1, -2, -2, -2}), 1},
      {"trefoil # figure-eight", braid_closure(4, {1, 1, 1, 2, -3, 2, -3}), 1},
      {"figure-eight # figure-eight", braid_closure(5, {1, -2, 1, -2, 3, -4, 3, -4}), 1},
  };
}

/// Link diagram pairs related by one generating move.
struct MovePair {
  std::string move;
  qtangle::TangleDiagram before;
  qtangle::TangleDiagram after;
};

inline std::vector<MovePair> move_pairs() {
  using qtangle::braid_closure;
  using qtangle::Layer;
  using qtangle::TangleDiagram;
  return {
      {"R0", unknot(), TangleDiagram(0, 0, {Layer::cap(1), Layer::cap(2), Layer::cup(1), Layer::cup(1)})},
      {"R1 curl", unknot(), unknot_kink(2)},
      {"R1 curl, other type", unknot(), unknot_kink(1)},
      {"R1 twist", unknot(), unknot_twist(3)},
      {"R1 twist, other type", unknot(), unknot_twist(4)},
      {"R1 in braid form", braid_closure(1, {}), braid_closure(2, {1})},
      {"R2", braid_closure(2, {1, 1, 1}), braid_closure(2, {1, 1, 1, 1, -1})},
      {"R2 unlink", braid_closure(2, {}), braid_closure(2, {1, -1})},
      {"R3", braid_closure(3, {1, 2, 1, -2, -1}), braid_closure(3, {2, 1, 2, -2, -1})},
      {"pitchfork", TangleDiagram(0, 0, {Layer::cap(1), Layer::cap(2), Layer::crossing(1, 1), Layer::cup(2), Layer::cup(1)}),
       TangleDiagram(0, 0, {Layer::cap(1), Layer::cap(1), Layer::crossing(2, 4), Layer::cup(2), Layer::cup(1)})},
  };
}

}  // namespace corpus
