#pragma once

#include "linkrank/game.hpp"

namespace fixtures {

// Years of imprisonment; rows: A confesses / keeps silent, columns: B
// confesses / keeps silent.
inline linkrank::StrategicGame prisoners_dilemma(linkrank::Orientation o = linkrank::Orientation::Cost) {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 4, 1, 5, 2;
  b << 4, 5, 1, 2;
  return linkrank::StrategicGame({"A", "B"}, {{{"C", "S"}, {"C", "S"}}}, {a, b}, o);
}

}  // namespace fixtures
