#pragma once

// Data behind the two propagator figures: D_F(0, r) against r for D = 1..5
// and D_F(t, 0) against t for D = 1..3.

#include <vector>

#include "propkit/grid.hpp"

namespace propkit {

struct AxisGrid {
  double lo;
  double hi;
  int count;
};

inline constexpr AxisGrid kFigure1Grid{0.1, 5.0, 200};
inline constexpr AxisGrid kFigure2Grid{0.1, 15.0, 500};
inline constexpr int kFigure1MaxD = 5;
inline constexpr int kFigure2MaxD = 3;

struct Figure1Row {
  int D;
  double r;
  double value;
};

struct Figure2Row {
  int D;
  double t;
  Complex value;
};

/// Rows ordered by D, then r. Requires lo > 0, count >= 2.
std::vector<Figure1Row> figure1_rows(double m = 1.0, AxisGrid grid = kFigure1Grid);
/// Rows ordered by D, then t. Requires lo > 0, count >= 2.
std::vector<Figure2Row> figure2_rows(double m = 1.0, AxisGrid grid = kFigure2Grid);

/// Number of strict sign changes along the sequence, zeros skipped.
int sign_changes(const std::vector<double>& values);

}  // namespace propkit
