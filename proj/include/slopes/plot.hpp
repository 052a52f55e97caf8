#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopes/slope_sets.hpp"

namespace slopes {

// Number-line plots. Filled dots are set members, open circles are excluded
// accumulation points, green dots are members of the row's highlight set.
enum class PointClass { member, limit, green };

struct PlotPoint {
  Rational value;
  PointClass cls;
  friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

struct PlotRow {
  std::string label;
  std::vector<PlotPoint> points;  // sorted ascending by value
  friend bool operator==(const PlotRow&, const PlotRow&) = default;
};

struct PlotSpec {
  RationalInterval window;  // bounded
  std::vector<PlotRow> rows;
  friend bool operator==(const PlotSpec&, const PlotSpec&) = default;
};

// One row recipe of a built-in figure: which set, under which caps, with
// which highlight.
struct FigureRowSpec {
  std::string label;
  SlopeSetDescriptor desc;
  EnumerationWindow window;
  std::optional<SlopeSetDescriptor> highlight;
  bool limit_circles = false;
};

struct FigureDef {
  int id;
  RationalInterval window;
  std::vector<FigureRowSpec> rows;
};

// The five built-in figures:
//   1  genus-one union set, highlight L1
//   2  genus-two union set, highlight L2
//   3  genus-two rows M(2,1), M(2,2), M(2,4), M(2), no highlight
//   4  genus-one rows Z, M(1,1), M(1,2), M(1,4), M(1), highlight L1
//   5  genus-two rows M(2,1), M(2,2), M(2,4), M(2), highlight L2
// Caps are fixed constants so output is reproducible bit for bit.
FigureDef figure_def(int id);  // throws std::invalid_argument on unknown id

// Expands a row recipe: enumerate the set, classify against the highlight,
// and add the excluded accumulation points for fixed-level rows.
PlotRow build_row(const FigureRowSpec& row);

PlotSpec figure_spec(int id);

std::string render_svg(const PlotSpec& spec);
std::string render_ascii(const PlotSpec& spec);

// Convenience: figure_spec + the chosen emitter.
std::string render_figure(int id, bool as_svg);

}  // namespace slopes
