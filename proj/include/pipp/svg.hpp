#pragma once

#include <string>
#include <vector>

#include "pipp/sweep.hpp"

namespace pipp {

struct FigurePanel {
  std::string title;
  SweepTable table;
};

/// Static SVG with one panel per table laid out side by side: solid λ_DPP
/// curve, dashed λ_PS curve and, when present, a q1/median/q3 box per row.
std::string render_figure(const std::vector<FigurePanel>& panels);

}  // namespace pipp
