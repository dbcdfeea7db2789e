#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkrank/tournament.hpp"

namespace linkrank {

// Loops crossing twice pairwise: once in the left block, once in the right.
// At each crossing the loop of the preceding option passes over.
class LinkDiagram {
 public:
  // Throws OptionSetMismatch unless both tournaments share one option set.
  // Loops take the left tournament's option order.
  LinkDiagram(Tournament left, Tournament right);

  const std::vector<OptionId>& loops() const noexcept { return left_.options(); }
  const Tournament& left() const noexcept { return left_; }
  const Tournament& right() const noexcept { return right_; }

 private:
  Tournament left_;
  Tournament right_;
};

LinkDiagram diagram(Tournament left, Tournament right);

// The two crossings of i and j share their over strand. Throws SameLoop,
// UnknownOption.
bool splittable(const LinkDiagram& d, const OptionId& i, const OptionId& j);
bool splittable_from_all(const LinkDiagram& d, const OptionId& i);

// No loop lies above s in the left block and is splittable from it.
bool pareto_by_diagram(const LinkDiagram& d, const OptionId& s);

// Lengths in SVG user units.
struct RenderStyle {
  double strand_gap = 8;
  double column_width = 40;
  double row_height = 40;
  double stroke_width = 2;
  double margin = 20;
};

// Throws InvalidStyle.
void validate(const RenderStyle& style);

enum class Block { Left, Right };

struct Crossing {
  Block block;
  OptionId over;
  OptionId under;

  bool operator==(const Crossing&) const = default;
};

// Crossings in drawing order: the left block's odd-even transposition
// network reverses the lane order, the right block's restores it.
std::vector<Crossing> crossings(const LinkDiagram& d);

// Standalone SVG 1.1 document. Loops are drawn as a closed braid over
// horizontal lanes; under strands are broken by style.strand_gap. Every
// crossing carries data-block, data-over and data-under attributes.
std::string render_svg(const LinkDiagram& d, const RenderStyle& style = {});

// Recovers the crossing annotations of a document produced by render_svg.
std::vector<Crossing> read_crossings(std::string_view svg);

}  // namespace linkrank
