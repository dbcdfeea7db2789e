#include "linkrank/diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <regex>
#include <sstream>

#include "linkrank/error.hpp"

namespace linkrank {

LinkDiagram::LinkDiagram(Tournament left, Tournament right) : left_(std::move(left)), right_(std::move(right)) {
  if (!same_option_set(left_.options(), right_.options())) {
    throw Error(ErrorCode::OptionSetMismatch, "left and right blocks range over different options");
  }
}

LinkDiagram diagram(Tournament left, Tournament right) { return LinkDiagram(std::move(left), std::move(right)); }

bool splittable(const LinkDiagram& d, const OptionId& i, const OptionId& j) {
  const auto li = d.left().index_of(i);
  const auto lj = d.left().index_of(j);
  if (li == lj) throw Error(ErrorCode::SameLoop, "'" + i + "' cannot be split from itself");
  return d.left().beats(li, lj) == d.right().beats(i, j);
}

bool splittable_from_all(const LinkDiagram& d, const OptionId& i) {
  d.left().index_of(i);
  return std::all_of(d.loops().begin(), d.loops().end(),
                     [&](const OptionId& j) { return j == i || splittable(d, i, j); });
}

bool pareto_by_diagram(const LinkDiagram& d, const OptionId& s) {
  d.left().index_of(s);
  return std::none_of(d.loops().begin(), d.loops().end(), [&](const OptionId& t) {
    return t != s && d.left().beats(t, s) && splittable(d, t, s);
  });
}

void validate(const RenderStyle& style) {
  const std::array<double, 5> lengths{style.strand_gap, style.column_width, style.row_height, style.stroke_width,
                                      style.margin};
  for (const double v : lengths) {
    if (!std::isfinite(v) || !(v > 0)) throw Error(ErrorCode::InvalidStyle, "style lengths must be positive");
  }
  if (!(style.strand_gap > style.stroke_width)) {
    throw Error(ErrorCode::InvalidStyle, "strand_gap must exceed stroke_width");
  }
}

namespace {

// One adjacent swap of the transposition network.
struct Swap {
  Block block;
  int column;      // global column index
  int lane;        // upper lane of the swapped pair
  std::size_t up;  // loop moving down from `lane` to `lane + 1`
  std::size_t down;
};

// Lane k initially carries loop k. The left block sorts lanes into
// descending loop order, the right block back into ascending order; with n
// rounds each the odd-even network swaps every pair exactly once per block.
std::vector<Swap> braid(std::size_t n) {
  std::vector<std::size_t> lane(n);
  std::iota(lane.begin(), lane.end(), std::size_t{0});
  std::vector<Swap> swaps;
  const int rounds = static_cast<int>(n);
  for (const Block block : {Block::Left, Block::Right}) {
    const int offset = block == Block::Left ? 0 : rounds + 1;
    for (int r = 0; r < rounds; ++r) {
      for (std::size_t p = static_cast<std::size_t>(r % 2); p + 1 < n; p += 2) {
        const bool out_of_order = block == Block::Left ? lane[p] < lane[p + 1] : lane[p] > lane[p + 1];
        if (!out_of_order) continue;
        swaps.push_back({block, offset + r, static_cast<int>(p), lane[p], lane[p + 1]});
        std::swap(lane[p], lane[p + 1]);
      }
    }
  }
  return swaps;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_xml(std::string_view s) {
  static const std::array<std::pair<std::string_view, char>, 5> entities{
      {{"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''}}};
  std::string out;
  for (std::size_t k = 0; k < s.size();) {
    bool matched = false;
    if (s[k] == '&') {
      for (const auto& [entity, c] : entities) {
        if (s.substr(k, entity.size()) == entity) {
          out += c;
          k += entity.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) out += s[k++];
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct Point {
  double x;
  double y;
};

class PathBuilder {
 public:
  void move(Point p) { append('M', p); }
  void line(Point p) { append('L', p); }
  std::string str() const { return out_.str(); }

 private:
  void append(char op, Point p) {
    if (!first_) out_ << ' ';
    first_ = false;
    out_ << op << num(p.x) << ',' << num(p.y);
  }
  std::ostringstream out_;
  bool first_ = true;
};

}  // namespace

std::vector<Crossing> crossings(const LinkDiagram& d) {
  std::vector<Crossing> out;
  const Tournament& left = d.left();
  for (const auto& s : braid(d.loops().size())) {
    const OptionId& a = d.loops()[s.up];
    const OptionId& b = d.loops()[s.down];
    const bool a_over = s.block == Block::Left ? left.beats(s.up, s.down) : d.right().beats(a, b);
    out.push_back({s.block, a_over ? a : b, a_over ? b : a});
  }
  return out;
}

std::string render_svg(const LinkDiagram& d, const RenderStyle& style) {
  validate(style);
  const auto& loops = d.loops();
  const std::size_t n = loops.size();
  const int rounds = static_cast<int>(n);
  const int columns = 2 * rounds + 1;  // left block, spacer, right block

  std::size_t longest = 0;
  for (const auto& id : loops) longest = std::max(longest, id.size());
  const double label_width = 8.0 * static_cast<double>(longest) + 12.0;
  const double nest = style.row_height / 2;  // spacing of the closing arcs
  const double dn = static_cast<double>(n);

  const double x_start = style.margin + label_width + dn * nest;
  const double x_braid = x_start + style.column_width / 2;
  const double x_end = x_braid + columns * style.column_width + style.column_width / 2;
  const double y_first = style.margin + (dn + 1) * nest;
  const auto lane_y = [&](double lane) { return y_first + lane * style.row_height; };
  const double width = x_end + dn * nest + style.margin;
  const double height = lane_y(dn - 1) + style.margin;

  const auto swaps = braid(n);
  const auto crossing_list = crossings(d);

  // Per loop: the swap it takes part in at each column, if any.
  std::vector<std::vector<const Swap*>> at_column(n, std::vector<const Swap*>(columns, nullptr));
  std::vector<bool> up_is_under(swaps.size());
  for (std::size_t k = 0; k < swaps.size(); ++k) {
    const auto& s = swaps[k];
    at_column[s.up][s.column] = &s;
    at_column[s.down][s.column] = &s;
    up_is_under[k] = crossing_list[k].over != loops[s.up];
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";

  svg << "<g id=\"loops\" fill=\"none\" stroke-width=\"" << num(style.stroke_width)
      << "\" stroke-linecap=\"butt\" stroke-linejoin=\"round\">\n";
  const double half_gap = style.strand_gap / 2;
  for (std::size_t loop = 0; loop < n; ++loop) {
    const double home = lane_y(static_cast<double>(loop));
    const double reach = (static_cast<double>(loop) + 1) * nest;
    PathBuilder path;
    path.move({x_start, home});
    path.line({x_braid, home});
    double lane = static_cast<double>(loop);
    for (int c = 0; c < columns; ++c) {
      const Swap* s = at_column[loop][c];
      const double x0 = x_braid + c * style.column_width;
      if (s == nullptr) continue;
      const double next = s->up == loop ? lane + 1 : lane - 1;
      const Point from{x0, lane_y(lane)};
      const Point to{x0 + style.column_width, lane_y(next)};
      path.line(from);
      const bool under = up_is_under[static_cast<std::size_t>(s - swaps.data())] == (s->up == loop);
      if (under) {
        const Point mid{(from.x + to.x) / 2, (from.y + to.y) / 2};
        const double len = std::hypot(to.x - from.x, to.y - from.y);
        const double ux = (to.x - from.x) / len;
        const double uy = (to.y - from.y) / len;
        path.line({mid.x - ux * half_gap, mid.y - uy * half_gap});
        path.move({mid.x + ux * half_gap, mid.y + uy * half_gap});
      }
      path.line(to);
      lane = next;
    }
    path.line({x_end, home});
    path.line({x_end + reach, home});
    path.line({x_end + reach, y_first - reach});
    path.line({x_start - reach, y_first - reach});
    path.line({x_start - reach, home});
    path.line({x_start, home});
    svg << "<path class=\"loop\" data-loop=\"" << escape_xml(loops[loop]) << "\" stroke=\""
        << kPalette[loop % kPalette.size()] << "\" d=\"" << path.str() << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g id=\"crossings\">\n";
  for (std::size_t k = 0; k < swaps.size(); ++k) {
    const auto& s = swaps[k];
    const auto& c = crossing_list[k];
    const double cx = x_braid + (s.column + 0.5) * style.column_width;
    const double cy = lane_y(s.lane + 0.5);
    svg << "<circle class=\"crossing\" data-block=\"" << (c.block == Block::Left ? 'L' : 'R') << "\" data-over=\""
        << escape_xml(c.over) << "\" data-under=\"" << escape_xml(c.under) << "\" cx=\"" << num(cx) << "\" cy=\""
        << num(cy) << "\" r=\"" << num(half_gap) << "\" fill=\"none\" stroke=\"none\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t loop = 0; loop < n; ++loop) {
    svg << "<text x=\"" << num(style.margin) << "\" y=\"" << num(lane_y(static_cast<double>(loop)) + 4)
        << "\" fill=\"" << kPalette[loop % kPalette.size()] << "\">" << escape_xml(loops[loop]) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::vector<Crossing> read_crossings(std::string_view svg) {
  static const std::regex pattern(
      R"re(<circle class="crossing" data-block="([LR])" data-over="([^"]*)" data-under="([^"]*)")re");
  std::vector<Crossing> out;
  const std::string text(svg);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out.push_back({m[1] == "L" ? Block::Left : Block::Right, unescape_xml(m[2].str()), unescape_xml(m[3].str())});
  }
  return out;
}

}  // namespace linkrank
