#include "linkrank/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkrank/aggregate.hpp"
#include "linkrank/diagram.hpp"
#include "linkrank/error.hpp"
#include "linkrank/game.hpp"
#include "linkrank/io.hpp"
#include "linkrank/order.hpp"

namespace linkrank::cli {
namespace {

using Report = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string format;
  std::string method = "gm";
  std::string diagram_path;
  std::string left;
  std::string right;
  std::string output;
  std::vector<std::string> pair;
  std::string loop;
  bool check_naturality = false;
  bool json = false;
  RenderStyle style;
};

void add_style_flags(CLI::App* cmd, RenderStyle& style) {
  cmd->add_option("--row-height", style.row_height, "Lane spacing")->capture_default_str();
  cmd->add_option("--column-width", style.column_width, "Crossing column width")->capture_default_str();
  cmd->add_option("--strand-gap", style.strand_gap, "Break in the under strand")->capture_default_str();
  cmd->add_option("--stroke-width", style.stroke_width, "Loop stroke width")->capture_default_str();
  cmd->add_option("--margin", style.margin, "Outer margin")->capture_default_str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

MatrixFormat matrix_format(const Options& o) {
  if (o.format == "csv") return MatrixFormat::Csv;
  if (o.format == "json") return MatrixFormat::Json;
  return ends_with(o.input, ".json") ? MatrixFormat::Json : MatrixFormat::Csv;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::UnreadableInput, "cannot write '" + path + "'");
  f << contents;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string chain(const std::vector<OptionId>& order) {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) s += (k ? " > " : "") + order[k];
  return s;
}

Report pairs_json(const std::vector<OptionPair>& pairs) {
  Report a = Report::array();
  for (const auto& [x, y] : pairs) a.push_back({x, y});
  return a;
}

std::string pairs_text(const std::vector<OptionPair>& pairs) {
  if (pairs.empty()) return "none";
  std::string s;
  for (std::size_t k = 0; k < pairs.size(); ++k) s += (k ? ", " : "") + ("(" + pairs[k].first + ", " + pairs[k].second + ")");
  return s;
}

Report optional_json(const std::optional<OptionId>& id) { return id ? Report(*id) : Report(nullptr); }

void order_section(Report& r, const Ranking& ranking, const Tournament& t) {
  const auto nat = is_natural(ranking, t);
  r["ranking"] = ranking.order;
  r["naturality"] = nat.natural;
  r["violations"] = pairs_json(nat.violations);
  r["condorcet_winner"] = optional_json(condorcet_winner(t));
  r["condorcet_loser"] = optional_json(condorcet_loser(t));
}

void print_order_section(std::ostream& out, const Report& r) {
  out << "ranking: " << chain(r["ranking"].get<std::vector<std::string>>()) << '\n';
  out << "naturality: " << (r["naturality"].get<bool>() ? "true" : "false") << '\n';
  out << "violations: " << pairs_text(r["violations"].get<std::vector<OptionPair>>()) << '\n';
  out << "condorcet winner: " << (r["condorcet_winner"].is_null() ? "none" : r["condorcet_winner"].get<std::string>())
      << '\n';
  out << "condorcet loser: " << (r["condorcet_loser"].is_null() ? "none" : r["condorcet_loser"].get<std::string>())
      << '\n';
}

int cmd_rank(const Options& o, std::ostream& out) {
  const auto m = parse_matrix(read_file(o.input), matrix_format(o));
  const auto w = o.method == "ev" ? ev_weights(m) : gm_weights(m);
  const Ranking ranking = ranking_from_weights(w);
  const Tournament t = tournament_of(m);

  Report r;
  r["method"] = o.method;
  r["weights"] = Report::object();
  for (std::size_t k = 0; k < w.options.size(); ++k) r["weights"][w.options[k]] = w.weights(static_cast<Eigen::Index>(k));
  order_section(r, ranking, t);

  if (!o.diagram_path.empty()) write_file(o.diagram_path, render_svg(diagram(t, total_order(ranking)), o.style));

  if (o.json) {
    out << r.dump(2) << '\n';
  } else {
    out << "method: " << o.method << '\n' << "weights:\n";
    for (std::size_t k = 0; k < w.options.size(); ++k) {
      out << "  " << w.options[k] << ": " << fixed6(w.weights(static_cast<Eigen::Index>(k))) << '\n';
    }
    print_order_section(out, r);
  }
  return o.check_naturality && !r["naturality"].get<bool>() ? kNaturalityViolated : kOk;
}

Tournament comparison_tournament(const Options& o) {
  const std::string doc = read_file(o.input);
  if (matrix_format(o) == MatrixFormat::Json) {
    const auto j = nlohmann::json::parse(doc, nullptr, false);
    if (j.is_object() && j.contains("beats")) return parse_tournament_json(doc);
  }
  return tournament_of(parse_matrix(doc, matrix_format(o)));
}

int cmd_natural_rank(const Options& o, std::ostream& out) {
  const Tournament t = comparison_tournament(o);
  const Ranking ranking = hamilton_path(t);
  Report r;
  order_section(r, ranking, t);
  if (!o.diagram_path.empty()) write_file(o.diagram_path, render_svg(diagram(t, total_order(ranking)), o.style));
  if (o.json) {
    out << r.dump(2) << '\n';
  } else {
    print_order_section(out, r);
  }
  return kOk;
}

int cmd_game(const Options& o, std::ostream& out) {
  const StrategicGame g = parse_game_json(read_file(o.input));
  const auto& players = g.players();
  Report r;
  r["solutions"] = Report::array();
  for (const auto& s : solutions(g)) r["solutions"].push_back(s.label());
  r["preferences"] = Report::object();
  std::array<std::optional<Tournament>, 2> orders;
  for (int p = 0; p < 2; ++p) {
    orders[p] = preference_order(g, players[p]);
    r["preferences"][players[p]] = hamilton_path(*orders[p]).order;
  }
  r["pareto"] = Report::array();
  for (const auto& s : pareto_optimal(g)) r["pareto"].push_back(s.label());
  std::vector<OptionPair> dom;
  for (const auto& [t, s] : dominating_pairs(g)) dom.emplace_back(t.label(), s.label());
  r["dominating_pairs"] = pairs_json(dom);

  if (!o.diagram_path.empty()) write_file(o.diagram_path, render_svg(diagram(*orders[0], *orders[1]), o.style));

  if (o.json) {
    out << r.dump(2) << '\n';
  } else {
    std::string sols;
    for (const auto& s : r["solutions"]) sols += (sols.empty() ? "" : ", ") + s.get<std::string>();
    out << "solutions: " << sols << '\n';
    for (int p = 0; p < 2; ++p) {
      out << "preference " << players[p] << ": " << chain(r["preferences"][players[p]].get<std::vector<std::string>>())
          << '\n';
    }
    std::string pareto;
    for (const auto& s : r["pareto"]) pareto += (pareto.empty() ? "" : ", ") + s.get<std::string>();
    out << "pareto: {" << pareto << "}\n";
    out << "dominating pairs: " << pairs_text(dom) << '\n';
  }
  return kOk;
}

LinkDiagram two_orders(const Options& o) {
  return diagram(parse_order_json(read_file(o.left)), parse_order_json(read_file(o.right)));
}

int cmd_split(const Options& o, std::ostream& out) {
  const LinkDiagram d = two_orders(o);
  Report r;
  if (!o.pair.empty()) {
    r["pair"] = o.pair;
    r["splittable"] = splittable(d, o.pair[0], o.pair[1]);
  } else if (!o.loop.empty()) {
    r["loop"] = o.loop;
    r["splittable_from_all"] = splittable_from_all(d, o.loop);
  } else {
    r["splittable_from_all"] = Report::object();
    for (const auto& id : d.loops()) r["splittable_from_all"][id] = splittable_from_all(d, id);
    r["splittable_pairs"] = Report::array();
    for (std::size_t i = 0; i < d.loops().size(); ++i) {
      for (std::size_t j = i + 1; j < d.loops().size(); ++j) {
        if (splittable(d, d.loops()[i], d.loops()[j])) r["splittable_pairs"].push_back({d.loops()[i], d.loops()[j]});
      }
    }
  }
  if (o.json) {
    out << r.dump(2) << '\n';
    return kOk;
  }
  const auto yes_no = [](const Report& b) { return b.get<bool>() ? "true" : "false"; };
  if (!o.pair.empty()) {
    out << "splittable(" << o.pair[0] << ", " << o.pair[1] << "): " << yes_no(r["splittable"]) << '\n';
  } else if (!o.loop.empty()) {
    out << "splittable from all (" << o.loop << "): " << yes_no(r["splittable_from_all"]) << '\n';
  } else {
    for (const auto& [id, v] : r["splittable_from_all"].items()) {
      out << "splittable from all (" << id << "): " << yes_no(v) << '\n';
    }
    out << "splittable pairs: " << pairs_text(r["splittable_pairs"].get<std::vector<OptionPair>>()) << '\n';
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const std::string svg = render_svg(two_orders(o), o.style);
  if (o.output.empty()) {
    out << svg;
  } else {
    write_file(o.output, svg);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rankings, naturality and Pareto analysis on two-block link diagrams", "linkrank"};
  app.require_subcommand(1, 1);
  Options o;

  auto* rank = app.add_subcommand("rank", "Aggregate a pairwise comparison matrix into a ranking");
  rank->add_option("--input", o.input, "Matrix file (CSV or JSON)")->required();
  rank->add_option("--format", o.format, "csv | json (default: by extension)")->check(CLI::IsMember({"csv", "json"}));
  rank->add_option("--method", o.method, "gm | ev")->check(CLI::IsMember({"gm", "ev"}))->capture_default_str();
  rank->add_flag("--check-naturality", o.check_naturality, "Exit 3 when the ranking is not natural");
  rank->add_option("--diagram", o.diagram_path, "Write the comparison/ranking diagram as SVG");
  rank->add_flag("--json", o.json, "Machine-readable report");
  add_style_flags(rank, o.style);

  auto* natural = app.add_subcommand("natural-rank", "Hamilton-path ranking, always natural");
  natural->add_option("--input", o.input, "Matrix (CSV/JSON) or tournament JSON")->required();
  natural->add_option("--format", o.format, "csv | json (default: by extension)")->check(CLI::IsMember({"csv", "json"}));
  natural->add_option("--diagram", o.diagram_path, "Write the comparison/ranking diagram as SVG");
  natural->add_flag("--json", o.json, "Machine-readable report");
  add_style_flags(natural, o.style);

  auto* game = app.add_subcommand("game", "Pareto analysis of a two-player strategic game");
  game->add_option("--input", o.input, "Game JSON")->required();
  game->add_option("--diagram", o.diagram_path, "Write the preference diagram as SVG");
  game->add_flag("--json", o.json, "Machine-readable report");
  add_style_flags(game, o.style);

  auto* split = app.add_subcommand("split", "Splittability queries on a diagram built from two order files");
  split->add_option("--left", o.left, "Left block order (tournament or {\"order\": [...]} JSON)")->required();
  split->add_option("--right", o.right, "Right block order")->required();
  auto* pair = split->add_option("--pair", o.pair, "Two loops")->expected(2);
  split->add_option("--loop", o.loop, "One loop, tested against all others")->excludes(pair);
  split->add_flag("--json", o.json, "Machine-readable report");

  auto* render = app.add_subcommand("render", "Render a diagram from two order files");
  render->add_option("--left", o.left, "Left block order")->required();
  render->add_option("--right", o.right, "Right block order")->required();
  render->add_option("--output", o.output, "SVG path (default: stdout)");
  add_style_flags(render, o.style);

  std::vector<std::string> argv_storage{"linkrank"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (rank->parsed()) return cmd_rank(o, out);
    if (natural->parsed()) return cmd_natural_rank(o, out);
    if (game->parsed()) return cmd_game(o, out);
    if (split->parsed()) return cmd_split(o, out);
    return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace linkrank::cli
