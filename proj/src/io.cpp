#include "linkrank/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "linkrank/error.hpp"

namespace linkrank {
namespace {

using nlohmann::json;

json parse(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::SyntaxError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::string> strings(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::SyntaxError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::SyntaxError, std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Eigen::MatrixXd table(const json& j, std::size_t rows, std::size_t cols, const std::string& player) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorCode::MalformedGame, "outcomes of '" + player + "' need " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t a = 0; a < rows; ++a) {
    const auto& row = j[a];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::MalformedGame,
                  "outcomes of '" + player + "' need " + std::to_string(cols) + " columns per row");
    }
    for (std::size_t b = 0; b < cols; ++b) {
      if (!row[b].is_number()) throw Error(ErrorCode::SyntaxError, "outcomes must be numbers");
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = row[b].get<double>();
    }
  }
  return m;
}

}  // namespace

Tournament parse_tournament_json(std::string_view document) {
  const json j = parse(document);
  auto options = strings(field(j, "options"), "\"options\"");
  const auto& beats = field(j, "beats");
  if (!beats.is_array()) throw Error(ErrorCode::SyntaxError, "\"beats\" must be an array");
  std::vector<OptionPair> pairs;
  for (const auto& p : beats) {
    const auto pair = strings(p, "each beats entry");
    if (pair.size() != 2) throw Error(ErrorCode::SyntaxError, "each beats entry must be [winner, loser]");
    pairs.emplace_back(pair[0], pair[1]);
  }
  return Tournament(std::move(options), pairs);
}

std::string tournament_json(const Tournament& t) {
  json j;
  j["options"] = t.options();
  j["beats"] = json::array();
  for (const auto& [w, l] : t.beats_pairs()) j["beats"].push_back({w, l});
  return j.dump();
}

Tournament parse_order_json(std::string_view document) {
  const json j = parse(document);
  if (j.is_object() && j.contains("order")) {
    return total_order(Ranking{strings(j.at("order"), "\"order\"")});
  }
  return parse_tournament_json(document);
}

StrategicGame parse_game_json(std::string_view document) {
  const json j = parse(document);
  const auto players = strings(field(j, "players"), "\"players\"");
  if (players.size() != 2) throw Error(ErrorCode::MalformedGame, "exactly two players are supported");

  const auto& strat = field(j, "strategies");
  const auto& outs = field(j, "outcomes");
  std::array<std::vector<std::string>, 2> strategies;
  for (int p = 0; p < 2; ++p) strategies[p] = strings(field(strat, players[p].c_str()), "strategies");

  Orientation orientation = Orientation::Cost;
  if (j.contains("orientation")) {
    const auto& o = j.at("orientation");
    if (o == "cost") {
      orientation = Orientation::Cost;
    } else if (o == "utility") {
      orientation = Orientation::Utility;
    } else {
      throw Error(ErrorCode::SyntaxError, "\"orientation\" must be \"cost\" or \"utility\"");
    }
  }

  std::array<Eigen::MatrixXd, 2> outcomes;
  for (int p = 0; p < 2; ++p) {
    outcomes[p] = table(field(outs, players[p].c_str()), strategies[0].size(), strategies[1].size(), players[p]);
  }
  return StrategicGame({players[0], players[1]}, std::move(strategies), std::move(outcomes), orientation);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::UnreadableInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace linkrank
