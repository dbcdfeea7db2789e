#pragma once

#include <string>
#include <string_view>

#include "linkrank/game.hpp"
#include "linkrank/order.hpp"
#include "linkrank/tournament.hpp"

namespace linkrank {

// {"options": [...], "beats": [[winner, loser], ...]}
Tournament parse_tournament_json(std::string_view document);
std::string tournament_json(const Tournament& t);

// A tournament document, or {"order": [...]} read as a total order.
Tournament parse_order_json(std::string_view document);

// {"players": [A, B], "strategies": {A: [...], B: [...]},
//  "orientation": "cost" | "utility", "outcomes": {A: [[...]], B: [[...]]}}
// Outcome rows follow the first player's strategies, columns the second's.
StrategicGame parse_game_json(std::string_view document);

// Reads a whole file; throws Error(UnreadableInput) when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace linkrank
