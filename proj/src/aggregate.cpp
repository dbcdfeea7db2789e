#include "linkrank/aggregate.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace linkrank {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool try_parse_ratio(std::string_view cell, double& out) {
  cell = trim(cell);
  const auto slash = cell.find('/');
  if (slash == std::string_view::npos) return parse_number(cell, out);
  double num = 0, den = 0;
  if (!parse_number(cell.substr(0, slash), num) || !parse_number(cell.substr(slash + 1), den)) return false;
  if (den == 0) return false;
  out = num / den;
  return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

ComparisonMatrix<double> parse_csv(std::string_view doc) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t start = 0;
  while (start <= doc.size()) {
    const auto nl = doc.find('\n', start);
    const auto line = trim(doc.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    if (!line.empty()) rows.push_back(split_fields(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (rows.empty()) throw Error(ErrorCode::SyntaxError, "empty CSV document");

  std::vector<OptionId> options;
  double probe = 0;
  const bool header = std::none_of(rows.front().begin(), rows.front().end(),
                                   [&](std::string_view f) { return try_parse_ratio(f, probe); });
  if (header) {
    for (const auto f : rows.front()) options.emplace_back(f);
    rows.erase(rows.begin());
  }

  const auto n = static_cast<Eigen::Index>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::NotSquare, std::to_string(rows.size()) + " rows but a row has " +
                                            std::to_string(row.size()) + " fields");
    }
  }
  if (n == 0) throw Error(ErrorCode::NotSquare, "header row without data rows");
  if (!header) options = numbered_options(static_cast<std::size_t>(n));

  Eigen::MatrixXd entries(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      entries(i, j) = parse_ratio(rows[i][j]);
    }
  }
  return ComparisonMatrix<double>(std::move(options), std::move(entries));
}

double json_ratio(const nlohmann::json& cell) {
  if (cell.is_number()) return cell.get<double>();
  if (cell.is_string()) return parse_ratio(cell.get<std::string>());
  throw Error(ErrorCode::SyntaxError, "matrix cells must be numbers or ratio strings");
}

ComparisonMatrix<double> parse_json(std::string_view doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
    throw Error(ErrorCode::SyntaxError, "expected an object with a \"matrix\" array");
  }
  const auto& rows = j["matrix"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd entries(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw Error(ErrorCode::SyntaxError, "matrix rows must be arrays");
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::NotSquare, std::to_string(n) + " rows but a row has " + std::to_string(row.size()) +
                                            " entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) entries(i, k) = json_ratio(row[static_cast<std::size_t>(k)]);
  }
  std::vector<OptionId> options;
  if (j.contains("options")) {
    if (!j["options"].is_array()) throw Error(ErrorCode::SyntaxError, "\"options\" must be an array");
    for (const auto& o : j["options"]) {
      if (!o.is_string()) throw Error(ErrorCode::SyntaxError, "option names must be strings");
      options.push_back(o.get<std::string>());
    }
  } else {
    options = numbered_options(static_cast<std::size_t>(n));
  }
  return ComparisonMatrix<double>(std::move(options), std::move(entries));
}

}  // namespace

std::vector<OptionId> numbered_options(std::size_t n) {
  std::vector<OptionId> options;
  options.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) options.push_back(std::to_string(k));
  return options;
}

double parse_ratio(std::string_view cell) {
  double value = 0;
  if (!try_parse_ratio(cell, value)) throw Error(ErrorCode::SyntaxError, "not a number: '" + std::string(cell) + "'");
  return value;
}

ComparisonMatrix<double> parse_matrix(std::string_view document, MatrixFormat format) {
  return format == MatrixFormat::Csv ? parse_csv(document) : parse_json(document);
}

}  // namespace linkrank
