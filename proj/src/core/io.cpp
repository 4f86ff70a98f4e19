#include "core/io.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace latin {

namespace {

std::vector<std::vector<std::string>> content_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    raise(Errc::parse_error, std::string("bad ") + what + ": '" + tok + "'");
  return value;
}

// Shared grid reader; `allow_empty` admits '.' and '-' cells.
std::pair<int, std::vector<int>> parse_grid(std::string_view text, bool allow_empty) {
  auto lines = content_lines(text);
  if (lines.empty()) raise(Errc::parse_error, "no content lines");
  int n = -1;
  size_t first_row = 0;
  const auto& head = lines.front();
  if (head.size() == 1 && head[0].rfind("n=", 0) == 0) {
    n = parse_int(head[0].substr(2), "order");
    first_row = 1;
  } else {
    n = static_cast<int>(head.size());
  }
  if (n < 1) raise(Errc::parse_error, "order must be >= 1");
  if (lines.size() - first_row != static_cast<size_t>(n))
    raise(Errc::parse_error, "expected " + std::to_string(n) + " rows, found " +
                                 std::to_string(lines.size() - first_row));
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (size_t i = first_row; i < lines.size(); ++i) {
    if (lines[i].size() != static_cast<size_t>(n))
      raise(Errc::parse_error, "row " + std::to_string(i - first_row) + " has " +
                                   std::to_string(lines[i].size()) + " entries, expected " +
                                   std::to_string(n));
    for (const std::string& tok : lines[i]) {
      if (allow_empty && (tok == "." || tok == "-")) {
        cells.push_back(-1);
        continue;
      }
      cells.push_back(parse_int(tok, "cell"));
    }
  }
  return {n, std::move(cells)};
}

}  // namespace

LatinSquare parse_square_text(std::string_view text) {
  auto [n, cells] = parse_grid(text, false);
  return LatinSquare::from_cells(n, std::move(cells));
}

std::string format_square_text(const LatinSquare& l, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "n=" << l.order() << '\n';
  for (int r = 0; r < l.order(); ++r) {
    for (int c = 0; c < l.order(); ++c) {
      if (c) os << ' ';
      os << l.at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

PartialLatinSquare parse_partial_text(std::string_view text) {
  auto [n, cells] = parse_grid(text, true);
  std::vector<Triple> triples;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int s = cells[r * n + c];
      if (s >= 0) triples.push_back({r, c, s});
    }
  return PartialLatinSquare::from_triples(n, std::move(triples));
}

std::string format_partial_text(const PartialLatinSquare& p) {
  std::ostringstream os;
  os << "n=" << p.order() << '\n';
  for (int r = 0; r < p.order(); ++r) {
    for (int c = 0; c < p.order(); ++c) {
      if (c) os << ' ';
      auto s = p.at(r, c);
      if (s)
        os << *s;
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

std::string format_trade_json(const LatinTrade& t) {
  nlohmann::ordered_json j;
  j["n"] = t.order();
  j["cells"] = nlohmann::ordered_json::array();
  const auto& trade = t.trade().triples();
  const auto& mate = t.mate().triples();
  for (size_t i = 0; i < trade.size(); ++i) {
    nlohmann::ordered_json cell;
    cell["row"] = trade[i].row;
    cell["col"] = trade[i].col;
    cell["from"] = trade[i].sym;
    cell["to"] = mate[i].sym;
    j["cells"].push_back(std::move(cell));
  }
  return j.dump();
}

LatinTrade parse_trade_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("bad trade json: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<Triple> trade, mate;
    for (const auto& cell : j.at("cells")) {
      const int r = cell.at("row").get<int>();
      const int c = cell.at("col").get<int>();
      trade.push_back({r, c, cell.at("from").get<int>()});
      mate.push_back({r, c, cell.at("to").get<int>()});
    }
    return LatinTrade::make(PartialLatinSquare::from_triples(n, std::move(trade)),
                            PartialLatinSquare::from_triples(n, std::move(mate)));
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("bad trade json: ") + e.what());
  }
}

}  // namespace latin
