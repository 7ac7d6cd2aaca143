#include "tdss/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace tdss {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

TemporalGraph read_tg(std::istream& in) {
  std::vector<std::tuple<std::string, std::string, TimeLabel>> triples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string tail;
    if (!(row >> tail) || tail[0] == '#') continue;
    std::string head, label_text, excess;
    if (!(row >> head >> label_text))
      parse_fail(lineno, "expected `tail head label`");
    if (row >> excess) parse_fail(lineno, "trailing tokens after label");
    TimeLabel label = 0;
    try {
      std::size_t used = 0;
      label = std::stoll(label_text, &used);
      if (used != label_text.size()) throw std::invalid_argument(label_text);
    } catch (const std::exception&) {
      parse_fail(lineno, "label `" + label_text + "` is not an integer");
    }
    if (label < 0) parse_fail(lineno, "label must be non-negative");
    if (tail == head) parse_fail(lineno, "self-loop on vertex " + tail);
    triples.emplace_back(std::move(tail), std::move(head), label);
  }
  return build_graph(triples);
}

TemporalGraph read_tg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return read_tg(in);
}

TemporalGraph parse_tg(const std::string& text) {
  std::istringstream in(text);
  return read_tg(in);
}

void write_tg(std::ostream& out, const TemporalGraph& g) {
  for (const auto& e : g.edges())
    out << g.name(e.tail) << ' ' << g.name(e.head) << ' ' << e.label << '\n';
}

std::string to_tg(const TemporalGraph& g) {
  std::ostringstream out;
  write_tg(out, g);
  return out.str();
}

}  // namespace tdss
