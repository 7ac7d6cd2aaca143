#pragma once

#include <iosfwd>
#include <string>

#include "tdss/core.hpp"

namespace tdss {

// tg-v1: one temporal edge per line, `tail head label`, whitespace separated.
// Lines whose first non-blank character is `#` and blank lines are ignored.
// Parse failures throw ParseError and name the offending 1-based line.
TemporalGraph read_tg(std::istream& in);
TemporalGraph read_tg_file(const std::string& path);
TemporalGraph parse_tg(const std::string& text);

void write_tg(std::ostream& out, const TemporalGraph& g);
std::string to_tg(const TemporalGraph& g);

}  // namespace tdss
