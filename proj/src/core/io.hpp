#pragma once

#include <string>
#include <string_view>

#include "core/trade.hpp"

namespace latin {

/// Square text format: optional first line "n=<order>", then n lines of n
/// whitespace-separated integers. Blank lines and lines starting with '#'
/// are ignored.
LatinSquare parse_square_text(std::string_view text);

/// Emits "n=<order>" and the n rows; `comments` are prepended as '#' lines.
std::string format_square_text(const LatinSquare& l,
                               const std::vector<std::string>& comments = {});

/// Same shape as the square text format, with '.' (or '-') marking an empty
/// cell.
PartialLatinSquare parse_partial_text(std::string_view text);

std::string format_partial_text(const PartialLatinSquare& p);

/// Trade structured format:
/// {"n": order, "cells": [{"row": r, "col": c, "from": s, "to": s2}, ...]}
/// with cells sorted by (row, col); "from" is the trade symbol, "to" the
/// mate's. Byte-stable output.
std::string format_trade_json(const LatinTrade& t);

LatinTrade parse_trade_json(std::string_view text);

}  // namespace latin
