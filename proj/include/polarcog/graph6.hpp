#pragma once

#include <string>
#include <string_view>

#include "polarcog/graph.hpp"

namespace polarcog {

/// Largest order representable in the single-byte graph6 size field.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line. A leading ">>graph6<<" header and a trailing newline are tolerated.
/// Throws ParseError (with byte offset) on malformed input.
Graph graph6_decode(std::string_view text);

/// graph6 for the given labelling, without header or newline.
std::string graph6_encode(const Graph& g);

}  // namespace polarcog
