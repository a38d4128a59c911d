#pragma once

#include <string>

#include "grouptope/graph.hpp"

namespace grouptope {

/// McKay's graph6 format. Short form for n <= 62, the '~'-prefixed long
/// form above. Labels are not part of the format and decode as Original.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace grouptope
