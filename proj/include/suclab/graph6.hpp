#pragma once

#include <string>
#include <string_view>

#include "suclab/graph.hpp"

namespace suclab {

/// Decodes one graph6 record (n <= 62). A leading ">>graph6<<" header and a
/// trailing newline are accepted; anything else after the body is an error.
/// Throws ParseError.
SimpleGraph parse_graph6(std::string_view record);

/// Canonical graph6 record without header or newline.
std::string write_graph6(const SimpleGraph& g);

}  // namespace suclab
