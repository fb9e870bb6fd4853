#pragma once

#include "ldcode/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ldcode {

/// Malformed graph6 input. offset() is the byte position of the problem.
class Graph6Error : public GraphError {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

std::string encode_graph6(const Graph& g);

/// Decodes one graph6 string (no header, no trailing newline). Padding bits
/// must be zero, so every accepted string is the canonical encoding of its graph.
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line; an optional ">>graph6<<" prefix on a line is skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

} // namespace ldcode
