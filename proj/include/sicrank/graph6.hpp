#pragma once

#include "sicrank/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sicrank {

/// Malformed graph6 input; position() is the byte offset of the offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Largest vertex count supported (short and medium size headers).
inline constexpr std::size_t kGraph6MaxVertices = 258047;

/// Decodes one graph6 line. A trailing "\n" or "\r\n" is stripped.
Graph decode_graph6(std::string_view text);
/// Encodes g in graph6 for its current labeling (no trailing newline).
std::string encode_graph6(const Graph& g);

/// Reads a file-like stream of graph6 lines; blank lines and lines starting
/// with '#' are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace sicrank
