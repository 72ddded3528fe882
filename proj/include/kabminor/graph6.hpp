#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kabminor/graph.hpp"

namespace kabminor {

/// Malformed graph6 input. line() is 1-based, or 0 when not reading a stream.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view record);

/// Reads newline-separated graph6 records. Blank lines and an optional
/// ">>graph6<<" header are skipped; the first malformed record throws with its line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace kabminor
