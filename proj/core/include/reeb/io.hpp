#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "reeb/drawing.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// Graph JSON:
///   {"vertices":[{"id":"a","height":"3/2"},...],"edges":[["a","b"],...]}
/// Heights may be JSON integers or strings holding an integer, a plain
/// decimal or "p/q". Repeated pairs are parallel edges.
ReebGraph parse_graph(std::string_view text);
std::string serialize_graph(const ReebGraph& g);

/// Drawing JSON:
///   {"graph":{...},"x":{"a":"0",...},
///    "edges":[{"endpoints":["a","b"],"bends":[["1/2","3/4"],...]},...]}
/// The edges array follows the graph's edge order; bends are [x, y] pairs
/// listed bottom to top.
Drawing parse_drawing(std::string_view text);
std::string serialize_drawing(const Drawing& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace reeb
