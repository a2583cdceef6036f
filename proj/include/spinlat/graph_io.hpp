#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinlat/graph.hpp"

namespace spinlat {

struct GraphRecord {
  std::string name;
  Graph graph;
  /// Non-fatal findings, e.g. "not 3-regular".
  std::vector<std::string> warnings;
};

/// Parses the text graph format:
///
///   graph <name>
///   n=<int>
///   <u>-<v> <u>-<v> ...      (any number of lines)
///   <blank line>
///
/// Lines starting with '#' are comments. Errors carry the 1-based line number.
std::vector<GraphRecord> load_graphs(std::string_view text);
std::vector<GraphRecord> load_graph_file(const std::string& path);

std::string save_graphs(const std::vector<GraphRecord>& records);
std::string save_graph(const std::string& name, const Graph& g);

}  // namespace spinlat
