#pragma once

#include <vector>

#include "spinlat/graph.hpp"

namespace spinlat {

struct EnumerateOptions {
  bool planar_only = false;
  /// 1: all connected cubic graphs. 3: only 3-connected ones (for planar
  /// graphs these are the polyhedral ones, generated from K4 by edge insertion).
  int min_connectivity = 1;
  /// Allows n above default_max_n.
  bool long_run = false;
  int default_max_n = 14;
  int long_run_max_n = 18;
};

/// All connected 3-regular simple graphs on n vertices, one per isomorphism
/// class, in canonical form and sorted.
std::vector<Graph> enumerate_cubic(int n, const EnumerateOptions& options = {});

inline std::vector<Graph> enumerate_cubic(int n, bool planar_only) {
  EnumerateOptions options;
  options.planar_only = planar_only;
  return enumerate_cubic(n, options);
}

}  // namespace spinlat
