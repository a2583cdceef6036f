#pragma once

#include "spinlat/graph.hpp"

namespace spinlat {

/// Left-right planarity test (de Fraysseix-Rosenstiehl criterion, linear
/// time). Requires a connected graph.
bool is_planar(const Graph& g);

/// Exhaustive search for a K3,3 subdivision in a connected graph of maximum
/// degree three with at most max_n vertices. For such graphs this decides
/// non-planarity independently of is_planar.
bool k33_minor_oracle(const Graph& g, int max_n = 14);

}  // namespace spinlat
