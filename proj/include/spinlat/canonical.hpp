#pragma once

#include <vector>

#include "spinlat/graph.hpp"

namespace spinlat {

/// Canonical relabeling: isomorphic graphs map to the identical Graph.
/// Color refinement seeded by degree, with individualization-refinement
/// backtracking over every vertex of the first smallest non-trivial cell.
Graph canonical_form(const Graph& g);

/// perm[v] = canonical label of v, i.e. g.relabeled(perm) == canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace spinlat
