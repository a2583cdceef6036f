#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code with the library beyond Graph.

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "spinlat/graph.hpp"

namespace oracle {

/// Calls visit once per labeled 3-regular simple graph on n vertices
/// (connected or not), passing its sorted edge list.
void for_each_labeled_cubic(int n, const std::function<void(const std::vector<spinlat::Edge>&)>& visit);
std::vector<spinlat::Graph> labeled_cubic_graphs(int n);

/// Connectivity of an edge list by union-find.
bool edges_connected(int n, const std::vector<spinlat::Edge>& edges);

/// Lexicographically smallest sorted edge list over all n! relabelings.
std::vector<spinlat::Edge> brute_canonical(const spinlat::Graph& g);

/// Isomorphism classes of connected labeled cubic graphs, by brute canonical form.
std::vector<spinlat::Graph> brute_connected_cubic_classes(int n, bool planar_only);

/// Number of automorphisms, by trying every permutation.
std::uint64_t automorphism_count(const spinlat::Graph& g);

std::uint64_t factorial(int n);

/// Dense H from Kronecker products of Pauli matrices (spin 0 is the rightmost factor).
Eigen::MatrixXd kron_hamiltonian(const spinlat::Graph& g, double b, double gamma);
Eigen::MatrixXd kron_sum_z(int n);
Eigen::MatrixXd kron_sum_x(int n);

/// rho_A from the full outer product |psi><psi|, tracing one basis pair at a time.
Eigen::MatrixXd outer_product_partial_trace(const std::vector<double>& psi,
                                            const std::vector<int>& block, int n);

}  // namespace oracle
