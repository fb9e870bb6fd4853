#pragma once

#include "ldcode/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ldcode {

/// Largest order accepted by enumerate_connected_graphs for all connected graphs.
inline constexpr int kEnumerationCap = 8;
/// Largest order accepted when only bipartite graphs are requested.
inline constexpr int kBipartiteEnumerationCap = 10;

class EnumerationCapError : public GraphError {
public:
    EnumerationCapError(int requested, int cap);
    [[nodiscard]] int cap() const { return cap_; }

private:
    int cap_;
};

/// Canonical relabelling: colour refinement plus individualisation over the whole
/// search tree, keeping the relabelled graph with the smallest adjacency rows.
/// Twin vertices are individualised only once per cell.
Graph canonical_form(const Graph& g);

/// graph6 string of canonical_form(g); equal codes <=> isomorphic graphs.
std::string canonical_code(const Graph& g);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices (optionally only bipartite ones), sorted by canonical code.
std::vector<Graph> enumerate_connected_graphs(int n, bool bipartite_only);

/// Streams every connected graph of order 1..n_max (order ascending).
void for_each_connected_graph(int n_max, bool bipartite_only, const std::function<void(const Graph&)>& visit);

} // namespace ldcode
