#pragma once

#include "ldcode/vertex_set.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ldcode {

/// Raised for malformed graphs and for calls that violate a documented precondition.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..order()-1. Immutable once built.
class Graph {
public:
    /// Edgeless graph of order n, 1 <= n <= kMaxOrder.
    explicit Graph(int n);

    /// Builds from adjacency rows; rejects asymmetric rows, loops and out-of-range members.
    static Graph from_rows(std::vector<VertexSet> rows);

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::first(order()); }
    [[nodiscard]] VertexSet neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    [[nodiscard]] int degree(Vertex v) const { return adj_[v].size(); }
    [[nodiscard]] const std::vector<VertexSet>& rows() const { return adj_; }

    /// Edges (u, v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    Graph() = default;
    std::vector<VertexSet> adj_;

    friend Graph make_graph(int n, std::span<const Edge> edges);
};

/// Graph with exactly the given edges; duplicates collapse.
Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges)
{
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Stable sets (U, W) of a connected bipartite graph with |U| <= |W|.
/// On a tie, U is the side containing vertex 0.
struct Bipartition {
    VertexSet u_side;
    VertexSet w_side;

    [[nodiscard]] int r() const { return u_side.size(); }
    [[nodiscard]] int s() const { return w_side.size(); }
    bool operator==(const Bipartition&) const = default;
};

/// 2-colouring of a connected graph; std::nullopt when an odd cycle exists.
/// Throws GraphError on disconnected input.
std::optional<Bipartition> bipartition(const Graph& g);

/// True when g has no odd cycle (any number of components).
bool is_bipartite(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

} // namespace ldcode
