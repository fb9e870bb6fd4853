#pragma once

#include "ldcode/graph.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ldcode {

/// Edge of an associated graph between vertex indices x < y. The two traces
/// differ in exactly one code vertex, which is the label.
struct LabeledEdge {
    int x = 0;
    int y = 0;
    Vertex label = 0;
    bool operator==(const LabeledEdge&) const = default;
};

/// The S-associated graph of an LD-set S: one vertex per vertex outside S plus
/// an artificial vertex z with empty trace; two vertices are joined when their
/// traces differ in exactly one element of S.
///
/// Vertex indices follow the source vertices outside S in increasing order; z is last.
class AssocGraph {
public:
    static constexpr Vertex kZ = -1;

    [[nodiscard]] int order() const { return static_cast<int>(source_.size()); }
    [[nodiscard]] int z() const { return order() - 1; }
    [[nodiscard]] int source_order() const { return source_order_; }
    [[nodiscard]] VertexSet code() const { return code_; }

    /// Source vertex of index i, or kZ.
    [[nodiscard]] Vertex source(int i) const { return source_[i]; }
    [[nodiscard]] VertexSet trace(int i) const { return trace_[i]; }
    /// |trace(i)|; z sits alone on level 0.
    [[nodiscard]] int level(int i) const { return trace_[i].size(); }
    [[nodiscard]] const std::vector<LabeledEdge>& edges() const { return edges_; }
    /// Indices into edges() of the edges at vertex i.
    [[nodiscard]] const std::vector<int>& incident(int i) const { return incident_[i]; }
    [[nodiscard]] int degree(int i) const { return static_cast<int>(incident_[i].size()); }

    /// Unlabelled view on 0..order()-1.
    [[nodiscard]] Graph graph() const;

    /// Vertex name used in text output: the source index, or "z".
    [[nodiscard]] std::string name(int i) const;

private:
    friend AssocGraph build_associated(const Graph& g, VertexSet s);

    int source_order_ = 0;
    VertexSet code_;
    std::vector<Vertex> source_;
    std::vector<VertexSet> trace_;
    std::vector<LabeledEdge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Requires g connected and s an LD-set of g; throws GraphError otherwise.
AssocGraph build_associated(const Graph& g, VertexSet s);

/// Outcome of the structural checks on an associated graph.
struct PropertyReport {
    bool order_formula = true;           ///< order = n - |S| + 1
    bool bipartite = true;               ///< 2-colourable, odd/even levels
    bool incident_labels_distinct = true;
    bool cycle_label_parity = true;      ///< every label even on each fundamental cycle
    bool closed_walks = true;            ///< supplied trails with all labels even are closed
    bool monotone_paths = true;          ///< supplied level-increasing paths: distinct labels, nested traces
    bool level_structure = true;         ///< z alone on level 0, edges span consecutive levels, at most one top vertex
    std::vector<std::string> failures;

    [[nodiscard]] bool all() const
    {
        return order_formula && bipartite && incident_labels_distinct && cycle_label_parity && closed_walks &&
               monotone_paths && level_structure;
    }
};

/// Evaluates the structural properties. Each walk must be a trail (vertex
/// sequence, no repeated edge); every prefix of it is checked. Each path must
/// climb exactly one level per step. Malformed walks or paths throw GraphError.
PropertyReport check_properties(const AssocGraph& a, std::span<const std::vector<int>> walks = {},
                                std::span<const std::vector<int>> paths = {});

/// Random trails of at most max_edges edges.
std::vector<std::vector<int>> sample_trails(const AssocGraph& a, int count, int max_edges, std::mt19937_64& rng);

/// Every path with at least one edge that climbs one level per step.
std::vector<std::vector<int>> monotone_paths(const AssocGraph& a);

/// Edges labelled u; throws GraphError when u is not in the code.
std::vector<LabeledEdge> edges_with_label(const AssocGraph& a, Vertex u);

struct ChoiceRule {
    enum class Kind { lexicographic, reverse, random };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;
};

/// Edge-induced subgraph with exactly two edges per label.
struct SubgraphH {
    Graph graph{1};
    /// H vertex i is associated-graph vertex vertices[i].
    std::vector<int> vertices;
    /// Chosen edges, in associated-graph indices.
    std::vector<LabeledEdge> edges;
};

/// Throws GraphError naming the label when some label has fewer than two edges.
SubgraphH select_h(const AssocGraph& a, ChoiceRule rule = {});

int degree_of_z(const AssocGraph& a);

/// Some vertex of the W side has degree 1 in g.
bool has_degree1_w_vertex(const Graph& g, const Bipartition& sides);

/// Graphviz text; vertices carry a "level" attribute and edges a "label" attribute.
std::string to_dot(const AssocGraph& a);

} // namespace ldcode
