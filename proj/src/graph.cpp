#include "ldcode/graph.hpp"

#include <sstream>

namespace ldcode {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
}

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

Graph::Graph(int n)
{
    check_order(n);
    adj_.assign(n, VertexSet{});
}

Graph Graph::from_rows(std::vector<VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexSet all = VertexSet::first(n);
    for (Vertex u = 0; u < n; ++u) {
        if (!rows[u].is_subset_of(all))
            throw GraphError("row " + std::to_string(u) + " names a vertex outside 0.." + std::to_string(n - 1));
        if (rows[u].contains(u))
            throw GraphError("self-loop at vertex " + std::to_string(u));
        for (Vertex v : rows[u])
            if (!rows[v].contains(u))
                throw GraphError("asymmetric adjacency at " + pair_text(u, v));
    }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (const auto& row : adj_)
        twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u] - VertexSet::first(u + 1))
            out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw GraphError("edge " + pair_text(u, v) + " is a self-loop");
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    return g;
}

Graph complement(const Graph& g)
{
    const VertexSet all = g.vertices();
    std::vector<VertexSet> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        rows[v] = all - g.neighbors(v) - VertexSet::single(v);
    return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    std::vector<Vertex> index(g.order(), -1);
    int next = 0;
    for (Vertex v : keep)
        index[v] = next++;
    std::vector<VertexSet> rows(next);
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v) & keep)
            rows[index[v]].insert(index[w]);
    return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw GraphError("permutation length does not match graph order");
    VertexSet image;
    for (Vertex v : perm) {
        if (v < 0 || v >= g.order() || image.contains(v))
            throw GraphError("relabel: not a permutation of 0.." + std::to_string(g.order() - 1));
        image.insert(v);
    }
    std::vector<VertexSet> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            rows[perm[v]].insert(perm[w]);
    return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier)
                next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen = unseen - comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() == 1;
}

namespace {

// Colours one component starting from `root`; false when an odd cycle is met.
bool two_colour(const Graph& g, Vertex root, VertexSet& even, VertexSet& odd)
{
    even.insert(root);
    VertexSet frontier = VertexSet::single(root);
    bool frontier_even = true;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighbors(v);
        VertexSet& same = frontier_even ? even : odd;
        VertexSet& other = frontier_even ? odd : even;
        if (next.intersects(same))
            return false;
        frontier = next - other;
        other |= frontier;
        frontier_even = !frontier_even;
    }
    return true;
}

} // namespace

std::optional<Bipartition> bipartition(const Graph& g)
{
    auto comps = connected_components(g);
    if (comps.size() > 1)
        throw GraphError("bipartition needs a connected graph; vertices " + std::to_string(comps[0].front()) +
                         " and " + std::to_string(comps[1].front()) + " lie in different components");
    VertexSet even, odd;
    if (!two_colour(g, 0, even, odd))
        return std::nullopt;
    if (odd.size() < even.size())
        return Bipartition{odd, even};
    return Bipartition{even, odd};
}

bool is_bipartite(const Graph& g)
{
    for (VertexSet comp : connected_components(g)) {
        VertexSet even, odd;
        if (!two_colour(g, comp.front(), even, odd))
            return false;
    }
    return true;
}

std::string to_edge_list(const Graph& g)
{
    auto edges = g.edges();
    std::ostringstream out;
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    long n = 0, m = 0;
    if (!(in >> n >> m))
        throw GraphError("edge list: expected header line \"n m\"");
    if (m < 0)
        throw GraphError("edge list: negative edge count");
    if (n < 1 || n > kMaxOrder)
        throw GraphError("edge list: order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v))
            throw GraphError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge list: edge " + pair_text(static_cast<int>(u), static_cast<int>(v)) +
                             " has an endpoint outside 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (in >> extra)
        throw GraphError("edge list: trailing content after " + std::to_string(m) + " edges");
    return make_graph(static_cast<int>(n), edges);
}

} // namespace ldcode
