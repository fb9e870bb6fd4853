#include "ldcode/enumerate.hpp"

#include "ldcode/graph6.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ldcode {

EnumerationCapError::EnumerationCapError(int requested, int cap)
    : GraphError("enumeration order " + std::to_string(requested) + " exceeds the cap of " + std::to_string(cap) +
                 "; supply a graph6 stream instead"),
      cap_(cap)
{
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into every current cell until stable.
void refine(const Graph& g, Cells& cells)
{
    for (;;) {
        std::vector<VertexSet> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells)
            masks.push_back(VertexSet::from(cell));

        Cells next;
        next.reserve(g.order());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> keyed;
            keyed.reserve(cell.size());
            for (Vertex v : cell) {
                std::vector<int> key(masks.size());
                for (std::size_t c = 0; c < masks.size(); ++c)
                    key[c] = (g.neighbors(v) & masks[c]).size();
                keyed.emplace_back(std::move(key), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            next.push_back({keyed[0].second});
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first)
                    next.emplace_back();
                next.back().push_back(keyed[i].second);
            }
        }
        const bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable)
            return;
    }
}

bool twins(const Graph& g, Vertex a, Vertex b)
{
    return (g.neighbors(a) - VertexSet::single(b)) == (g.neighbors(b) - VertexSet::single(a));
}

struct Search {
    const Graph& g;
    std::vector<std::uint64_t> best_rows;
    std::vector<Vertex> best_perm;

    void leaf(const Cells& cells)
    {
        const int n = g.order();
        std::vector<Vertex> perm(n);
        for (int i = 0; i < n; ++i)
            perm[cells[i][0]] = i;
        std::vector<std::uint64_t> rows(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v))
                rows[perm[v]] |= std::uint64_t{1} << perm[w];
        if (best_rows.empty() || rows < best_rows) {
            best_rows = std::move(rows);
            best_perm = std::move(perm);
        }
    }

    void descend(Cells cells)
    {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const auto index = static_cast<std::size_t>(target - cells.begin());
        const std::vector<Vertex> cell = *target;
        std::vector<Vertex> tried;
        for (Vertex v : cell) {
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g, t, v); }))
                continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : cell)
                if (w != v)
                    rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
            descend(std::move(child));
        }
    }
};

void check_cap(int n, bool bipartite_only)
{
    const int cap = bipartite_only ? kBipartiteEnumerationCap : kEnumerationCap;
    if (n > cap)
        throw EnumerationCapError(n, cap);
    if (n < 1)
        throw GraphError("enumeration order must be at least 1");
}

Graph add_vertex(const Graph& g, VertexSet neighbourhood)
{
    std::vector<VertexSet> rows = g.rows();
    const Vertex v = g.order();
    for (Vertex w : neighbourhood)
        rows[w].insert(v);
    rows.push_back(neighbourhood);
    return Graph::from_rows(std::move(rows));
}

// Every connected graph on n+1 vertices has a non-cut vertex, so extending each
// order-n class by one vertex with a non-empty neighbourhood reaches every class.
// Deleting a vertex keeps a graph bipartite, so for the bipartite sweep the new
// vertex only needs to join one side of the (unique) bipartition.
std::vector<Graph> next_level(const std::vector<Graph>& level, bool bipartite_only)
{
    std::map<std::string, Graph> seen;
    auto offer = [&](const Graph& parent, VertexSet nbhd) {
        Graph child = add_vertex(parent, nbhd);
        Graph canon = canonical_form(child);
        seen.try_emplace(encode_graph6(canon), std::move(canon));
    };
    for (const Graph& parent : level) {
        const int n = parent.order();
        if (bipartite_only) {
            auto sides = bipartition(parent);
            for (VertexSet side : {sides->u_side, sides->w_side}) {
                const std::vector<Vertex> members = side.to_vector();
                const std::uint64_t limit = std::uint64_t{1} << members.size();
                for (std::uint64_t mask = 1; mask < limit; ++mask) {
                    VertexSet nbhd;
                    for (std::size_t i = 0; i < members.size(); ++i)
                        if ((mask >> i) & 1U)
                            nbhd.insert(members[i]);
                    offer(parent, nbhd);
                }
            }
        } else {
            const std::uint64_t limit = std::uint64_t{1} << n;
            for (std::uint64_t mask = 1; mask < limit; ++mask)
                offer(parent, VertexSet(mask));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, graph] : seen)
        out.push_back(std::move(graph));
    return out;
}

} // namespace

Graph canonical_form(const Graph& g)
{
    Search search{g, {}, {}};
    search.descend(Cells{g.vertices().to_vector()});
    return relabel(g, search.best_perm);
}

std::string canonical_code(const Graph& g)
{
    return encode_graph6(canonical_form(g));
}

void for_each_connected_graph(int n_max, bool bipartite_only, const std::function<void(const Graph&)>& visit)
{
    check_cap(n_max, bipartite_only);
    std::vector<Graph> level{Graph(1)};
    for (int n = 1;; ++n) {
        for (const Graph& g : level)
            visit(g);
        if (n == n_max)
            return;
        level = next_level(level, bipartite_only);
    }
}

std::vector<Graph> enumerate_connected_graphs(int n, bool bipartite_only)
{
    check_cap(n, bipartite_only);
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k)
        level = next_level(level, bipartite_only);
    return level;
}

} // namespace ldcode
