#include "ldcode/assoc.hpp"

#include "ldcode/ld.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ldcode {

Graph AssocGraph::graph() const
{
    std::vector<Edge> plain;
    plain.reserve(edges_.size());
    for (const auto& e : edges_)
        plain.emplace_back(e.x, e.y);
    return make_graph(order(), plain);
}

std::string AssocGraph::name(int i) const
{
    return source_[i] == kZ ? std::string("z") : std::to_string(source_[i]);
}

AssocGraph build_associated(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw GraphError("associated graph: set {" + s.to_string() + "} is not a subset of the vertices");
    if (!is_connected(g))
        throw GraphError("associated graph: source graph must be connected");
    if (!is_ld_set(g, s))
        throw GraphError("associated graph: {" + s.to_string() + "} is not an LD-set");

    AssocGraph a;
    a.source_order_ = g.order();
    a.code_ = s;
    for (Vertex v : g.vertices() - s) {
        a.source_.push_back(v);
        a.trace_.push_back(trace_of(g, v, s));
    }
    a.source_.push_back(AssocGraph::kZ);
    a.trace_.push_back(VertexSet{});

    const int order = a.order();
    a.incident_.resize(order);
    for (int x = 0; x < order; ++x) {
        for (int y = x + 1; y < order; ++y) {
            const VertexSet diff = a.trace_[x] ^ a.trace_[y];
            if (diff.size() != 1)
                continue;
            a.incident_[x].push_back(static_cast<int>(a.edges_.size()));
            a.incident_[y].push_back(static_cast<int>(a.edges_.size()));
            a.edges_.push_back({x, y, diff.front()});
        }
    }
    return a;
}

namespace {

class EdgeIndex {
public:
    explicit EdgeIndex(const AssocGraph& a) : order_(a.order()), index_(order_ * order_, -1)
    {
        for (int i = 0; i < static_cast<int>(a.edges().size()); ++i) {
            const auto& e = a.edges()[i];
            index_[e.x * order_ + e.y] = i;
            index_[e.y * order_ + e.x] = i;
        }
    }

    [[nodiscard]] int between(int x, int y) const
    {
        if (x < 0 || y < 0 || x >= order_ || y >= order_)
            return -1;
        return index_[x * order_ + y];
    }

private:
    int order_;
    std::vector<int> index_;
};

void fail(PropertyReport& report, bool& flag, const std::string& message)
{
    flag = false;
    report.failures.push_back(message);
}

void check_levels(const AssocGraph& a, PropertyReport& report)
{
    if (a.level(a.z()) != 0)
        fail(report, report.level_structure, "z is not on level 0");
    int top = 0;
    for (int i = 0; i < a.order(); ++i) {
        if (i != a.z() && a.level(i) == 0)
            fail(report, report.level_structure, "vertex " + a.name(i) + " shares level 0 with z");
        if (a.level(i) == a.code().size())
            ++top;
    }
    if (top > 1)
        fail(report, report.level_structure, std::to_string(top) + " vertices on the top level");
    for (const auto& e : a.edges())
        if (std::abs(a.level(e.x) - a.level(e.y)) != 1)
            fail(report, report.level_structure,
                 "edge " + a.name(e.x) + "-" + a.name(e.y) + " does not join consecutive levels");
}

void check_bipartite(const AssocGraph& a, PropertyReport& report)
{
    if (!is_bipartite(a.graph()))
        fail(report, report.bipartite, "associated graph has an odd cycle");
    for (const auto& e : a.edges())
        if (a.level(e.x) % 2 == a.level(e.y) % 2)
            fail(report, report.bipartite, "edge " + a.name(e.x) + "-" + a.name(e.y) + " joins levels of equal parity");
}

void check_incident_labels(const AssocGraph& a, PropertyReport& report)
{
    for (int i = 0; i < a.order(); ++i) {
        VertexSet seen;
        for (int id : a.incident(i)) {
            const Vertex label = a.edges()[id].label;
            if (seen.contains(label))
                fail(report, report.incident_labels_distinct,
                     "two edges at " + a.name(i) + " carry label " + std::to_string(label));
            seen.insert(label);
        }
    }
}

// Label parity is additive over the cycle space, so the fundamental cycles of a
// spanning forest cover every cycle.
void check_cycle_parity(const AssocGraph& a, PropertyReport& report)
{
    const int order = a.order();
    std::vector<VertexSet> parity(order);
    std::vector<bool> seen(order, false);
    std::vector<bool> tree_edge(a.edges().size(), false);
    for (int root = 0; root < order; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int id : a.incident(x)) {
                const auto& e = a.edges()[id];
                const int y = e.x == x ? e.y : e.x;
                if (seen[y])
                    continue;
                seen[y] = true;
                tree_edge[id] = true;
                parity[y] = parity[x] ^ VertexSet::single(e.label);
                queue.push_back(y);
            }
        }
    }
    for (std::size_t id = 0; id < a.edges().size(); ++id) {
        if (tree_edge[id])
            continue;
        const auto& e = a.edges()[id];
        const VertexSet odd = parity[e.x] ^ parity[e.y] ^ VertexSet::single(e.label);
        if (!odd.empty())
            fail(report, report.cycle_label_parity,
                 "fundamental cycle through " + a.name(e.x) + "-" + a.name(e.y) + " has odd labels {" +
                     odd.to_string() + "}");
    }
}

std::string walk_text(const AssocGraph& a, const std::vector<int>& walk)
{
    std::string out;
    for (int v : walk) {
        if (!out.empty())
            out += ' ';
        out += a.name(v);
    }
    return out;
}

void check_walk(const AssocGraph& a, const EdgeIndex& index, const std::vector<int>& walk, PropertyReport& report)
{
    if (walk.empty())
        throw GraphError("walk must contain at least one vertex");
    std::vector<bool> used(a.edges().size(), false);
    VertexSet odd;
    for (std::size_t step = 1; step < walk.size(); ++step) {
        const int id = index.between(walk[step - 1], walk[step]);
        if (id < 0)
            throw GraphError("walk [" + walk_text(a, walk) + "] leaves the edge set at step " + std::to_string(step));
        if (used[id])
            throw GraphError("walk [" + walk_text(a, walk) + "] repeats an edge at step " + std::to_string(step));
        used[id] = true;
        odd = odd ^ VertexSet::single(a.edges()[id].label);
        if (odd.empty() && walk[step] != walk[0])
            fail(report, report.closed_walks,
                 "trail with even labels is not closed: " +
                     walk_text(a, std::vector<int>(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(step) + 1)));
    }
}

void check_path(const AssocGraph& a, const EdgeIndex& index, const std::vector<int>& path, PropertyReport& report)
{
    if (path.empty())
        throw GraphError("path must contain at least one vertex");
    VertexSet labels;
    for (std::size_t step = 1; step < path.size(); ++step) {
        const int id = index.between(path[step - 1], path[step]);
        if (id < 0)
            throw GraphError("path [" + walk_text(a, path) + "] leaves the edge set at step " + std::to_string(step));
        if (a.level(path[step]) != a.level(path[step - 1]) + 1)
            throw GraphError("path [" + walk_text(a, path) + "] does not climb one level at step " +
                             std::to_string(step));
        const Vertex label = a.edges()[id].label;
        if (labels.contains(label))
            fail(report, report.monotone_paths,
                 "label " + std::to_string(label) + " repeats on monotone path [" + walk_text(a, path) + "]");
        labels.insert(label);
        if (!labels.is_subset_of(a.trace(path[step])))
            fail(report, report.monotone_paths,
                 "trace of " + a.name(path[step]) + " misses an earlier label on [" + walk_text(a, path) + "]");
    }
}

} // namespace

PropertyReport check_properties(const AssocGraph& a, std::span<const std::vector<int>> walks,
                                std::span<const std::vector<int>> paths)
{
    PropertyReport report;
    const int expected = a.source_order() - a.code().size() + 1;
    if (a.order() != expected)
        fail(report, report.order_formula,
             "order " + std::to_string(a.order()) + " differs from n - k + 1 = " + std::to_string(expected));
    check_levels(a, report);
    check_bipartite(a, report);
    check_incident_labels(a, report);
    check_cycle_parity(a, report);

    const EdgeIndex index(a);
    for (const auto& walk : walks)
        check_walk(a, index, walk, report);
    for (const auto& path : paths)
        check_path(a, index, path, report);
    return report;
}

std::vector<std::vector<int>> sample_trails(const AssocGraph& a, int count, int max_edges, std::mt19937_64& rng)
{
    std::vector<int> starts;
    for (int i = 0; i < a.order(); ++i)
        if (a.degree(i) > 0)
            starts.push_back(i);
    std::vector<std::vector<int>> out;
    if (starts.empty())
        return out;
    for (int t = 0; t < count; ++t) {
        std::vector<bool> used(a.edges().size(), false);
        std::vector<int> trail{starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)]};
        for (int step = 0; step < max_edges; ++step) {
            std::vector<int> open;
            for (int id : a.incident(trail.back()))
                if (!used[id])
                    open.push_back(id);
            if (open.empty())
                break;
            const int id = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
            used[id] = true;
            const auto& e = a.edges()[id];
            trail.push_back(e.x == trail.back() ? e.y : e.x);
        }
        out.push_back(std::move(trail));
    }
    return out;
}

std::vector<std::vector<int>> monotone_paths(const AssocGraph& a)
{
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto climb = [&](auto&& self, int x) -> void {
        for (int id : a.incident(x)) {
            const auto& e = a.edges()[id];
            const int y = e.x == x ? e.y : e.x;
            if (a.level(y) != a.level(x) + 1)
                continue;
            path.push_back(y);
            out.push_back(path);
            self(self, y);
            path.pop_back();
        }
    };
    for (int start = 0; start < a.order(); ++start) {
        path.assign(1, start);
        climb(climb, start);
    }
    return out;
}

std::vector<LabeledEdge> edges_with_label(const AssocGraph& a, Vertex u)
{
    if (u < 0 || u >= kMaxOrder || !a.code().contains(u))
        throw GraphError("vertex " + std::to_string(u) + " is not in the code {" + a.code().to_string() + "}");
    std::vector<LabeledEdge> out;
    for (const auto& e : a.edges())
        if (e.label == u)
            out.push_back(e);
    return out;
}

SubgraphH select_h(const AssocGraph& a, ChoiceRule rule)
{
    std::mt19937_64 rng(rule.seed);
    std::vector<LabeledEdge> chosen;
    for (Vertex u : a.code()) {
        auto pool = edges_with_label(a, u);
        if (pool.size() < 2)
            throw GraphError("label " + std::to_string(u) + " has " + std::to_string(pool.size()) +
                             " edge(s); two are needed");
        switch (rule.kind) {
        case ChoiceRule::Kind::lexicographic: break;
        case ChoiceRule::Kind::reverse: std::reverse(pool.begin(), pool.end()); break;
        case ChoiceRule::Kind::random: std::shuffle(pool.begin(), pool.end(), rng); break;
        }
        chosen.insert(chosen.end(), pool.begin(), pool.begin() + 2);
    }
    std::sort(chosen.begin(), chosen.end(),
              [](const LabeledEdge& p, const LabeledEdge& q) { return std::pair(p.x, p.y) < std::pair(q.x, q.y); });

    SubgraphH h;
    std::vector<int> local(a.order(), -1);
    for (const auto& e : chosen)
        for (int v : {e.x, e.y})
            local[v] = 0;
    for (int v = 0; v < a.order(); ++v)
        if (local[v] == 0) {
            local[v] = static_cast<int>(h.vertices.size());
            h.vertices.push_back(v);
        }
    std::vector<Edge> plain;
    for (const auto& e : chosen)
        plain.emplace_back(local[e.x], local[e.y]);
    h.graph = make_graph(static_cast<int>(h.vertices.size()), plain);
    h.edges = std::move(chosen);
    return h;
}

int degree_of_z(const AssocGraph& a)
{
    return a.degree(a.z());
}

bool has_degree1_w_vertex(const Graph& g, const Bipartition& sides)
{
    for (Vertex w : sides.w_side)
        if (g.degree(w) == 1)
            return true;
    return false;
}

std::string to_dot(const AssocGraph& a)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int i = 0; i < a.order(); ++i)
        out << "  \"" << a.name(i) << "\" [level=" << a.level(i) << "];\n";
    for (const auto& e : a.edges())
        out << "  \"" << a.name(e.x) << "\" -- \"" << a.name(e.y) << "\" [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace ldcode
