#include "ldcode/ld.hpp"

namespace ldcode {

std::vector<Trace> traces(const Graph& g, VertexSet s)
{
    std::vector<Trace> out;
    for (Vertex v : g.vertices() - s)
        out.push_back({v, trace_of(g, v, s)});
    return out;
}

bool is_dominating(const Graph& g, VertexSet s)
{
    for (Vertex v : g.vertices() - s)
        if (trace_of(g, v, s).empty())
            return false;
    return true;
}

bool is_ld_set(const Graph& g, VertexSet s)
{
    auto ts = traces(g, s);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].members.empty())
            return false;
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i].members == ts[j].members)
                return false;
    }
    return true;
}

std::optional<Vertex> dominating_vertex(const Graph& g, VertexSet s)
{
    if (!is_ld_set(g, s))
        throw GraphError("dominating_vertex: {" + s.to_string() + "} is not an LD-set");
    for (Vertex v : g.vertices() - s)
        if (s.is_subset_of(g.neighbors(v)))
            return v;
    return std::nullopt;
}

bool is_global_ld_set(const Graph& g, VertexSet s)
{
    return is_ld_set(g, s) && is_ld_set(complement(g), s);
}

LdAnalysis analyze(const Graph& g, VertexSet s)
{
    LdAnalysis out;
    out.is_dominating = is_dominating(g, s);
    out.is_ld = out.is_dominating && is_ld_set(g, s);
    if (out.is_ld) {
        out.dominating_vertex = dominating_vertex(g, s);
        out.is_global = !out.dominating_vertex.has_value();
    }
    return out;
}

int lambda_lower_bound(int n)
{
    int k = 0;
    while (k < 63 && n - k > static_cast<int>((std::uint64_t{1} << k) - 1))
        ++k;
    return k;
}

namespace {

// Include-first DFS over vertices 0..n-1 visits k-subsets in lexicographic order.
// A branch is cut once an excluded vertex can no longer be dominated, or two
// excluded vertices can no longer be told apart, by the chosen plus undecided vertices.
class SubsetSearch {
public:
    SubsetSearch(const Graph& g, int k, bool global, const std::function<bool(VertexSet)>& visit)
        : n_(g.order()), k_(k), visit_(visit)
    {
        views_.push_back(g.rows());
        if (global)
            views_.push_back(complement(g).rows());
    }

    void run()
    {
        if (k_ < 0 || k_ > n_)
            return;
        dfs(0, VertexSet{}, VertexSet{});
    }

private:
    bool feasible(VertexSet outside, VertexSet available) const
    {
        for (const auto& rows : views_) {
            for (Vertex x : outside) {
                if (!rows[x].intersects(available))
                    return false;
                for (Vertex y : outside - VertexSet::first(x + 1))
                    if (!(rows[x] ^ rows[y]).intersects(available))
                        return false;
            }
        }
        return true;
    }

    void dfs(int next, VertexSet chosen, VertexSet outside)
    {
        if (stopped_)
            return;
        const int need = k_ - chosen.size();
        if (need == 0) {
            const VertexSet rest = VertexSet::first(n_) - VertexSet::first(next);
            if (feasible(outside | rest, chosen) && !visit_(chosen))
                stopped_ = true;
            return;
        }
        if (n_ - next < need)
            return;
        VertexSet with = chosen;
        with.insert(next);
        dfs(next + 1, with, outside);

        VertexSet without = outside;
        without.insert(next);
        const VertexSet undecided = VertexSet::first(n_) - VertexSet::first(next + 1);
        if (feasible(without, chosen | undecided))
            dfs(next + 1, chosen, without);
    }

    int n_;
    int k_;
    const std::function<bool(VertexSet)>& visit_;
    std::vector<std::vector<VertexSet>> views_;
    bool stopped_ = false;
};

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

} // namespace

void for_each_ld_set(const Graph& g, int k, bool global, const std::function<bool(VertexSet)>& visit)
{
    SubsetSearch(g, k, global, visit).run();
}

std::optional<VertexSet> find_ld_set(const Graph& g, int k, bool global)
{
    std::optional<VertexSet> found;
    for_each_ld_set(g, k, global, [&](VertexSet s) {
        found = s;
        return false;
    });
    return found;
}

std::vector<VertexSet> ld_sets_of_size(const Graph& g, int k)
{
    std::vector<VertexSet> out;
    for_each_ld_set(g, k, false, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

LdCode lambda(const Graph& g)
{
    for (int k = lambda_lower_bound(g.order()); k <= g.order(); ++k)
        if (auto s = find_ld_set(g, k))
            return {k, *s};
    // The whole vertex set leaves nothing to locate, so the loop always returns.
    return {g.order(), g.vertices()};
}

int lambda_complement(const Graph& g)
{
    return lambda(complement(g)).size;
}

LdCode lambda_global(const Graph& g)
{
    const int own = lambda(g).size;
    const int other = lambda_complement(g);
    for (int k = std::max(own, other); k <= g.order(); ++k)
        if (auto s = find_ld_set(g, k, true))
            return {k, *s};
    return {g.order(), g.vertices()};
}

std::vector<VertexSet> all_ld_codes(const Graph& g)
{
    return ld_sets_of_size(g, lambda(g).size);
}

bool closed_form_defined(const FamilySpec& spec)
{
    const int n = spec.order();
    switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle: return n >= 7;
    case FamilyKind::wheel: return n >= 8;
    case FamilyKind::complete: return n >= 2;
    case FamilyKind::star: return n >= 4;
    case FamilyKind::complete_bipartite: return 2 <= spec.r && spec.r <= spec.s;
    case FamilyKind::bistar: return 3 <= spec.r && spec.r <= spec.s;
    }
    return false;
}

int closed_form(const FamilySpec& spec, Invariant which)
{
    if (!closed_form_defined(spec)) {
        static constexpr const char* ranges[] = {"n >= 7", "n >= 7", "n >= 8", "n >= 2", "n >= 4",
                                                 "2 <= r <= n - r", "3 <= r <= s"};
        throw GraphError("no closed form for " + spec.name() + ": " + std::string(family_name(spec.kind)) +
                         " needs " + ranges[static_cast<int>(spec.kind)]);
    }
    const int n = spec.order();
    switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
        return which == Invariant::lambda_complement ? ceil_div(2 * n - 2, 5) : ceil_div(2 * n, 5);
    case FamilyKind::wheel:
        return which == Invariant::lambda ? ceil_div(2 * n - 2, 5) : ceil_div(2 * n + 1, 5);
    case FamilyKind::complete:
        return which == Invariant::lambda ? n - 1 : n;
    case FamilyKind::star:
        return n - 1;
    case FamilyKind::complete_bipartite:
        return n - 2;
    case FamilyKind::bistar:
        return which == Invariant::lambda_complement ? n - 3 : n - 2;
    }
    return 0;
}

} // namespace ldcode
