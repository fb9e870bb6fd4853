#include "ldcode/cactus.hpp"

#include <algorithm>
#include <numeric>

namespace ldcode {

namespace {

// Hopcroft-Tarjan with an edge stack.
class BlockFinder {
public:
    explicit BlockFinder(const Graph& g) : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

    std::vector<Block> run()
    {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (disc_[v] < 0)
                visit(v, -1);
        return std::move(blocks_);
    }

private:
    void visit(Vertex v, Vertex parent)
    {
        disc_[v] = low_[v] = clock_++;
        for (Vertex w : g_.neighbors(v)) {
            if (w == parent)
                continue;
            if (disc_[w] < 0) {
                stack_.emplace_back(v, w);
                visit(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v])
                    pop_block(v, w);
            } else if (disc_[w] < disc_[v]) {
                stack_.emplace_back(v, w);
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
    }

    void pop_block(Vertex v, Vertex w)
    {
        Block block;
        for (;;) {
            Edge e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
            if (e == Edge{v, w})
                break;
        }
        blocks_.push_back(std::move(block));
    }

    const Graph& g_;
    std::vector<int> disc_;
    std::vector<int> low_;
    std::vector<Edge> stack_;
    std::vector<Block> blocks_;
    int clock_ = 0;
};

int block_order(const Block& b)
{
    VertexSet vs;
    for (auto [u, v] : b) {
        vs.insert(u);
        vs.insert(v);
    }
    return vs.size();
}

bool is_cycle_block(const Block& b)
{
    return b.size() >= 3 && static_cast<int>(b.size()) == block_order(b);
}

} // namespace

std::vector<Block> blocks(const Graph& g)
{
    return BlockFinder(g).run();
}

bool is_cactus(const Graph& g)
{
    for (const auto& b : blocks(g))
        if (b.size() != 1 && !is_cycle_block(b))
            return false;
    return true;
}

CactusStats cactus_stats(const Graph& g)
{
    CactusStats st;
    st.order = g.order();
    st.size = g.size();
    st.cc = static_cast<int>(connected_components(g).size());
    for (const auto& b : blocks(g)) {
        if (is_cycle_block(b))
            ++st.cy;
        else if (b.size() != 1)
            throw GraphError("cactus_stats: a block with " + std::to_string(b.size()) + " edges is neither a bridge nor a cycle");
    }
    // Cycle rank of a cactus equals its number of cycle blocks.
    if (st.cy != st.size - st.order + st.cc)
        throw std::logic_error("cactus_stats: cycle-block count disagrees with the cycle rank");
    st.ex = st.size - 4 * st.cy;
    return st;
}

bool all_blocks_are_c4(const Graph& g)
{
    for (const auto& b : blocks(g))
        if (b.size() != 4 || block_order(b) != 4)
            return false;
    return true;
}

bool tightness_check(const Graph& g)
{
    if (!is_connected(g))
        throw GraphError("tightness_check: graph is disconnected");
    if (!is_bipartite(g))
        throw GraphError("tightness_check: graph is not bipartite");
    if (!is_cactus(g))
        throw GraphError("tightness_check: graph is not a cactus");
    return 4 * g.order() == 3 * g.size() + 4;
}

RandomCactus random_cactus(std::mt19937_64& rng, bool bipartite)
{
    std::uniform_int_distribution<int> n_components(1, 3);
    std::uniform_int_distribution<int> n_blocks(1, 3);
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> even_len(2, 3);
    std::uniform_int_distribution<int> any_len(3, 7);

    RandomCactus out;
    out.bipartite = bipartite;
    out.components = n_components(rng);
    // Roughly one graph in four is built from 4-cycles only.
    const bool c4_only = coin(rng) < 25;
    out.all_c4 = true;
    bool odd_cycle = false;

    std::vector<Edge> edges;
    int next = 0;
    for (int c = 0; c < out.components; ++c) {
        const int first = next++;
        const int blocks_here = n_blocks(rng);
        for (int b = 0; b < blocks_here || (c + 1 == out.components && next < 4); ++b) {
            const int anchor = std::uniform_int_distribution<int>(first, next - 1)(rng);
            const bool cycle = c4_only || coin(rng) < 60;
            if (!cycle) {
                edges.emplace_back(anchor, next++);
                out.all_c4 = false;
                continue;
            }
            const int len = c4_only ? 4 : (bipartite ? 2 * even_len(rng) : any_len(rng));
            int prev = anchor;
            for (int i = 1; i < len; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, anchor);
            ++out.cycles;
            odd_cycle = odd_cycle || len % 2 == 1;
            if (len != 4)
                out.all_c4 = false;
        }
    }
    std::vector<int> perm(next);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    out.graph = make_graph(next, edges);
    out.bipartite = !odd_cycle;
    return out;
}

} // namespace ldcode
