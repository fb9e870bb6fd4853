#include "ldcode/cactus.hpp"
#include "ldcode/families.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace ldcode;

namespace {

Graph cycle(int n)
{
    return generate_family(FamilySpec::of_order(FamilyKind::cycle, n));
}

/// k copies of C_4 glued in a chain, consecutive copies sharing one cut vertex.
Graph c4_chain(int k)
{
    std::vector<Edge> edges;
    int shared = 0;
    int next = 1;
    for (int i = 0; i < k; ++i) {
        const int b = next, c = next + 1, d = next + 2;
        next += 3;
        edges.insert(edges.end(), {{shared, b}, {b, c}, {c, d}, {d, shared}});
        shared = c;
    }
    return make_graph(next, edges);
}

/// Cycle rank and components counted directly with union-find.
std::pair<int, int> rank_and_components(const Graph& g)
{
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = g.order();
    int rank = 0;
    for (auto [u, v] : g.edges()) {
        const int a = find(u), b = find(v);
        if (a == b) {
            ++rank;
        } else {
            parent[a] = b;
            --components;
        }
    }
    return {rank, components};
}

} // namespace

TEST_SUITE("cactus")
{
    TEST_CASE("recognition")
    {
        CHECK(is_cactus(cycle(4)));
        CHECK_FALSE(is_cactus(generate_family(FamilySpec::of_order(FamilyKind::complete, 4))));
        CHECK(is_cactus(c4_chain(2)));
        CHECK(is_cactus(Graph(3)));
        CHECK(is_cactus(generate_family(FamilySpec::of_order(FamilyKind::path, 6))));
        const Graph theta = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
        CHECK_FALSE(is_cactus(theta));
        CHECK(blocks(c4_chain(3)).size() == 3);
        CHECK(blocks(generate_family(FamilySpec::of_order(FamilyKind::path, 5))).size() == 4);
    }

    TEST_CASE("statistics")
    {
        CHECK(cactus_stats(cycle(4)) == CactusStats{1, 1, 0, 4, 4});
        const Graph tree = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
        CHECK(cactus_stats(tree) == CactusStats{1, 0, 4, 5, 4});
        const Graph two = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
        CHECK(cactus_stats(two) == CactusStats{2, 2, 0, 8, 8});
        CHECK_THROWS_AS(cactus_stats(generate_family(FamilySpec::of_order(FamilyKind::complete, 4))), GraphError);
    }

    TEST_CASE("tightness")
    {
        CHECK(tightness_check(c4_chain(3)));
        CHECK(all_blocks_are_c4(c4_chain(3)));
        CHECK_FALSE(tightness_check(cycle(6)));
        const Graph pendant = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
        CHECK_FALSE(tightness_check(pendant));
        CHECK_FALSE(all_blocks_are_c4(pendant));
        CHECK_THROWS_AS(tightness_check(make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}})),
                        GraphError);
        CHECK_THROWS_AS(tightness_check(cycle(5)), GraphError);
        CHECK_THROWS_AS(tightness_check(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})), GraphError);
    }

    TEST_CASE("random cacti satisfy the identities")
    {
        std::mt19937_64 rng(41);
        int bipartite = 0, tight = 0;
        for (int trial = 0; trial < 500; ++trial) {
            const RandomCactus rc = random_cactus(rng, trial % 2 == 0);
            const Graph& g = rc.graph;
            REQUIRE(is_cactus(g));
            const auto [rank, components] = rank_and_components(g);
            const CactusStats st = cactus_stats(g);
            CHECK(st.cy == rank);
            CHECK(st.cy == rc.cycles);
            CHECK(st.cc == components);
            CHECK(st.cc == rc.components);
            CHECK(st.order == st.size - st.cy + st.cc);
            CHECK(st.ex == st.size - 4 * st.cy);
            CHECK(rc.bipartite == oracle::two_colourable(oracle::matrix(g)));
            if (!rc.bipartite)
                continue;
            ++bipartite;
            CHECK(st.ex >= 0);
            CHECK(4 * st.order == 3 * st.size + st.ex + 4 * st.cc);
            if (st.cc == 1) {
                const bool t = tightness_check(g);
                CHECK(t == all_blocks_are_c4(g));
                CHECK(t == rc.all_c4);
                CHECK(4 * st.order >= 3 * st.size + 4);
                tight += t ? 1 : 0;
            }
        }
        CHECK(bipartite >= 250);
        CHECK(tight > 0);
    }
}
