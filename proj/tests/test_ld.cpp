#include "ldcode/enumerate.hpp"
#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"
#include "ldcode/ld.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace ldcode;

namespace {

Graph family(FamilyKind kind, int n)
{
    return generate_family(FamilySpec::of_order(kind, n));
}

Graph sides(FamilyKind kind, int r, int s)
{
    return generate_family(FamilySpec::of_sides(kind, r, s));
}

VertexSet mask_set(oracle::Mask m)
{
    VertexSet s;
    for (int v : oracle::members(m))
        s.insert(v);
    return s;
}

// P_4 a-b-c-d as 0-1-2-3; K_{1,3} with centre 0.
const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
const Graph k13 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

void compare_with_oracle(const Graph& g)
{
    CAPTURE(encode_graph6(g));
    const auto lam = oracle::lambda(g);
    const LdCode code = lambda(g);
    CHECK(code.size == lam.size);
    CHECK(code.witness.to_vector() == lam.lex_smallest);
    CHECK(lambda_complement(g) == oracle::lambda_complement(g).size);
    const auto glob = oracle::lambda_global(g);
    const LdCode gcode = lambda_global(g);
    CHECK(gcode.size == glob.size);
    CHECK(gcode.witness.to_vector() == glob.lex_smallest);
    std::vector<VertexSet> expected;
    for (oracle::Mask m : lam.all)
        expected.push_back(mask_set(m));
    std::vector<VertexSet> got = all_ld_codes(g);
    std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    CHECK(got == expected);
}

} // namespace

TEST_SUITE("ld")
{
    TEST_CASE("domination")
    {
        CHECK(is_dominating(k13, VertexSet::single(0)));
        CHECK_FALSE(is_dominating(c4, VertexSet::single(0)));
        CHECK(is_dominating(p4, VertexSet::from({0, 3})));
        CHECK_FALSE(is_dominating(c4, VertexSet{}));
    }

    TEST_CASE("location-domination")
    {
        CHECK(is_ld_set(p4, VertexSet::from({0, 3})));
        CHECK_FALSE(is_ld_set(k13, VertexSet::from({0, 1})));
        CHECK(is_ld_set(c4, VertexSet::from({0, 1})));
        const auto tr = traces(p4, VertexSet::from({0, 3}));
        REQUIRE(tr.size() == 2);
        CHECK(tr[0].owner == 1);
        CHECK(tr[0].members == VertexSet::single(0));
        CHECK(tr[1].members == VertexSet::single(3));
    }

    TEST_CASE("dominating vertex")
    {
        CHECK(dominating_vertex(k13, VertexSet::from({1, 2, 3})) == 0);
        CHECK_FALSE(dominating_vertex(p4, VertexSet::from({0, 3})).has_value());
        const Graph k4 = family(FamilyKind::complete, 4);
        for (Vertex out = 0; out < 4; ++out)
            CHECK(dominating_vertex(k4, VertexSet::first(4) - VertexSet::single(out)) == out);
        CHECK_THROWS_AS(dominating_vertex(k13, VertexSet::single(1)), GraphError);
    }

    TEST_CASE("global LD-sets")
    {
        CHECK(is_global_ld_set(p4, VertexSet::from({0, 3})));
        CHECK(is_ld_set(complement(p4), VertexSet::from({0, 3})));
        CHECK_FALSE(is_global_ld_set(k13, VertexSet::from({1, 2, 3})));
        CHECK_FALSE(is_global_ld_set(family(FamilyKind::complete, 4), VertexSet::from({0, 1, 2})));
    }

    TEST_CASE("analysis bundles")
    {
        const LdAnalysis a = analyze(k13, VertexSet::from({1, 2, 3}));
        CHECK(a.is_dominating);
        CHECK(a.is_ld);
        CHECK(a.dominating_vertex == 0);
        CHECK_FALSE(a.is_global);
        const LdAnalysis empty = analyze(c4, VertexSet{});
        CHECK_FALSE(empty.is_dominating);
        CHECK_FALSE(empty.is_ld);
        CHECK_FALSE(empty.is_global);
        const LdAnalysis p = analyze(p4, VertexSet::from({0, 3}));
        CHECK(p.is_dominating);
        CHECK(p.is_ld);
        CHECK_FALSE(p.dominating_vertex.has_value());
        CHECK(p.is_global);
    }

    TEST_CASE("analysis invariants on every subset of small graphs")
    {
        for (const Graph& g : enumerate_connected_graphs(5, false)) {
            const auto m = oracle::matrix(g);
            const auto c = oracle::complement(m);
            for (oracle::Mask bits = 0; bits < (oracle::Mask{1} << g.order()); ++bits) {
                const VertexSet s = mask_set(bits);
                const LdAnalysis a = analyze(g, s);
                CHECK(a.is_ld == oracle::is_ld(m, bits));
                CHECK(a.is_global == (oracle::is_ld(m, bits) && oracle::is_ld(c, bits)));
                if (a.is_ld)
                    CHECK(a.is_dominating);
                if (a.is_global)
                    CHECK(a.is_ld);
                if (a.is_ld) {
                    CHECK(a.is_global == !a.dominating_vertex.has_value());
                    CHECK(is_ld_set(complement(g), s) == is_dominating(complement(g), s));
                }
            }
        }
    }

    TEST_CASE("named values")
    {
        CHECK(lambda(family(FamilyKind::path, 7)).size == 3);
        CHECK(lambda(sides(FamilyKind::complete_bipartite, 2, 3)).size == 3);
        CHECK(lambda(family(FamilyKind::complete, 5)).size == 4);
        CHECK(lambda(family(FamilyKind::cycle, 7)).size == 3);
        CHECK(lambda_complement(family(FamilyKind::path, 7)) == 3);
        CHECK(lambda_complement(sides(FamilyKind::bistar, 3, 3)) == 3);
        CHECK(lambda_complement(k13) == 3);
        CHECK(lambda_global(family(FamilyKind::complete, 4)).size == 4);
        CHECK(lambda_global(family(FamilyKind::path, 7)).size == 3);
        CHECK(lambda_global(family(FamilyKind::star, 5)).size == 4);
        CHECK(lambda(Graph(1)).size == 1);
        CHECK(lambda(Graph(1)).witness == VertexSet::single(0));
    }

    TEST_CASE("exact solvers agree with exhaustive subset scans")
    {
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : enumerate_connected_graphs(n, false))
                compare_with_oracle(g);
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 60; ++trial)
            compare_with_oracle(oracle::random_graph(rng, 7 + trial % 4, 0.2 + 0.1 * (trial % 6)));
    }

    TEST_CASE("disconnected graphs: lambda is additive over components")
    {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph a = oracle::random_connected_graph(rng, 2 + trial % 4, 0.5);
            const Graph b = oracle::random_connected_graph(rng, 2 + trial % 3, 0.5);
            std::vector<Edge> edges = a.edges();
            for (auto [u, v] : b.edges())
                edges.emplace_back(u + a.order(), v + a.order());
            const Graph g = make_graph(a.order() + b.order(), edges);
            CHECK(lambda(g).size == lambda(a).size + lambda(b).size);
            CHECK(lambda(g).size == oracle::lambda(g).size);
        }
    }

    TEST_CASE("witness traces respect the counting bound")
    {
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : enumerate_connected_graphs(n, false)) {
                const LdCode code = lambda(g);
                CHECK(code.size >= lambda_lower_bound(n));
                CHECK(n - code.size <= (1 << code.size) - 1);
                std::vector<VertexSet> seen;
                for (const Trace& t : traces(g, code.witness)) {
                    CHECK_FALSE(t.members.empty());
                    CHECK(t.members.is_subset_of(code.witness));
                    CHECK(std::find(seen.begin(), seen.end(), t.members) == seen.end());
                    seen.push_back(t.members);
                }
            }
        CHECK(lambda_lower_bound(1) == 1);
        CHECK(lambda_lower_bound(2) == 1);
        CHECK(lambda_lower_bound(3) == 2);
        CHECK(lambda_lower_bound(4) == 2);
        CHECK(lambda_lower_bound(7) == 3);
    }

    TEST_CASE("LD-set search by size")
    {
        const Graph c6 = family(FamilyKind::cycle, 6);
        CHECK_FALSE(find_ld_set(c6, 2).has_value());
        const auto three = find_ld_set(c6, 3);
        REQUIRE(three);
        CHECK(is_ld_set(c6, *three));
        int count = 0;
        for_each_ld_set(c6, 3, false, [&](VertexSet s) {
            CHECK(is_ld_set(c6, s));
            ++count;
            return true;
        });
        CHECK(count == static_cast<int>(ld_sets_of_size(c6, 3).size()));
        int stopped = 0;
        for_each_ld_set(c6, 3, false, [&](VertexSet) { return ++stopped < 2; });
        CHECK(stopped == 2);
        for_each_ld_set(c6, 4, true, [&](VertexSet s) {
            CHECK(is_global_ld_set(c6, s));
            return true;
        });
    }

    TEST_CASE("closed forms")
    {
        CHECK(closed_form(FamilySpec::of_order(FamilyKind::cycle, 10), Invariant::lambda) == 4);
        CHECK(closed_form(FamilySpec::of_order(FamilyKind::wheel, 8), Invariant::lambda_complement) == 4);
        CHECK(closed_form(FamilySpec::of_sides(FamilyKind::complete_bipartite, 3, 4), Invariant::lambda_global) == 5);
        CHECK(closed_form(FamilySpec::of_sides(FamilyKind::bistar, 3, 3), Invariant::lambda_complement) == 3);
        CHECK_THROWS_WITH_AS(closed_form(FamilySpec::of_order(FamilyKind::path, 6), Invariant::lambda),
                             doctest::Contains("n >= 7"), GraphError);
        CHECK_THROWS_WITH_AS(closed_form(FamilySpec::of_order(FamilyKind::wheel, 7), Invariant::lambda),
                             doctest::Contains("n >= 8"), GraphError);
        CHECK_THROWS_AS(closed_form(FamilySpec::of_sides(FamilyKind::bistar, 2, 4), Invariant::lambda), GraphError);
        CHECK_THROWS_AS(closed_form(FamilySpec::of_sides(FamilyKind::complete_bipartite, 1, 4), Invariant::lambda),
                        GraphError);
        CHECK_THROWS_AS(closed_form(FamilySpec::of_order(FamilyKind::star, 3), Invariant::lambda), GraphError);
    }

    TEST_CASE("solvers match closed forms on all family graphs up to order 12")
    {
        std::vector<FamilySpec> specs;
        for (int n = 2; n <= 12; ++n)
            for (FamilyKind kind : {FamilyKind::path, FamilyKind::cycle, FamilyKind::wheel, FamilyKind::complete,
                                    FamilyKind::star})
                specs.push_back(FamilySpec::of_order(kind, n));
        for (int r = 1; r <= 6; ++r)
            for (int s = r; r + s <= 12; ++s) {
                specs.push_back(FamilySpec::of_sides(FamilyKind::complete_bipartite, r, s));
                specs.push_back(FamilySpec::of_sides(FamilyKind::bistar, r, s));
            }
        int checked = 0;
        for (const FamilySpec& spec : specs) {
            if (!closed_form_defined(spec))
                continue;
            CAPTURE(spec.name());
            const Graph g = generate_family(spec);
            CHECK(lambda(g).size == closed_form(spec, Invariant::lambda));
            CHECK(lambda_complement(g) == closed_form(spec, Invariant::lambda_complement));
            CHECK(lambda_global(g).size == closed_form(spec, Invariant::lambda_global));
            ++checked;
        }
        CHECK(checked > 60);
    }
}
