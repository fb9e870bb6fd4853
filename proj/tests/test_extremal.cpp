#include "ldcode/assoc.hpp"
#include "ldcode/cactus.hpp"
#include "ldcode/extremal.hpp"
#include "ldcode/families.hpp"
#include "ldcode/ld.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace ldcode;

namespace {

Subset parse_subset(const std::string& digits)
{
    Subset s = 0;
    for (char c : digits)
        s |= Subset{1} << (c - '1');
    return s;
}

std::set<Subset> subsets(std::initializer_list<const char*> names)
{
    std::set<Subset> out;
    for (const char* n : names)
        out.insert(parse_subset(n));
    return out;
}

void check_structure(const SubsetFamilyGraph& built)
{
    const int r = built.r, s = built.s();
    const Graph& g = built.graph;
    CHECK(g.order() == r + s);
    CHECK(is_connected(g));
    const std::set<Subset> distinct(built.w_subsets.begin(), built.w_subsets.end());
    CHECK(distinct.size() == built.w_subsets.size());
    CHECK(distinct.count(0) == 0);
    for (int i = 0; i < s; ++i)
        for (int u = 0; u < r; ++u)
            CHECK(g.adjacent(u, r + i) == ((built.w_subsets[i] >> u & 1) != 0));
    const auto sides = bipartition(g);
    REQUIRE(sides);
    CHECK(sides->r() == r);
    CHECK(is_ld_set(g, VertexSet::first(r)));
    CHECK(built.lambda == r);
    CHECK(built.lambda_complement == r + 1);
}

} // namespace

TEST_SUITE("extremal")
{
    TEST_CASE("feasibility interval")
    {
        CHECK(feasibility(3, 6));
        CHECK(feasibility(3, 7));
        CHECK_FALSE(feasibility(3, 5));
        CHECK_FALSE(feasibility(3, 8));
        CHECK_FALSE(feasibility(4, 16));
        CHECK(feasibility(4, 15));
        CHECK(feasibility(4, 7));
        CHECK_FALSE(feasibility(4, 6));
        CHECK(feasibility(5, 9));
        CHECK_FALSE(feasibility(5, 8));
        CHECK_THROWS_AS(feasibility(2, 5), GraphError);
        CHECK_THROWS_AS(feasibility(4, 3), GraphError);
        for (int r = 3; r <= 8; ++r)
            for (int s = r; s <= 300; ++s)
                CHECK(feasibility(r, s) == (2 * s >= 3 * r + 2 && s <= (1 << r) - 1));
    }

    TEST_CASE("subset families")
    {
        CHECK(subset_name(parse_subset("134"), 4) == "134");
        CHECK(base_family(4).size() == 7);
        const auto odd = base_family(3);
        CHECK(std::find(odd.begin(), odd.end(), Subset{0}) == odd.end());
        const Graph g = subset_family_graph(3, {parse_subset("12"), parse_subset("3")});
        CHECK(g.order() == 5);
        CHECK(g.adjacent(0, 3));
        CHECK(g.adjacent(2, 4));
        CHECK_FALSE(g.adjacent(2, 3));
        CHECK_THROWS_AS(subset_family_graph(3, {parse_subset("12"), parse_subset("12")}), GraphError);
        CHECK_THROWS_AS(subset_family_graph(3, {Subset{0}}), GraphError);
    }

    TEST_CASE("even r follows the recipe")
    {
        const SubsetFamilyGraph built = construct_extremal(4, 7);
        CHECK(std::set<Subset>(built.w_subsets.begin(), built.w_subsets.end()) ==
              subsets({"1234", "234", "134", "124", "123", "34", "12"}));
        CHECK(built.provenance == "recipe");
        check_structure(built);
        CHECK(oracle::lambda(built.graph).size == 4);
        CHECK(oracle::lambda_complement(built.graph).size == 5);
    }

    TEST_CASE("odd r is certified by the solver")
    {
        for (int s : {6, 7}) {
            const SubsetFamilyGraph built = construct_extremal(3, s);
            CHECK(built.s() == s);
            check_structure(built);
            CHECK(oracle::lambda(built.graph).size == 3);
            CHECK(oracle::lambda_complement(built.graph).size == 4);
            CHECK_FALSE(built.provenance.empty());
        }
    }

    TEST_CASE("r = 5 agrees with an exhaustive scan")
    {
        const SubsetFamilyGraph built = construct_extremal(5, 9);
        check_structure(built);
        CHECK(oracle::lambda(built.graph).size == 5);
        CHECK(oracle::lambda_complement(built.graph).size == 6);
    }

    TEST_CASE("the full power set for r = 4")
    {
        const SubsetFamilyGraph built = construct_extremal(4, 15);
        CHECK(std::set<Subset>(built.w_subsets.begin(), built.w_subsets.end()).size() == 15);
        check_structure(built);
    }

    TEST_CASE("U is the unique LD-code of every construction with r < s")
    {
        for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {4, 7}, {4, 9}, {4, 12}}) {
            const SubsetFamilyGraph built = construct_extremal(r, s);
            const auto codes = all_ld_codes(built.graph);
            REQUIRE(codes.size() == 1);
            CHECK(codes.front() == VertexSet::first(r));
            const AssocGraph a = build_associated(built.graph, VertexSet::first(r));
            for (Vertex u = 0; u < r; ++u)
                CHECK(edges_with_label(a, u).size() >= 2);
            CHECK(is_cactus(select_h(a).graph));
        }
    }

    TEST_CASE("out-of-range requests")
    {
        CHECK_THROWS_WITH_AS(construct_extremal(3, 5), doctest::Contains("2^r - 1"), GraphError);
        CHECK_THROWS_AS(construct_extremal(2, 3), GraphError);
        CHECK_THROWS_AS(construct_extremal(4, 16), GraphError);
        CHECK_THROWS_AS(construct_gap_minus(2, 4), GraphError);
        CHECK_THROWS_AS(construct_gap_zero(4, 3), GraphError);
    }

    TEST_CASE("bistars and bicliques")
    {
        const GapCertificate minus = certify_gap(construct_gap_minus(3, 3));
        CHECK(minus.lambda == 4);
        CHECK(minus.lambda_complement == 3);
        CHECK(minus.gap() == -1);
        CHECK(oracle::lambda(construct_gap_minus(3, 3)).size == 4);
        CHECK(oracle::lambda_complement(construct_gap_minus(3, 3)).size == 3);
        const GapCertificate m34 = certify_gap(construct_gap_minus(3, 4));
        CHECK(m34.lambda == 5);
        CHECK(m34.lambda_complement == 4);
        const GapCertificate zero = certify_gap(construct_gap_zero(3, 3));
        CHECK(zero.lambda == 4);
        CHECK(zero.lambda_complement == 4);
        CHECK(oracle::lambda(construct_gap_zero(3, 4)).size == 5);
        CHECK(oracle::lambda_complement(construct_gap_zero(3, 4)).size == 5);
        CHECK(lambda(generate_family(FamilySpec::of_sides(FamilyKind::complete_bipartite, 2, 3))).size == 3);
        for (int r = 3; r <= 6; ++r)
            for (int s = r; s <= 6; ++s) {
                const auto bs = FamilySpec::of_sides(FamilyKind::bistar, r, s);
                const auto kb = FamilySpec::of_sides(FamilyKind::complete_bipartite, r, s);
                const GapCertificate a = certify_gap(construct_gap_minus(r, s));
                CHECK(a.lambda == closed_form(bs, Invariant::lambda));
                CHECK(a.lambda_complement == closed_form(bs, Invariant::lambda_complement));
                const GapCertificate b = certify_gap(construct_gap_zero(r, s));
                CHECK(b.lambda == closed_form(kb, Invariant::lambda));
                CHECK(b.lambda_complement == closed_form(kb, Invariant::lambda_complement));
            }
    }
}
