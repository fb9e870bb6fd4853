#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace ldcode;

namespace {

std::size_t offset_of(std::string_view text)
{
    try {
        (void)decode_graph6(text);
    } catch (const Graph6Error& e) {
        return e.offset();
    }
    FAIL("no error for " << text);
    return 0;
}

/// Graph6 written out bit by bit from the format description.
std::string reference_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + bits[k + b];
        out += static_cast<char>(63 + value);
    }
    return out;
}

} // namespace

TEST_SUITE("graph6")
{
    TEST_CASE("small literals")
    {
        CHECK(encode_graph6(Graph(1)) == "@");
        const Graph k2 = decode_graph6("A_");
        CHECK(k2.order() == 2);
        CHECK(k2.size() == 1);
        CHECK(decode_graph6("A?").size() == 0);
        CHECK(encode_graph6(generate_family(FamilySpec::of_order(FamilyKind::complete, 4))) == "C~");
    }

    TEST_CASE("round trip against a bitwise reference encoder")
    {
        std::mt19937_64 rng(5);
        for (int n = 1; n <= 64; ++n) {
            const Graph g = oracle::random_graph(rng, n, 0.3);
            const std::string text = encode_graph6(g);
            CHECK(text == reference_graph6(g));
            CHECK(decode_graph6(text) == g);
            CHECK(encode_graph6(decode_graph6(text)) == text);
        }
        const Graph c7 = generate_family(FamilySpec::of_order(FamilyKind::cycle, 7));
        CHECK(decode_graph6(encode_graph6(c7)) == c7);
    }

    TEST_CASE("malformed strings report byte offsets")
    {
        CHECK(offset_of("") == 0);
        CHECK(offset_of("?") == 0);            // zero vertices
        CHECK(offset_of("A") == 1);            // missing edge byte
        CHECK(offset_of("A__") == 2);          // trailing data
        CHECK(offset_of("A`") == 1);           // padding bit set
        CHECK(offset_of("B ") == 1);           // byte below 63
        CHECK(offset_of("~??") == 3);          // truncated long form
        CHECK(offset_of("~??A") == 1);         // long form for a small order
        CHECK(offset_of("~?AA") == 0);         // order above 64
        CHECK(offset_of("~~") == 0);           // eight-byte form
        CHECK_THROWS_WITH_AS(decode_graph6("A`"), doctest::Contains("padding"), Graph6Error);
    }

    TEST_CASE("multi-line input")
    {
        const auto graphs = read_graph6_lines(">>graph6<<A_\n\nBw\r\n@\n");
        REQUIRE(graphs.size() == 3);
        CHECK(graphs[0].size() == 1);
        CHECK(graphs[1].size() == 3);
        CHECK(graphs[2].order() == 1);
        CHECK(read_graph6_lines("").empty());
        try {
            (void)read_graph6_lines("A_\nA\n");
            FAIL("expected an error");
        } catch (const Graph6Error& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(e.offset() == 4);
        }
    }
}
