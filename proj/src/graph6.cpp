#include "ldcode/graph6.hpp"

namespace ldcode {

namespace {

constexpr int kBias = 63;
constexpr char kLongOrder = 126;

std::size_t bit_count(int n)
{
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

} // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : GraphError("graph6: " + what + " at byte " + std::to_string(offset)), detail_(what), offset_(offset)
{
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += kLongOrder;
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 0x3f) + kBias);
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kBias);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out += static_cast<char>((acc << (6 - filled)) + kBias);
    return out;
}

Graph decode_graph6(std::string_view text)
{
    auto value_at = [&](std::size_t pos) -> int {
        if (pos >= text.size())
            throw Graph6Error("unexpected end of input", pos);
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > 126)
            throw Graph6Error("byte value " + std::to_string(c) + " outside 63..126", pos);
        return c - kBias;
    };

    std::size_t pos = 0;
    int n = 0;
    if (!text.empty() && text[0] == kLongOrder) {
        if (text.size() > 1 && text[1] == kLongOrder)
            throw Graph6Error("order above " + std::to_string(kMaxOrder) + " is not supported", 0);
        for (std::size_t k = 1; k <= 3; ++k)
            n = (n << 6) | value_at(k);
        if (n < 63)
            throw Graph6Error("order " + std::to_string(n) + " must use the one-byte form", 1);
        pos = 4;
    } else {
        n = value_at(0);
        pos = 1;
    }
    if (n < 1)
        throw Graph6Error("graph has no vertices", 0);
    if (n > kMaxOrder)
        throw Graph6Error("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder), 0);

    const std::size_t bits = bit_count(n);
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() < pos + bytes)
        throw Graph6Error("expected " + std::to_string(bytes) + " edge bytes", text.size());
    if (text.size() > pos + bytes)
        throw Graph6Error("trailing data", pos + bytes);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = value_at(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + bytes - 1;
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (value_at(last) & pad_mask)
            throw Graph6Error("non-zero padding bits", last);
    }
    return make_graph(n, edges);
}

std::vector<Graph> read_graph6_lines(std::string_view text)
{
    std::vector<Graph> out;
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        constexpr std::string_view header = ">>graph6<<";
        std::size_t skipped = 0;
        if (line.starts_with(header)) {
            line.remove_prefix(header.size());
            skipped = header.size();
        }
        if (!line.empty()) {
            try {
                out.push_back(decode_graph6(line));
            } catch (const Graph6Error& e) {
                throw Graph6Error(e.detail() + " (line " + std::to_string(line_no) + ")",
                                  start + skipped + e.offset());
            }
        }
        start = end + 1;
    }
    return out;
}

} // namespace ldcode
