#include "ldcode/families.hpp"

#include <array>

namespace ldcode {

namespace {

constexpr std::array kKindNames{
    std::pair{FamilyKind::path, std::string_view("path")},
    std::pair{FamilyKind::cycle, std::string_view("cycle")},
    std::pair{FamilyKind::wheel, std::string_view("wheel")},
    std::pair{FamilyKind::complete, std::string_view("complete")},
    std::pair{FamilyKind::star, std::string_view("star")},
    std::pair{FamilyKind::complete_bipartite, std::string_view("complete_bipartite")},
    std::pair{FamilyKind::bistar, std::string_view("bistar")},
};

void require(bool ok, const FamilySpec& spec, const char* range)
{
    if (!ok)
        throw GraphError(std::string(family_name(spec.kind)) + " requires " + range);
}

std::vector<Edge> cycle_edges(int len)
{
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i)
        edges.emplace_back(i, (i + 1) % len);
    return edges;
}

} // namespace

std::string_view family_name(FamilyKind kind)
{
    for (auto [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text)
{
    for (auto [k, name] : kKindNames)
        if (name == text)
            return k;
    return std::nullopt;
}

std::string FamilySpec::name() const
{
    auto num = [](int x) { return std::to_string(x); };
    switch (kind) {
    case FamilyKind::path: return "P_" + num(n);
    case FamilyKind::cycle: return "C_" + num(n);
    case FamilyKind::wheel: return "W_" + num(n);
    case FamilyKind::complete: return "K_" + num(n);
    case FamilyKind::star: return "K_{1," + num(n - 1) + "}";
    case FamilyKind::complete_bipartite: return "K_{" + num(r) + "," + num(s) + "}";
    case FamilyKind::bistar: return "K_2(" + num(r) + "," + num(s) + ")";
    }
    return "?";
}

Graph generate_family(const FamilySpec& spec)
{
    std::vector<Edge> edges;
    const int n = spec.order();
    switch (spec.kind) {
    case FamilyKind::path:
        require(n >= 1, spec, "n >= 1");
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case FamilyKind::cycle:
        require(n >= 3, spec, "n >= 3");
        edges = cycle_edges(n);
        break;
    case FamilyKind::wheel:
        require(n >= 4, spec, "n >= 4");
        edges = cycle_edges(n - 1);
        for (int i = 0; i < n - 1; ++i)
            edges.emplace_back(i, n - 1);
        break;
    case FamilyKind::complete:
        require(n >= 1, spec, "n >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        break;
    case FamilyKind::star:
        require(n >= 2, spec, "n >= 2");
        for (int i = 1; i < n; ++i)
            edges.emplace_back(0, i);
        break;
    case FamilyKind::complete_bipartite:
        require(1 <= spec.r && spec.r <= spec.s, spec, "1 <= r <= s");
        for (int i = 0; i < spec.r; ++i)
            for (int j = spec.r; j < n; ++j)
                edges.emplace_back(i, j);
        break;
    case FamilyKind::bistar:
        require(1 <= spec.r && spec.r <= spec.s, spec, "1 <= r <= s");
        for (int i = 1; i < spec.r; ++i)
            edges.emplace_back(0, i);
        for (int i = spec.r + 1; i < n; ++i)
            edges.emplace_back(spec.r, i);
        edges.emplace_back(0, spec.r);
        break;
    }
    return make_graph(n, edges);
}

} // namespace ldcode
