#include "ldcode/extremal.hpp"

#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"
#include "ldcode/ld.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace ldcode {

CertificationError::CertificationError(const std::string& what, std::string graph6)
    : GraphError(what + " (graph6 " + graph6 + ")"), graph6_(std::move(graph6))
{
}

std::string subset_name(Subset subset, int r)
{
    std::string out;
    for (int i = 1; i <= r; ++i) {
        if (!((subset >> (i - 1)) & 1U))
            continue;
        if (r >= 10 && !out.empty())
            out += ',';
        out += std::to_string(i);
    }
    return out.empty() ? std::string("{}") : out;
}

Graph subset_family_graph(int r, const std::vector<Subset>& subsets)
{
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        if (subsets[j] == 0)
            throw GraphError("subset family contains the empty set");
        if (std::count(subsets.begin(), subsets.end(), subsets[j]) > 1)
            throw GraphError("subset family repeats " + subset_name(subsets[j], r));
        for (int i = 0; i < r; ++i)
            if ((subsets[j] >> i) & 1U)
                edges.emplace_back(i, r + static_cast<int>(j));
    }
    return make_graph(r + static_cast<int>(subsets.size()), edges);
}

std::vector<Subset> base_family(int r)
{
    const Subset all = (Subset{1} << r) - 1;
    auto without = [&](std::initializer_list<int> elements) {
        Subset s = all;
        for (int e : elements)
            s &= ~(Subset{1} << (e - 1));
        return s;
    };
    std::vector<Subset> family{all};
    for (int i = 1; i <= r; ++i)
        family.push_back(without({i}));
    const int k = r / 2;
    if (r % 2 == 0) {
        for (int i = 1; i <= k; ++i)
            family.push_back(without({2 * i - 1, 2 * i}));
    } else {
        for (int i = 1; i <= k - 1; ++i)
            family.push_back(without({2 * i - 1, 2 * i}));
        for (Subset extra : {without({r - 2, r - 1}), without({r - 1, r}), without({r - 2, r - 1, r})})
            if (extra != 0)
                family.push_back(extra);
    }
    return family;
}

bool feasibility(int r, int s)
{
    if (r < 3 || s < r)
        throw GraphError("feasibility requires 3 <= r <= s, got r=" + std::to_string(r) + ", s=" + std::to_string(s));
    const bool lower = 2LL * s >= 3LL * r + 2;
    const bool upper = r >= 62 || static_cast<long long>(s) <= (1LL << r) - 1;
    return lower && upper;
}

namespace {

struct Certified {
    Graph graph;
    int lambda;
    int lambda_complement;
};

std::optional<Certified> certify(int r, const std::vector<Subset>& family)
{
    Graph g = subset_family_graph(r, family);
    if (!is_ld_set(g, VertexSet::first(r)))
        return std::nullopt;
    const int own = lambda(g).size;
    if (own != r)
        return std::nullopt;
    const int other = lambda_complement(g);
    if (other != r + 1)
        return std::nullopt;
    return Certified{std::move(g), own, other};
}

std::string names(const std::vector<Subset>& subsets, int r)
{
    std::string out;
    for (Subset s : subsets) {
        if (!out.empty())
            out += ' ';
        out += subset_name(s, r);
    }
    return out;
}

// Exhaustive fallback over s-element families in lexicographic index order.
std::optional<std::pair<std::vector<Subset>, Certified>> search_family(int r, int s)
{
    const int pool = (1 << r) - 1;
    double combos = 1;
    for (int i = 0; i < s; ++i)
        combos = combos * (pool - i) / (i + 1);
    if (combos > 2e5)
        return std::nullopt;
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i)
        pick[i] = i;
    for (;;) {
        std::vector<Subset> family;
        for (int p : pick)
            family.push_back(static_cast<Subset>(p + 1));
        if (auto c = certify(r, family))
            return std::pair{family, std::move(*c)};
        int i = s - 1;
        while (i >= 0 && pick[i] == pool - s + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < s; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

SubsetFamilyGraph construct_extremal(int r, int s)
{
    if (r < 3 || s < r || !feasibility(r, s))
        throw GraphError("construct_extremal: (r, s) = (" + std::to_string(r) + ", " + std::to_string(s) +
                         ") violates r >= 3 and 3r/2 + 1 <= s <= 2^r - 1");
    if (r + s > kMaxOrder)
        throw GraphError("construct_extremal: order r + s = " + std::to_string(r + s) + " exceeds " +
                         std::to_string(kMaxOrder));

    std::vector<Subset> family = base_family(r);
    std::string provenance = "recipe";
    std::optional<Certified> cert;

    std::vector<Subset> removed;
    while (static_cast<int>(family.size()) > s) {
        bool shrunk = false;
        for (int idx = static_cast<int>(family.size()) - 1; idx >= 0 && !shrunk; --idx) {
            std::vector<Subset> candidate = family;
            candidate.erase(candidate.begin() + idx);
            if (auto c = certify(r, candidate)) {
                removed.push_back(family[idx]);
                family = std::move(candidate);
                cert = std::move(c);
                shrunk = true;
            }
        }
        if (!shrunk)
            break;
    }
    if (!removed.empty())
        provenance += " minus " + names(removed, r);
    if (static_cast<int>(family.size()) > s)
        cert.reset();
    else if (!cert)
        cert = certify(r, family);

    if (!cert) {
        auto found = search_family(r, std::min(s, static_cast<int>(base_family(r).size())));
        if (!found)
            throw CertificationError("construct_extremal: no certified family for r=" + std::to_string(r),
                                     encode_graph6(subset_family_graph(r, family)));
        family = std::move(found->first);
        cert = std::move(found->second);
        provenance = "search";
    }

    if (static_cast<int>(family.size()) < s) {
        std::vector<Subset> extras;
        for (Subset x = 1; x < (Subset{1} << r); ++x)
            if (std::find(family.begin(), family.end(), x) == family.end())
                extras.push_back(x);
        std::stable_sort(extras.begin(), extras.end(), [](Subset a, Subset b) {
            if (std::popcount(a) != std::popcount(b))
                return std::popcount(a) > std::popcount(b);
            // Same size: lexicographic on the sorted element lists.
            const Subset low = (a ^ b) & (~(a ^ b) + 1);
            return (a & low) != 0;
        });
        std::vector<Subset> added;
        for (Subset x : extras) {
            if (static_cast<int>(family.size()) == s)
                break;
            family.push_back(x);
            if (auto c = certify(r, family)) {
                cert = std::move(c);
                added.push_back(x);
            } else {
                family.pop_back();
            }
        }
        if (static_cast<int>(family.size()) < s)
            throw CertificationError("construct_extremal: only " + std::to_string(family.size()) +
                                         " certified W vertices for r=" + std::to_string(r),
                                     encode_graph6(cert->graph));
        provenance += " plus " + names(added, r);
    }

    SubsetFamilyGraph out;
    out.r = r;
    out.w_subsets = std::move(family);
    out.graph = std::move(cert->graph);
    out.provenance = std::move(provenance);
    out.lambda = cert->lambda;
    out.lambda_complement = cert->lambda_complement;
    return out;
}

Graph construct_gap_minus(int r, int s)
{
    if (r < 3 || s < r)
        throw GraphError("construct_gap_minus requires 3 <= r <= s");
    return generate_family(FamilySpec::of_sides(FamilyKind::bistar, r, s));
}

Graph construct_gap_zero(int r, int s)
{
    if (r < 3 || s < r)
        throw GraphError("construct_gap_zero requires 3 <= r <= s");
    return generate_family(FamilySpec::of_sides(FamilyKind::complete_bipartite, r, s));
}

GapCertificate certify_gap(const Graph& g)
{
    return {lambda(g).size, lambda_complement(g)};
}

} // namespace ldcode
