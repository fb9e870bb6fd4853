#pragma once

#include "ldcode/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldcode {

/// Subsets of [r] = {1..r}: bit i-1 stands for element i.
using Subset = std::uint32_t;

/// "134" for {1,3,4} (comma separated once r >= 10).
std::string subset_name(Subset subset, int r);

/// Bipartite graph on U = [r] (vertices 0..r-1) and one W vertex per subset
/// (vertices r, r+1, ...), each W vertex adjacent to exactly its subset.
struct SubsetFamilyGraph {
    int r = 0;
    std::vector<Subset> w_subsets;
    Graph graph{1};
    /// How the family was obtained: "recipe", "recipe minus ...", "recipe plus ...", or "search".
    std::string provenance;
    int lambda = 0;
    int lambda_complement = 0;

    [[nodiscard]] int s() const { return static_cast<int>(w_subsets.size()); }
};

/// Builds the graph of a family of distinct non-empty subsets.
Graph subset_family_graph(int r, const std::vector<Subset>& subsets);

/// The listed base family for G(r, ceil(3r/2 + 1)); for odd r the empty set is dropped.
std::vector<Subset> base_family(int r);

/// The certified solver check failed for every candidate family.
class CertificationError : public GraphError {
public:
    CertificationError(const std::string& what, std::string graph6);
    [[nodiscard]] const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

/// 3r/2 + 1 <= s <= 2^r - 1, compared exactly. Requires 3 <= r <= s.
bool feasibility(int r, int s);

/// Bipartite graph with sides r and s, λ = r and λ(complement) = r + 1, both
/// certified by the exact solver before returning.
/// Throws GraphError when (r, s) lies outside 3r/2 + 1 <= s <= 2^r - 1 (r >= 3),
/// or when r + s exceeds the supported order; CertificationError if no family certifies.
SubsetFamilyGraph construct_extremal(int r, int s);

/// Bi-star K_2(r, s): λ = r + s - 2, λ(complement) = r + s - 3. Requires 3 <= r <= s.
Graph construct_gap_minus(int r, int s);

/// Biclique K_{r,s}: λ = λ(complement) = r + s - 2. Requires 3 <= r <= s.
Graph construct_gap_zero(int r, int s);

struct GapCertificate {
    int lambda = 0;
    int lambda_complement = 0;
    [[nodiscard]] int gap() const { return lambda_complement - lambda; }
};

GapCertificate certify_gap(const Graph& g);

} // namespace ldcode
