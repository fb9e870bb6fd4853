#pragma once

#include "ldcode/graph.hpp"
#include "ldcode/report.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ldcode {

/// Graphs a sweep runs over: every connected graph (optionally bipartite) of
/// order 1..n_max from the internal enumerator, plus any externally supplied
/// graphs. External graphs that do not fit the sweep (disconnected, or not
/// bipartite for a bipartite sweep) are skipped.
struct Universe {
    int n_max = 0;
    bool bipartite_only = false;
    std::vector<Graph> external;

    [[nodiscard]] std::string description() const;
    /// Throws EnumerationCapError when n_max exceeds the enumeration cap and no
    /// external graphs are supplied; otherwise enumerates up to the cap.
    [[nodiscard]] std::vector<Graph> graphs() const;
};

// Per-graph checks. Each returns one message per failed assertion.
std::vector<std::string> check_difuno(const Graph& g);
std::vector<std::string> check_teoremon(const Graph& g);
std::vector<std::string> check_global_symmetry(const Graph& g);
/// Bipartite gap theorem conclusions; `gap_plus` is set when λ(complement) = λ + 1.
std::vector<std::string> check_bipartite_gap(const Graph& g, bool* gap_plus = nullptr);
std::vector<std::string> check_assoc_properties(const Graph& g, int samples_per_set, std::uint64_t seed);

/// |λ(G) - λ(complement)| <= 1.
VerificationReport suite_difuno(const Universe& universe);

/// Sandwich bounds, the unequal case, the all-codes-non-global biconditional,
/// and the dominating-vertex characterisation of global LD-sets.
VerificationReport suite_teoremon(const Universe& universe);

/// λ_g(G) = λ_g(complement).
VerificationReport suite_global_symmetry(const Universe& universe);

/// Solver against the closed forms for every family member of order n_min..n_max
/// that has a closed form.
VerificationReport suite_table1(int n_min, int n_max);

/// Bipartite graphs with λ(complement) = λ + 1: side bounds, uniqueness of the
/// code, two edges per label, cactus subgraphs and the degree-1 criterion.
VerificationReport suite_bipartite_gap(const Universe& universe);

/// Associated-graph properties for every LD-code (plus sampled larger LD-sets
/// above order 6), with `samples_per_graph` random trails per set.
VerificationReport suite_assoc_properties(const Universe& universe, int samples_per_graph, std::uint64_t seed);

/// Cactus identities on `count` seeded random cactus graphs; every other one is
/// generated without odd cycles, so at least half are bipartite.
VerificationReport suite_cactus(int count, std::uint64_t seed);

/// construct_extremal for each (r, s), re-certified independently.
VerificationReport suite_extremal(const std::vector<std::pair<int, int>>& pairs);

/// Names accepted by run_suite: difuno, teoremon, gsymmetry, table1, bipartite_gap, assoc, cactus, extremal.
std::vector<std::string> suite_names();

struct SuiteOptions {
    int n_max = 6;
    int n_min = 1;
    std::vector<Graph> external;
    int samples = 100;
    std::uint64_t seed = 1;
    int count = 1000;
    int r_max = 4;
};

/// Dispatches by name; throws GraphError for an unknown suite.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

} // namespace ldcode
