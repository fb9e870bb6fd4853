#pragma once

#include "ldcode/families.hpp"
#include "ldcode/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ldcode {

/// N(owner) ∩ S for a vertex outside S.
struct Trace {
    Vertex owner = 0;
    VertexSet members;
};

[[nodiscard]] inline VertexSet trace_of(const Graph& g, Vertex v, VertexSet s)
{
    return g.neighbors(v) & s;
}

/// Traces of every vertex outside s, in increasing owner order.
std::vector<Trace> traces(const Graph& g, VertexSet s);

bool is_dominating(const Graph& g, VertexSet s);

/// Dominating, and the traces of the vertices outside s are pairwise distinct.
bool is_ld_set(const Graph& g, VertexSet s);

/// The unique vertex outside s adjacent to every member of s, if any.
/// Throws GraphError when s is not an LD-set (uniqueness is only guaranteed then).
std::optional<Vertex> dominating_vertex(const Graph& g, VertexSet s);

/// LD-set of both g and its complement.
bool is_global_ld_set(const Graph& g, VertexSet s);

struct LdAnalysis {
    bool is_dominating = false;
    bool is_ld = false;
    /// Only meaningful when is_ld.
    std::optional<Vertex> dominating_vertex;
    bool is_global = false;
};

LdAnalysis analyze(const Graph& g, VertexSet s);

/// Smallest k with n - k <= 2^k - 1: distinct non-empty traces need that many code vertices.
int lambda_lower_bound(int n);

struct LdCode {
    int size = 0;
    /// Lexicographically smallest set of that size.
    VertexSet witness;
};

/// Location-domination number with its lexicographically smallest LD-code.
LdCode lambda(const Graph& g);

int lambda_complement(const Graph& g);

/// Minimum global LD-set, searched between max(λ, λ̄) and min(λ, λ̄) + 1.
LdCode lambda_global(const Graph& g);

/// All LD-sets of g with exactly k vertices, in lexicographic order.
std::vector<VertexSet> ld_sets_of_size(const Graph& g, int k);

/// All LD-codes (minimum LD-sets) of g, in lexicographic order.
std::vector<VertexSet> all_ld_codes(const Graph& g);

/// Visits k-subsets of g's vertices in lexicographic order that are LD-sets of g
/// (and of its complement when `global`); stops early when `visit` returns false.
void for_each_ld_set(const Graph& g, int k, bool global, const std::function<bool(VertexSet)>& visit);

/// First LD-set of size k in lexicographic order, if one exists.
std::optional<VertexSet> find_ld_set(const Graph& g, int k, bool global = false);

enum class Invariant { lambda, lambda_complement, lambda_global };

/// Closed-form values for the named families, valid for P_n, C_n (n >= 7), W_n (n >= 8),
/// K_n (n >= 2), K_{1,n-1} (n >= 4), K_{r,n-r} (2 <= r <= n-r), K_2(r,s) (3 <= r <= s).
/// Throws GraphError outside those ranges.
int closed_form(const FamilySpec& spec, Invariant which);

/// Whether closed_form has a value for this spec.
bool closed_form_defined(const FamilySpec& spec);

} // namespace ldcode
