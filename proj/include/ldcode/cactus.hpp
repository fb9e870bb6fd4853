#pragma once

#include "ldcode/graph.hpp"

#include <random>
#include <vector>

namespace ldcode {

/// A block (maximal 2-connected piece or bridge) as its edge list.
using Block = std::vector<Edge>;

/// Blocks of every component; isolated vertices contribute none.
std::vector<Block> blocks(const Graph& g);

/// Every block of every component is a single edge or a single cycle.
bool is_cactus(const Graph& g);

struct CactusStats {
    int cc = 0;     ///< connected components
    int cy = 0;     ///< cycle blocks
    int ex = 0;     ///< |E| - 4 cy
    int order = 0;
    int size = 0;

    bool operator==(const CactusStats&) const = default;
};

/// Throws GraphError on a non-cactus input.
CactusStats cactus_stats(const Graph& g);

/// Every block is a 4-cycle.
bool all_blocks_are_c4(const Graph& g);

/// 4|V| = 3|E| + 4 for a connected bipartite cactus.
/// Throws GraphError when g is disconnected, not bipartite, or not a cactus.
bool tightness_check(const Graph& g);

/// Random cactus with its construction record, used as ground truth.
struct RandomCactus {
    Graph graph{1};
    int components = 0;
    int cycles = 0;
    bool all_c4 = false;
    bool bipartite = false;
};

/// Glues random blocks (bridges and cycles; even cycles only when `bipartite`)
/// onto 1-3 components, then shuffles vertex labels. Order is at least 4.
RandomCactus random_cactus(std::mt19937_64& rng, bool bipartite);

} // namespace ldcode
