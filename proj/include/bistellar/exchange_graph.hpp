#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bistellar/moves.hpp"

namespace bistellar {

/// The bistellar exchange graph of the middle-move equivalence class [K]:
/// one node per triangulation (keyed by its canonical facet list), one edge
/// per unordered pair {(alpha,beta),(beta,alpha)}.
struct ExchangeGraph {
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        BistellarPair pair;  // as found at `from`
        bool operator==(const Edge&) const = default;
    };

    std::vector<TriangulatedManifold> nodes;  // sorted by (BFS depth, key)
    std::vector<Edge> edges;

    std::size_t node_index(const TriangulatedManifold& L) const;
    bool operator==(const ExchangeGraph&) const = default;
};

/// Breadth-first closure of K under all middle bistellar moves. Node order
/// is deterministic: BFS depth, then canonical key. Throws BudgetExceeded
/// when more than `node_cap` triangulations are discovered.
ExchangeGraph enumerate_class(const TriangulatedManifold& K,
                              std::size_t node_cap = 10000);

/// All directed bistellar pairs of the class; closed under inversion.
std::set<BistellarPair> pair_set(const ExchangeGraph& graph);

/// DOT export; node labels are canonical facet keys, edge labels "alpha|beta".
std::string to_dot(const ExchangeGraph& graph);

/// Structured (JSON) export carrying full facet lists and pair data.
std::string to_structured(const ExchangeGraph& graph);

/// Re-imports a structured export; the result reproduces the graph exactly.
ExchangeGraph from_structured(const std::string& json_text);

}  // namespace bistellar
