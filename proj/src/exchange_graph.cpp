#include "bistellar/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

namespace bistellar {

std::size_t ExchangeGraph::node_index(const TriangulatedManifold& L) const {
    std::string key = L.key();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].key() == key) return i;
    throw Error(Errc::FaceNotInComplex, "triangulation is not a node of the graph");
}

ExchangeGraph enumerate_class(const TriangulatedManifold& K, std::size_t node_cap) {
    if (node_cap < 1) throw Error(Errc::BudgetExceeded, "node cap must be >= 1");
    if (K.dim() % 2 != 0)
        throw Error(Errc::NotMiddleMove, "exchange graphs need even dimension");

    struct NodeInfo {
        TriangulatedManifold state;
        std::size_t depth;
    };
    std::vector<NodeInfo> discovered;
    std::map<std::string, std::size_t> index_of;
    struct RawEdge {
        std::size_t from, to;
        BistellarPair pair;
    };
    std::vector<RawEdge> raw_edges;

    discovered.push_back({K, 0});
    index_of[K.key()] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        const TriangulatedManifold state = discovered[i].state;
        const std::size_t depth = discovered[i].depth;
        for (const BistellarPair& p : find_middle_pairs(state)) {
            TriangulatedManifold next = apply_move(state, p);
            std::string key = next.key();
            auto [it, fresh] = index_of.try_emplace(key, discovered.size());
            if (fresh) {
                if (discovered.size() >= node_cap)
                    throw Error(Errc::BudgetExceeded,
                                "orbit exceeds the node cap of " +
                                    std::to_string(node_cap));
                discovered.push_back({std::move(next), depth + 1});
                queue.push_back(it->second);
            }
            raw_edges.push_back({i, it->second, p});
        }
    }

    // Deterministic final order: (BFS depth, canonical key).
    std::vector<std::size_t> order(discovered.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (discovered[a].depth != discovered[b].depth)
            return discovered[a].depth < discovered[b].depth;
        return discovered[a].state.key() < discovered[b].state.key();
    });
    std::vector<std::size_t> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    ExchangeGraph graph;
    for (std::size_t i : order) graph.nodes.push_back(discovered[i].state);
    std::set<std::pair<std::pair<std::size_t, std::size_t>, BistellarPair>> seen;
    for (const RawEdge& e : raw_edges) {
        std::size_t from = rank[e.from], to = rank[e.to];
        // One edge per unordered pair {(a,b),(b,a)}.
        auto fwd = std::make_pair(std::make_pair(from, to), e.pair);
        auto rev = std::make_pair(std::make_pair(to, from), e.pair.inverse());
        if (seen.count(fwd) || seen.count(rev)) continue;
        seen.insert(fwd);
    }
    for (const auto& [ends, pair] : seen)
        graph.edges.push_back({ends.first, ends.second, pair});
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const ExchangeGraph::Edge& a, const ExchangeGraph::Edge& b) {
                  if (a.from != b.from) return a.from < b.from;
                  if (a.to != b.to) return a.to < b.to;
                  return a.pair < b.pair;
              });
    return graph;
}

std::set<BistellarPair> pair_set(const ExchangeGraph& graph) {
    std::set<BistellarPair> out;
    for (const auto& e : graph.edges) {
        out.insert(e.pair);
        out.insert(e.pair.inverse());
    }
    return out;
}

std::string to_dot(const ExchangeGraph& graph) {
    std::string out = "graph exchange {\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + graph.nodes[i].key() + "\"];\n";
    for (const auto& e : graph.edges)
        out += "  n" + std::to_string(e.from) + " -- n" + std::to_string(e.to) +
               " [label=\"" + e.pair.str() + "\"];\n";
    out += "}\n";
    return out;
}

namespace {

nlohmann::json simplex_to_json(const Simplex& s) { return s.vertices(); }

Simplex simplex_from_json(const nlohmann::json& j) {
    return Simplex(j.get<std::vector<int>>());
}

}  // namespace

std::string to_structured(const ExchangeGraph& graph) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& node : graph.nodes) {
        nlohmann::json facets = nlohmann::json::array();
        for (const auto& of : node.oriented_facets())
            facets.push_back({{"vertices", simplex_to_json(of.simplex)}, {"sign", of.sign}});
        j["nodes"].push_back({{"dimension", node.dim()},
                              {"key", node.key()},
                              {"facets", std::move(facets)}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges)
        j["edges"].push_back({{"from", e.from},
                              {"to", e.to},
                              {"alpha", simplex_to_json(e.pair.alpha)},
                              {"beta", simplex_to_json(e.pair.beta)},
                              {"type", e.pair.move_type}});
    return j.dump(2) + "\n";
}

ExchangeGraph from_structured(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad graph document: ") + e.what());
    }
    ExchangeGraph graph;
    for (const auto& jn : j.at("nodes")) {
        std::vector<OrientedSimplex> facets;
        for (const auto& jf : jn.at("facets"))
            facets.emplace_back(simplex_from_json(jf.at("vertices")),
                                jf.at("sign").get<int>());
        graph.nodes.push_back(TriangulatedManifold::from_oriented_facets(
            std::move(facets), jn.at("dimension").get<int>()));
    }
    for (const auto& je : j.at("edges")) {
        ExchangeGraph::Edge e;
        e.from = je.at("from").get<std::size_t>();
        e.to = je.at("to").get<std::size_t>();
        e.pair.alpha = simplex_from_json(je.at("alpha"));
        e.pair.beta = simplex_from_json(je.at("beta"));
        e.pair.move_type = je.at("type").get<int>();
        graph.edges.push_back(e);
    }
    return graph;
}

}  // namespace bistellar
