#pragma once

#include <deque>
#include <optional>

#include "bistellar/exchange_graph.hpp"
#include "bistellar/seed.hpp"

namespace bistellar {

/// Generators and relations of the class algebra A_[K]: all cluster
/// variables over the orbit, the exchangeable subset, and the deduplicated
/// exchange relations collected over every edge.
template <class S>
struct Presentation {
    std::vector<Simplex> generators;     // union of F(L) over the orbit
    std::vector<Simplex> exchangeable;   // union of D-sets over all pairs
    std::vector<ExchangeRelation<S>> relations;  // deduped, sorted by key

    bool has_relation_key(const RelationKey& key) const {
        for (const auto& r : relations)
            if (relation_key(r) == key) return true;
        return false;
    }
};

/// Seeds for every node of an enumerated graph, propagated from an initial
/// seed at node 0 along the edges in deterministic order.
template <class S>
std::vector<Seed<S>> propagate_seeds(const ExchangeGraph& graph, const Seed<S>& root,
                                     const S& s) {
    std::vector<std::optional<Seed<S>>> seeds(graph.nodes.size());
    seeds[0] = root;
    // Adjacency with the pair as seen from each endpoint.
    std::vector<std::vector<std::pair<std::size_t, BistellarPair>>> adj(
        graph.nodes.size());
    for (const auto& e : graph.edges) {
        adj[e.from].push_back({e.to, e.pair});
        adj[e.to].push_back({e.from, e.pair.inverse()});
    }
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& [j, pair] : adj[i]) {
            if (seeds[j]) continue;
            MoveLocalFrame frame = local_frame(seeds[i]->host, pair);
            seeds[j] = mutate_seed(*seeds[i], frame, local_face_sets(frame), s);
            queue.push_back(j);
        }
    }
    std::vector<Seed<S>> out;
    for (auto& seed : seeds) {
        if (!seed)
            throw Error(Errc::NotConnected, "seed propagation left a node unreached");
        out.push_back(std::move(*seed));
    }
    return out;
}

/// Relation lists of all edges merged by coefficient-stripped key. A key
/// reached twice must carry the same stripped content (the pro2/pro3
/// identities guarantee coefficient compatibility of the two directions of
/// one edge); disagreement is an engine bug and throws.
template <class S>
Presentation<S> presentation(const ExchangeGraph& graph, const S& s,
                             const Seed<S>* root = nullptr) {
    Seed<S> initial = root ? *root : initial_seed(graph.nodes.at(0), s);
    std::vector<Seed<S>> seeds = propagate_seeds(graph, initial, s);

    Presentation<S> out;
    std::set<Simplex> gens, exch;
    for (const auto& node : graph.nodes)
        for (const Simplex& f : node.ridges()) gens.insert(f);

    std::map<RelationKey, ExchangeRelation<S>> dedup;
    for (const auto& e : graph.edges) {
        MoveLocalFrame frame = local_frame(seeds[e.from].host, e.pair);
        LocalFaceSets sets = local_face_sets(frame);
        for (const Simplex& f : sets.d_alpha) exch.insert(f);
        for (const Simplex& f : sets.d_beta) exch.insert(f);
        for (auto& rel : exchange_relations(seeds[e.from], frame, sets, s)) {
            RelationKey key = relation_key(rel);
            auto [it, fresh] = dedup.try_emplace(key, rel);
            if (!fresh) {
                const auto& prior = it->second;
                bool same = (prior.m_plus.exps == rel.m_plus.exps &&
                             prior.m_minus.exps == rel.m_minus.exps) ||
                            (prior.m_plus.exps == rel.m_minus.exps &&
                             prior.m_minus.exps == rel.m_plus.exps);
                if (!same)
                    throw Error(Errc::DivisorMismatch,
                                "duplicate relation key with different monomials at " +
                                    rel.f.str());
            }
        }
    }
    out.generators.assign(gens.begin(), gens.end());
    out.exchangeable.assign(exch.begin(), exch.end());
    for (auto& [key, rel] : dedup) out.relations.push_back(std::move(rel));
    return out;
}

/// Eliminates one relation of a three-product class against the other two
/// in exact positive-rational arithmetic and confirms the cancellation
/// factor (1 ⊕ u ⊕ v)/((1 ⊕ u)(1 ⊕ v)), concluding equality of all three
/// products. The three relations must have pairwise-distinct left products
/// whose right sides are the other two products of the class.
bool grouped_relation_check(const std::vector<ExchangeRelation<PosRatSemifield>>& triple);

}  // namespace bistellar
