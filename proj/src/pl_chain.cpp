#include "bistellar/pl_chain.hpp"

#include <algorithm>

namespace bistellar {

bool verify_preceq(const PrecedesWitness& witness, int h) {
    TriangulatedManifold current = witness.source;
    for (const BistellarPair& move : witness.moves) {
        if (move.alpha.dim() < h) return false;
        if (!pair_is_valid(current, move)) return false;
        current = apply_move(current, move);
    }
    return complexes_equal(current, witness.target);
}

namespace {

bool generator_subset(const std::vector<Simplex>& small, const std::vector<Simplex>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <class S>
bool relations_included(const Presentation<S>& small, const Presentation<S>& big) {
    std::set<RelationKey> keys;
    for (const auto& r : big.relations) keys.insert(relation_key(r));
    for (const auto& r : small.relations)
        if (!keys.count(relation_key(r))) return false;
    return true;
}

}  // namespace

Chain2D build_chain_2d(const TriangulatedManifold& K, int m_max, std::size_t node_cap) {
    if (K.dim() != 2)
        throw Error(Errc::WrongDimension, "2-dimensional chains need a surface");
    TrivialSemifield s;
    Chain2D chain;
    TriangulatedManifold rep = K;
    int m = static_cast<int>(rep.vertices().size());
    if (m > m_max)
        throw Error(Errc::WrongDimension, "m_max below the vertex count of K");
    while (true) {
        ExchangeGraph orbit = enumerate_class(rep, node_cap);
        ClassChainNode node;
        node.representative = rep;
        node.vertex_count = m;
        node.class_size = orbit.nodes.size();
        node.algebra = presentation(orbit, s);
        chain.levels.push_back(std::move(node));
        if (m == m_max) break;
        // Next representative: one 0-move at the first facet, fresh label.
        rep = apply_move(rep, {rep.oriented_facets().front().simplex,
                               Simplex{rep.vertex_universe() + 1}, 0});
        ++m;
    }
    // Identity embeddings: generators and relation keys must be included
    // level over level, and the composed two-step maps must agree (for
    // identity maps this is inclusion across two levels).
    for (std::size_t i = 0; i + 1 < chain.levels.size(); ++i) {
        const auto& a = chain.levels[i].algebra;
        const auto& b = chain.levels[i + 1].algebra;
        if (!generator_subset(a.generators, b.generators))
            throw Error(Errc::NotConnected,
                        "chain embedding lost a generator at level " +
                            std::to_string(chain.levels[i].vertex_count));
        if (!relations_included(a, b))
            throw Error(Errc::NotConnected,
                        "chain embedding lost a relation at level " +
                            std::to_string(chain.levels[i].vertex_count));
    }
    for (std::size_t i = 0; i + 2 < chain.levels.size(); ++i) {
        const auto& a = chain.levels[i].algebra;
        const auto& c = chain.levels[i + 2].algebra;
        if (!generator_subset(a.generators, c.generators) || !relations_included(a, c))
            throw Error(Errc::NotConnected,
                        "composed chain embedding broken at level " +
                            std::to_string(chain.levels[i].vertex_count));
    }
    return chain;
}

EmbeddingMap embedding_4d(const TriangulatedManifold& L, const BistellarPair& move,
                          std::size_t node_cap) {
    if (L.dim() != 4)
        throw Error(Errc::WrongDimension, "embedding_4d needs a 4-manifold");
    if (move.alpha.dim() != 3 && move.alpha.dim() != 4)
        throw Error(Errc::WrongDimension,
                    "embedding_4d needs dim(alpha) in {3,4}, got " +
                        std::to_string(move.alpha.dim()));
    if (!pair_is_valid(L, move))
        throw Error(Errc::PairNotValid, "pair " + move.str() + " is not valid");

    TriangulatedManifold Lp = apply_move(L, move);
    std::vector<Simplex> before = L.ridges();
    std::vector<Simplex> after = Lp.ridges();
    std::vector<Simplex> removed, added;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(removed));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(added));

    // Relation-inclusion invariant against both class presentations.
    TrivialSemifield s;
    Presentation<TrivialSemifield> source =
        presentation(enumerate_class(L, node_cap), s);
    Presentation<TrivialSemifield> target =
        presentation(enumerate_class(Lp, node_cap), s);

    // The map is identity on every class generator, except that a type-1
    // move sends the removed x_alpha to the smallest added variable.
    EmbeddingMap map;
    for (const Simplex& f : source.generators) map.generator_map[f] = f;
    if (move.alpha.dim() == 3) {
        if (removed.size() != 1 || removed.front() != move.alpha || added.empty())
            throw Error(Errc::WrongDimension,
                        "type-1 move did not remove exactly x_alpha");
        map.generator_map[move.alpha] = added.front();  // lex smallest added
    } else if (!removed.empty()) {
        throw Error(Errc::WrongDimension, "type-0 move removed a cluster variable");
    }

    std::set<Simplex> target_gens(target.generators.begin(), target.generators.end());
    std::set<Simplex> images;
    for (const Simplex& g : source.generators) {
        Simplex image = map.generator_map.at(g);
        if (!images.insert(image).second)
            throw Error(Errc::IndexMismatch, "embedding is not injective");
        if (!target_gens.count(image))
            throw Error(Errc::IndexMismatch,
                        "embedding image " + image.str() +
                            " is not a generator of the target class");
    }

    std::set<RelationKey> target_keys;
    for (const auto& r : target.relations) target_keys.insert(relation_key(r));
    auto map_exps = [&](const std::map<Simplex, int>& exps) {
        std::map<Simplex, int> out;
        for (const auto& [f, e] : exps) out[map.generator_map.at(f)] += e;
        return out;
    };
    for (const auto& r : source.relations) {
        RelationKey key;
        Simplex lf = map.generator_map.at(r.f);
        Simplex lg = map.generator_map.at(r.sigma_f);
        key.left = lf < lg ? std::make_pair(lf, lg) : std::make_pair(lg, lf);
        auto mp = map_exps(r.m_plus.exps);
        auto mm = map_exps(r.m_minus.exps);
        key.monomials = mp < mm ? std::make_pair(mp, mm) : std::make_pair(mm, mp);
        if (!target_keys.count(key))
            throw Error(Errc::IndexMismatch,
                        "embedding image of a relation is missing in the target class");
    }
    return map;
}

bool sequences_commute(const TriangulatedManifold& L,
                       const std::vector<BistellarPair>& first,
                       const std::vector<BistellarPair>& second) {
    return complexes_equal(apply_sequence(L, first).result(),
                           apply_sequence(L, second).result());
}

}  // namespace bistellar
