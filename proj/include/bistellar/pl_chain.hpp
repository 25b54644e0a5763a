#pragma once

#include "bistellar/presentation.hpp"

namespace bistellar {

/// Witness for [source] ⪯ [target]: a move sequence taking source to
/// target using only moves with dim(alpha) >= h.
struct PrecedesWitness {
    TriangulatedManifold source;
    TriangulatedManifold target;
    std::vector<BistellarPair> moves;
};

/// True iff every move respects the dimension bound, is valid when
/// reached, and the final complex equals the target (labeled equality).
bool verify_preceq(const PrecedesWitness& witness, int h);

/// One vertex-count level of the 2-dimensional chain.
struct ClassChainNode {
    TriangulatedManifold representative;
    int vertex_count = 0;
    std::size_t class_size = 0;
    Presentation<TrivialSemifield> algebra;
};

/// The truncated direct system for a surface: representatives produced by
/// successive 0-moves, one class per vertex count, with the identity
/// generator embeddings validated per step (generator-set and
/// relation-key-set inclusion) and for the composed two-step maps.
struct Chain2D {
    std::vector<ClassChainNode> levels;
};

Chain2D build_chain_2d(const TriangulatedManifold& K, int m_max,
                       std::size_t node_cap = 10000);

/// Generator map of a class embedding; identity everywhere except possibly
/// on removed cluster variables.
struct EmbeddingMap {
    std::map<Simplex, Simplex> generator_map;
};

/// The n = 4 embedding for a move with dim(alpha) in {3,4}: a type-1 move
/// sends the unique removed cluster variable x_alpha to the
/// lexicographically smallest added variable, a type-0 move removes
/// nothing; all other generators map identically. The relation-inclusion
/// invariant is checked against both class presentations.
EmbeddingMap embedding_4d(const TriangulatedManifold& L, const BistellarPair& move,
                          std::size_t node_cap = 10000);

/// Applies both sequences to L and compares the results.
bool sequences_commute(const TriangulatedManifold& L,
                       const std::vector<BistellarPair>& first,
                       const std::vector<BistellarPair>& second);

}  // namespace bistellar
