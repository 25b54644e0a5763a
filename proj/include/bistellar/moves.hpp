#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bistellar/manifold.hpp"

namespace bistellar {

/// A bistellar pair (alpha, beta): alpha is an (n-h)-face of the host whose
/// link is the boundary of the missing face beta; move_type = h = dim(beta).
struct BistellarPair {
    Simplex alpha;
    Simplex beta;
    int move_type = 0;

    bool operator==(const BistellarPair&) const = default;
    auto operator<=>(const BistellarPair&) const = default;

    BistellarPair inverse() const {
        return {beta, alpha, alpha.dim()};
    }

    std::string str() const { return alpha.str() + "|" + beta.str(); }
};

/// Local data of a move with 1 <= h <= n-1: the vertex ordering
/// (v_0,...,v_{n+1}) with alpha first and (v_0,...,v_n) compatible with the
/// host orientation, the signed outgoing facets F_i, the signed incoming
/// facets H_j, and the order-2 vertex permutation sigma reversing the
/// ordering.
struct MoveLocalFrame {
    std::vector<int> ordering;                // v_0 ... v_{n+1}
    std::vector<OrientedSimplex> old_facets;  // F_0 ... F_h
    std::vector<OrientedSimplex> new_facets;  // H_0 ... H_{n-h}
    std::map<int, int> sigma;

    int sigma_vertex(int v) const;
    Simplex sigma_face(const Simplex& f) const;
};

/// Codimension-1 face bookkeeping of a middle move: the faces of the two
/// local subcomplexes and the exchanged sets D_alpha / D_beta.
struct LocalFaceSets {
    std::vector<Simplex> lambda_alpha_faces;  // F(Lambda_alpha), sorted
    std::vector<Simplex> lambda_beta_faces;   // F(Lambda_beta), sorted
    std::vector<Simplex> d_alpha;             // sorted
    std::vector<Simplex> d_beta;              // sorted

    /// F(Lambda_alpha) \ D_alpha = F(Lambda_beta) \ D_beta, sorted.
    std::vector<Simplex> common() const;
};

/// All bistellar pairs of type h in K, sorted by alpha. For h = 0 the
/// missing face is a fresh vertex: one pair per facet, beta defaulting to
/// (vertex_universe + 1) unless `fresh_vertex` overrides it.
std::vector<BistellarPair> find_bistellar_pairs(const TriangulatedManifold& K, int h,
                                                std::optional<int> fresh_vertex = {});

/// All middle pairs (h = n/2); requires even dimension.
std::vector<BistellarPair> find_middle_pairs(const TriangulatedManifold& K);

/// True iff (alpha, beta) licenses a bistellar move in K.
bool pair_is_valid(const TriangulatedManifold& K, const BistellarPair& p);

/// Local frame of a valid pair with 1 <= h <= n-1 (type-0 / type-n frames
/// are degenerate and not represented). Throws PairNotValid.
MoveLocalFrame local_frame(const TriangulatedManifold& K, const BistellarPair& p);

/// D-sets of a middle frame; throws NotMiddleMove unless n = 2h.
LocalFaceSets local_face_sets(const MoveLocalFrame& frame);

/// Applies the move: facets of alpha * d(beta) are replaced by those of
/// d(alpha) * beta. Unchanged facets keep their stored signs; new facets
/// are signed by the frame formulas (middle and general 1<=h<=n-1 moves use
/// ridge propagation when outside the middle case). The result is
/// revalidated; an incoherent outcome raises OrientationBreak.
TriangulatedManifold apply_move(const TriangulatedManifold& K, const BistellarPair& p);

/// Left-to-right composition; `states` traces K = states[0] through every
/// intermediate complex to the final one. Throws PairNotValidAtStep(i).
struct MoveTrace {
    std::vector<TriangulatedManifold> states;
    const TriangulatedManifold& result() const { return states.back(); }
};
MoveTrace apply_sequence(const TriangulatedManifold& K,
                         const std::vector<BistellarPair>& moves);

/// Labeled equality: identical facet sets (as unsigned sets).
bool complexes_equal(const TriangulatedManifold& A, const TriangulatedManifold& B);

}  // namespace bistellar
