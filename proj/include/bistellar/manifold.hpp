#pragma once

#include <map>
#include <vector>

#include "bistellar/simplicial_complex.hpp"

namespace bistellar {

/// f-, h- and g-vectors of a pure n-complex. h is derived from f through
/// the generating-polynomial identity
///   h_0 t^{n+1} + ... + h_{n+1} = (t-1)^{n+1} + f_0 (t-1)^n + ... + f_n,
/// and g_0 = 1, g_i = h_i - h_{i-1} for i <= floor((n+1)/2).
struct FaceVector {
    std::vector<long long> f;  // length n+1
    std::vector<long long> h;  // length n+2
    std::vector<long long> g;  // length floor((n+1)/2)+1

    bool operator==(const FaceVector&) const = default;
};

/// A closed connected oriented triangulated manifold: a pure simplicial
/// complex given by oriented facets, validated as a closed connected
/// orientable pseudomanifold whose signed facet sum is a boundary-operator
/// cycle. Immutable after construction.
class TriangulatedManifold {
public:
    /// Validates and orients a facet list. Signs are chosen so the signed
    /// facet sum is a cycle, normalized so the lexicographically smallest
    /// facet has sign +1.
    static TriangulatedManifold from_facets(const std::vector<Simplex>& facet_list,
                                            int dimension);

    /// As above but with explicit signs, which are validated (cycle
    /// condition, closedness, connectivity) rather than recomputed.
    static TriangulatedManifold from_oriented_facets(std::vector<OrientedSimplex> facets,
                                                     int dimension,
                                                     int vertex_universe = 0);

    int dim() const { return n_; }
    int vertex_universe() const { return vertex_universe_; }
    const std::vector<OrientedSimplex>& oriented_facets() const { return facets_; }

    std::vector<Simplex> facet_simplices() const;
    const SimplicialComplex& complex() const { return complex_; }

    /// Stored sign of a facet; throws FaceNotInComplex when absent.
    int facet_sign(const Simplex& facet) const;
    bool has_facet(const Simplex& facet) const;

    /// Vertices actually used, ascending.
    std::vector<int> vertices() const;

    /// Codimension-1 faces, lexicographically sorted.
    std::vector<Simplex> ridges() const { return complex_.faces_of_dim(n_ - 1); }

    /// Canonical text key: facets sorted, vertices ascending, "|"-separated.
    std::string key() const;

    bool operator==(const TriangulatedManifold&) const = default;

private:
    int n_ = 0;
    std::vector<OrientedSimplex> facets_;  // sorted by simplex
    int vertex_universe_ = 0;
    SimplicialComplex complex_;
};

/// Assigns orientation signs to a closed connected pseudomanifold facet set
/// so the signed sum is a cycle; deterministic (lexicographically smallest
/// facet gets +1). Throws NotOrientable when no such assignment exists.
std::vector<OrientedSimplex> orient(const std::vector<Simplex>& facets);

/// f/h/g-vectors of K.
FaceVector face_vectors(const TriangulatedManifold& K);

/// f/h/g-vectors from a raw f-vector (n = f.size()-1).
FaceVector face_vectors_from_f(const std::vector<long long>& f);

/// Recovers f from h (inverse of the generating identity); used as a
/// sanity inverse of face_vectors.
std::vector<long long> f_from_h(const std::vector<long long>& h);

}  // namespace bistellar
