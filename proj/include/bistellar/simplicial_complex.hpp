#pragma once

#include <set>
#include <vector>

#include "bistellar/simplex.hpp"

namespace bistellar {

/// An abstract simplicial complex given by its inclusion-maximal faces.
/// Faces live in the power set of [vertex_universe]; downward closure is
/// implicit and answered on query.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    explicit SimplicialComplex(std::vector<Simplex> facets, int vertex_universe = 0);

    const std::vector<Simplex>& facets() const { return facets_; }
    int vertex_universe() const { return vertex_universe_; }

    /// max face dimension; -2 for the void complex, -1 for {∅}.
    int dim() const;

    bool contains(const Simplex& face) const;

    /// All faces of dimension d, lexicographically sorted.
    std::vector<Simplex> faces_of_dim(int d) const;

    /// Number of faces of dimension d.
    std::size_t count_faces(int d) const { return faces_of_dim(d).size(); }

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<Simplex> facets_;   // sorted, inclusion-maximal
    int vertex_universe_ = 0;
};

/// Link of `a` in `K`: all faces disjoint from `a` whose union with `a`
/// lies in `K`. Throws FaceNotInComplex when `a` is not a face.
SimplicialComplex link(const SimplicialComplex& K, const Simplex& a);

/// Join of two complexes on disjoint vertex sets; throws VertexOverlap.
SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B);

/// Boundary of a single simplex as a complex (all codimension-1 faces).
/// ∂ of a vertex is {∅}.
SimplicialComplex boundary_complex(const Simplex& s);

}  // namespace bistellar
