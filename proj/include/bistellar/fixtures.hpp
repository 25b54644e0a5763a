#pragma once

#include <cstdint>
#include <vector>

#include "bistellar/manifold.hpp"
#include "bistellar/moves.hpp"

namespace bistellar {
namespace fixtures {

/// Boundary of the (n+1)-simplex on vertices 1..n+2.
TriangulatedManifold boundary_simplex(int n);

/// The five-vertex 2-sphere: double pyramid with apexes 4 and 5 over the
/// triangle 1,2,3 (base triangle and edge (4,5) both missing).
TriangulatedManifold sphere5();

/// 4-vertex 2-sphere (= boundary_simplex(2)).
TriangulatedManifold sphere4();

/// Minimal 6-vertex triangulation of the real projective plane; closed and
/// connected but not orientable.
std::vector<Simplex> rp2_facets();

/// The local complexes of section-4-style frames as oriented facet lists:
/// h = 1: F = {+(1,2,3), -(1,2,4)},      H = {+(2,3,4), -(1,3,4)};
/// h = 2: F = {+(1,2,3,4,5), -(1,2,3,4,6), +(1,2,3,5,6)},
///        H = {+(2,3,4,5,6), -(1,3,4,5,6), +(1,2,4,5,6)}.
std::vector<OrientedSimplex> local_alpha_facets(int h);
std::vector<OrientedSimplex> local_beta_facets(int h);

/// Smallest 4-sphere hosting the middle pair ((1,2,3),(4,5,6)): the join of
/// the tetrahedron boundary on {1,2,3,7} with the triangle boundary on
/// {4,5,6}; 12 facets on 7 vertices.
TriangulatedManifold sphere4d_with_middle_pair();

/// Boundary of the 5-simplex on {1..6} opened by a 0-move at (1,2,3,4,5)
/// with fresh vertex 7; hosts the type-1 pair ((1,2,3,4),(6,7)) and the
/// type-4 pair ((7),(1,2,3,4,5)).
TriangulatedManifold sphere4d_stacked();

/// Deterministic pseudo-random 2-sphere with at most `max_vertices`
/// vertices: grow from the tetrahedron boundary by 0-moves, then shuffle
/// with random edge flips.
TriangulatedManifold random_sphere2(std::uint64_t seed, int max_vertices = 8,
                                    int flip_steps = 12);

}  // namespace fixtures
}  // namespace bistellar
