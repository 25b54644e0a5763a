#include "bistellar/fixtures.hpp"

#include <random>

namespace bistellar {
namespace fixtures {

TriangulatedManifold boundary_simplex(int n) {
    std::vector<int> all;
    for (int v = 1; v <= n + 2; ++v) all.push_back(v);
    Simplex top = Simplex::from_sorted(all);
    return TriangulatedManifold::from_facets(k_subsets(top, n + 1), n);
}

TriangulatedManifold sphere5() {
    return TriangulatedManifold::from_facets(
        {Simplex{1, 2, 4}, Simplex{1, 2, 5}, Simplex{1, 3, 4}, Simplex{1, 3, 5},
         Simplex{2, 3, 4}, Simplex{2, 3, 5}},
        2);
}

TriangulatedManifold sphere4() { return boundary_simplex(2); }

std::vector<Simplex> rp2_facets() {
    return {Simplex{1, 2, 4}, Simplex{1, 2, 5}, Simplex{1, 3, 4}, Simplex{1, 3, 6},
            Simplex{1, 5, 6}, Simplex{2, 3, 5}, Simplex{2, 3, 6}, Simplex{2, 4, 6},
            Simplex{3, 4, 5}, Simplex{4, 5, 6}};
}

std::vector<OrientedSimplex> local_alpha_facets(int h) {
    if (h == 1)
        return {{Simplex{1, 2, 3}, +1}, {Simplex{1, 2, 4}, -1}};
    if (h == 2)
        return {{Simplex{1, 2, 3, 4, 5}, +1},
                {Simplex{1, 2, 3, 4, 6}, -1},
                {Simplex{1, 2, 3, 5, 6}, +1}};
    throw Error(Errc::KOutOfRange, "local fixtures exist for h = 1, 2");
}

std::vector<OrientedSimplex> local_beta_facets(int h) {
    if (h == 1)
        return {{Simplex{2, 3, 4}, +1}, {Simplex{1, 3, 4}, -1}};
    if (h == 2)
        return {{Simplex{2, 3, 4, 5, 6}, +1},
                {Simplex{1, 3, 4, 5, 6}, -1},
                {Simplex{1, 2, 4, 5, 6}, +1}};
    throw Error(Errc::KOutOfRange, "local fixtures exist for h = 1, 2");
}

TriangulatedManifold sphere4d_with_middle_pair() {
    SimplicialComplex tetra_boundary(
        {Simplex{1, 2, 3}, Simplex{1, 2, 7}, Simplex{1, 3, 7}, Simplex{2, 3, 7}});
    SimplicialComplex triangle_boundary({Simplex{4, 5}, Simplex{4, 6}, Simplex{5, 6}});
    SimplicialComplex joined = join(tetra_boundary, triangle_boundary);
    return TriangulatedManifold::from_facets(joined.facets(), 4);
}

TriangulatedManifold sphere4d_stacked() {
    TriangulatedManifold K = boundary_simplex(4);
    return apply_move(K, {Simplex{1, 2, 3, 4, 5}, Simplex{7}, 0});
}

TriangulatedManifold random_sphere2(std::uint64_t seed, int max_vertices, int flip_steps) {
    std::mt19937_64 rng(seed);
    TriangulatedManifold K = boundary_simplex(2);
    int vertices = 4;
    int target = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 3));
    while (vertices < target) {
        auto pairs = find_bistellar_pairs(K, 0);
        K = apply_move(K, pairs[rng() % pairs.size()]);
        ++vertices;
    }
    for (int step = 0; step < flip_steps; ++step) {
        auto pairs = find_bistellar_pairs(K, 1);
        if (pairs.empty()) break;
        K = apply_move(K, pairs[rng() % pairs.size()]);
    }
    return K;
}

}  // namespace fixtures
}  // namespace bistellar
