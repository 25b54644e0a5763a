#include "bistellar/simplicial_complex.hpp"

#include <algorithm>

namespace bistellar {

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets, int vertex_universe)
    : vertex_universe_(vertex_universe) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Drop faces contained in another listed face.
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (i != j && facets[j].contains(facets[i]) && facets[j] != facets[i]) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets_.push_back(facets[i]);
    }
    for (const Simplex& f : facets_)
        for (int v : f.vertices())
            vertex_universe_ = std::max(vertex_universe_, v);
}

int SimplicialComplex::dim() const {
    int d = -2;
    for (const Simplex& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::contains(const Simplex& face) const {
    for (const Simplex& f : facets_)
        if (f.contains(face)) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int d) const {
    std::set<Simplex> out;
    for (const Simplex& f : facets_) {
        if (f.dim() < d) continue;
        for (Simplex& s : k_subsets(f, d + 1)) out.insert(std::move(s));
    }
    return {out.begin(), out.end()};
}

SimplicialComplex link(const SimplicialComplex& K, const Simplex& a) {
    if (!K.contains(a))
        throw Error(Errc::FaceNotInComplex, "link: face " + a.str() + " not in complex");
    std::vector<Simplex> facets;
    for (const Simplex& f : K.facets())
        if (f.contains(a)) facets.push_back(f.minus(a));
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B) {
    for (const Simplex& fa : A.facets())
        for (const Simplex& fb : B.facets())
            if (!fa.disjoint(fb))
                throw Error(Errc::VertexOverlap, "join: vertex sets overlap");
    std::vector<Simplex> facets;
    for (const Simplex& fa : A.facets())
        for (const Simplex& fb : B.facets())
            facets.push_back(fa.unite(fb));
    return SimplicialComplex(std::move(facets),
                             std::max(A.vertex_universe(), B.vertex_universe()));
}

SimplicialComplex boundary_complex(const Simplex& s) {
    if (s.empty()) return SimplicialComplex({}, 0);
    return SimplicialComplex(k_subsets(s, static_cast<int>(s.size()) - 1));
}

}  // namespace bistellar
