#include "bistellar/manifold.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bistellar {

namespace {

// Map from each ridge to the indices of the facets containing it.
std::map<Simplex, std::vector<std::size_t>> ridge_incidence(
    const std::vector<Simplex>& facets) {
    std::map<Simplex, std::vector<std::size_t>> inc;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Simplex& f = facets[i];
        for (int v : f.vertices()) inc[f.without(v)].push_back(i);
    }
    return inc;
}

void check_pure_closed_connected(const std::vector<Simplex>& facets, int n) {
    if (facets.empty()) throw Error(Errc::NotPure, "empty facet list");
    for (const Simplex& f : facets)
        if (f.dim() != n)
            throw Error(Errc::NotPure, "facet " + f.str() + " has dimension " +
                                           std::to_string(f.dim()) + ", expected " +
                                           std::to_string(n));
    auto inc = ridge_incidence(facets);
    for (const auto& [ridge, ids] : inc)
        if (ids.size() != 2)
            throw Error(Errc::NotClosed, "ridge " + ridge.str() + " lies in " +
                                             std::to_string(ids.size()) +
                                             " facets, expected 2");
    // Facet adjacency graph connectivity.
    std::vector<char> seen(facets.size(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const auto& [ridge, ids] : inc) {
        adj[ids[0]].push_back(ids[1]);
        adj[ids[1]].push_back(ids[0]);
    }
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j : adj[i]) {
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    if (reached != facets.size())
        throw Error(Errc::NotConnected, "facet adjacency graph is not connected");

    // For surfaces the vertex links must be single cycles; together with
    // the closedness check this is the declared extent of manifold
    // verification.
    if (n == 2) {
        std::map<int, std::vector<Simplex>> links;
        for (const Simplex& f : facets)
            for (int v : f.vertices()) links[v].push_back(f.without(v));
        for (const auto& [v, edges] : links) {
            std::set<int> component, all;
            for (const Simplex& e : edges) {
                all.insert(e[0]);
                all.insert(e[1]);
            }
            std::vector<int> stack{edges.front()[0]};
            while (!stack.empty()) {
                int w = stack.back();
                stack.pop_back();
                if (!component.insert(w).second) continue;
                for (const Simplex& e : edges)
                    if (e.contains(w)) stack.push_back(e[0] == w ? e[1] : e[0]);
            }
            if (component != all)
                throw Error(Errc::NotConnected, "link of vertex " + std::to_string(v) +
                                                    " is not a single cycle");
        }
    }
}

// Coefficient of ridge (facet minus one vertex) in the boundary of the
// canonically oriented facet: (-1)^position.
int ridge_coefficient(const Simplex& facet, int missing_vertex) {
    return (facet.position_of(missing_vertex) % 2 == 0) ? +1 : -1;
}

void check_cycle(const std::vector<OrientedSimplex>& facets) {
    std::map<Simplex, long long> chain;
    for (const OrientedSimplex& of : facets)
        for (int v : of.simplex.vertices())
            chain[of.simplex.without(v)] += of.sign * ridge_coefficient(of.simplex, v);
    for (const auto& [ridge, coeff] : chain)
        if (coeff != 0)
            throw Error(Errc::OrientationBreak,
                        "signed facet sum is not a cycle at ridge " + ridge.str());
}

}  // namespace

std::vector<OrientedSimplex> orient(const std::vector<Simplex>& facet_list) {
    std::vector<Simplex> facets(facet_list);
    std::sort(facets.begin(), facets.end());
    auto inc = ridge_incidence(facets);

    std::vector<int> sign(facets.size(), 0);
    sign[0] = +1;  // lexicographically smallest facet
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        const Simplex& fi = facets[i];
        for (int v : fi.vertices()) {
            Simplex ridge = fi.without(v);
            for (std::size_t j : inc[ridge]) {
                if (j == i) continue;
                int missing = facets[j].minus(ridge)[0];
                // Opposite induced orientations on the shared ridge.
                int needed = -sign[i] * ridge_coefficient(fi, v) *
                             ridge_coefficient(facets[j], missing);
                if (sign[j] == 0) {
                    sign[j] = needed;
                    queue.push_back(j);
                } else if (sign[j] != needed) {
                    throw Error(Errc::NotOrientable,
                                "contradictory orientation at facet " + facets[j].str());
                }
            }
        }
    }
    std::vector<OrientedSimplex> out;
    out.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
        out.emplace_back(facets[i], sign[i]);
    return out;
}

TriangulatedManifold TriangulatedManifold::from_facets(
    const std::vector<Simplex>& facet_list, int dimension) {
    std::vector<Simplex> facets(facet_list);
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    check_pure_closed_connected(facets, dimension);
    return from_oriented_facets(orient(facets), dimension);
}

TriangulatedManifold TriangulatedManifold::from_oriented_facets(
    std::vector<OrientedSimplex> facets, int dimension, int vertex_universe) {
    std::sort(facets.begin(), facets.end(),
              [](const OrientedSimplex& a, const OrientedSimplex& b) {
                  return a.simplex < b.simplex;
              });
    std::vector<Simplex> plain;
    plain.reserve(facets.size());
    for (const auto& of : facets) plain.push_back(of.simplex);
    check_pure_closed_connected(plain, dimension);
    check_cycle(facets);

    TriangulatedManifold K;
    K.n_ = dimension;
    K.facets_ = std::move(facets);
    K.complex_ = SimplicialComplex(plain);
    K.vertex_universe_ = std::max(vertex_universe, K.complex_.vertex_universe());
    return K;
}

std::vector<Simplex> TriangulatedManifold::facet_simplices() const {
    std::vector<Simplex> out;
    out.reserve(facets_.size());
    for (const auto& of : facets_) out.push_back(of.simplex);
    return out;
}

int TriangulatedManifold::facet_sign(const Simplex& facet) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), facet,
                               [](const OrientedSimplex& a, const Simplex& b) {
                                   return a.simplex < b;
                               });
    if (it == facets_.end() || it->simplex != facet)
        throw Error(Errc::FaceNotInComplex, "facet " + facet.str() + " not present");
    return it->sign;
}

bool TriangulatedManifold::has_facet(const Simplex& facet) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), facet,
                               [](const OrientedSimplex& a, const Simplex& b) {
                                   return a.simplex < b;
                               });
    return it != facets_.end() && it->simplex == facet;
}

std::vector<int> TriangulatedManifold::vertices() const {
    std::set<int> vs;
    for (const auto& of : facets_)
        for (int v : of.simplex.vertices()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::string TriangulatedManifold::key() const {
    std::string out;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) out += "|";
        const auto& vs = facets_[i].simplex.vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(vs[j]);
        }
    }
    return out;
}

FaceVector face_vectors_from_f(const std::vector<long long>& f) {
    const int n = static_cast<int>(f.size()) - 1;
    // Expand (t-1)^(n+1) + sum_i f_i (t-1)^(n-i) and read h off the
    // coefficients of t^(n+1-k).
    std::vector<long long> poly(static_cast<std::size_t>(n) + 2, 0);
    auto add_power = [&](long long coeff, int power) {
        // coeff * (t-1)^power, term t^j has binomial(power, j) * (-1)^(power-j)
        std::vector<long long> binom(static_cast<std::size_t>(power) + 1, 0);
        binom[0] = 1;
        for (int row = 1; row <= power; ++row)
            for (int j = row; j >= 1; --j) binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j - 1)];
        for (int j = 0; j <= power; ++j) {
            long long sgn = ((power - j) % 2 == 0) ? 1 : -1;
            poly[static_cast<std::size_t>(j)] += coeff * sgn * binom[static_cast<std::size_t>(j)];
        }
    };
    add_power(1, n + 1);
    for (int i = 0; i <= n; ++i) add_power(f[static_cast<std::size_t>(i)], n - i);

    FaceVector fv;
    fv.f = f;
    fv.h.resize(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k)
        fv.h[static_cast<std::size_t>(k)] = poly[static_cast<std::size_t>(n + 1 - k)];
    const int gl = (n + 1) / 2;
    fv.g.resize(static_cast<std::size_t>(gl) + 1);
    fv.g[0] = 1;
    for (int i = 1; i <= gl; ++i)
        fv.g[static_cast<std::size_t>(i)] =
            fv.h[static_cast<std::size_t>(i)] - fv.h[static_cast<std::size_t>(i - 1)];
    return fv;
}

FaceVector face_vectors(const TriangulatedManifold& K) {
    std::vector<long long> f;
    for (int d = 0; d <= K.dim(); ++d)
        f.push_back(static_cast<long long>(K.complex().count_faces(d)));
    return face_vectors_from_f(f);
}

std::vector<long long> f_from_h(const std::vector<long long>& h) {
    // f_i = sum_k binomial(n+1-k, n-i) h_k, the inverse expansion at t+1.
    const int n = static_cast<int>(h.size()) - 2;
    auto binom = [](int a, int b) -> long long {
        if (b < 0 || b > a) return 0;
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        long long total = 0;
        for (int k = 0; k <= n + 1; ++k)
            total += h[static_cast<std::size_t>(k)] * binom(n + 1 - k, n - i);
        f[static_cast<std::size_t>(i)] = total;
    }
    return f;
}

}  // namespace bistellar
