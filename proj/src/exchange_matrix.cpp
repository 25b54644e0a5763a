#include "bistellar/exchange_matrix.hpp"

#include <algorithm>
#include <set>

namespace bistellar {

SignedChain boundary_k(const OrientedSimplex& s, int k) {
    const int n = s.simplex.dim();
    if (k < 1 || k > n + 1)
        throw Error(Errc::KOutOfRange, "boundary order " + std::to_string(k) +
                                           " out of range for dimension " +
                                           std::to_string(n));
    SignedChain chain;
    const auto& verts = s.simplex.vertices();
    // Iterate k-subsets of positions 0..n.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        int pos_sum = 0;
        std::vector<int> rest;
        rest.reserve(verts.size() - static_cast<std::size_t>(k));
        std::size_t next = 0;
        for (int i = 0; i <= n; ++i) {
            if (next < idx.size() && idx[next] == i) {
                pos_sum += i;
                ++next;
            } else {
                rest.push_back(verts[static_cast<std::size_t>(i)]);
            }
        }
        int coeff = (pos_sum % 2 == 0 ? 1 : -1) * s.sign;
        chain.terms[Simplex::from_sorted(std::move(rest))] += coeff;

        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    for (auto it = chain.terms.begin(); it != chain.terms.end();)
        it = (it->second == 0) ? chain.terms.erase(it) : std::next(it);
    return chain;
}

PairOrder pair_order(const OrientedSimplex& s, const Simplex& f, const Simplex& g) {
    const int n = s.simplex.dim();
    if (f == g) throw Error(Errc::NotFaces, "pair ordering needs distinct faces");
    if (!s.simplex.contains(f) || !s.simplex.contains(g))
        throw Error(Errc::NotFaces, "faces must lie in the simplex");
    const int d = f.dim();
    if (g.dim() != d)
        throw Error(Errc::DimensionMismatch, "faces must have equal dimension");
    if (d < 0 || d >= n)
        throw Error(Errc::DimensionMismatch, "faces must be proper of dimension >= 0");

    Simplex meet = f.intersect(g);
    if (meet.empty()) return PairOrder::Incomparable;
    const int k = static_cast<int>(meet.size()) - 1;

    // The pair is read with the lexicographically smaller face first;
    // c_{gf} = -c_{fg} gives the other direction.
    const Simplex& lo = (f < g) ? f : g;
    const Simplex& hi = (f < g) ? g : f;
    Simplex symm = lo.unite(hi).minus(meet);
    SignedChain chain = boundary_k(s, n - 2 * (d - k) + 1);
    long long c = chain.coefficient(symm);
    if (c != 1 && c != -1)
        throw Error(Errc::NotFaces, "unexpected boundary coefficient");
    bool hi_precedes_lo = (c == 1);
    if (f == lo)
        return hi_precedes_lo ? PairOrder::SecondPrecedes : PairOrder::FirstPrecedes;
    return hi_precedes_lo ? PairOrder::FirstPrecedes : PairOrder::SecondPrecedes;
}

ExchangeMatrix::ExchangeMatrix(std::vector<Simplex> index) : index_(std::move(index)) {
    for (std::size_t i = 0; i < index_.size(); ++i) pos_[index_[i]] = i;
    if (pos_.size() != index_.size())
        throw Error(Errc::IndexMismatch, "duplicate face in matrix index");
    b_.assign(index_.size(), std::vector<int>(index_.size(), 0));
}

std::size_t ExchangeMatrix::position(const Simplex& f) const {
    auto it = pos_.find(f);
    if (it == pos_.end())
        throw Error(Errc::IndexMismatch, "face " + f.str() + " not in matrix index");
    return it->second;
}

int ExchangeMatrix::at(const Simplex& f, const Simplex& g) const {
    return b_[position(f)][position(g)];
}

int ExchangeMatrix::at_or_zero(const Simplex& f, const Simplex& g) const {
    auto fi = pos_.find(f);
    auto gi = pos_.find(g);
    if (fi == pos_.end() || gi == pos_.end()) return 0;
    return b_[fi->second][gi->second];
}

void ExchangeMatrix::add(const Simplex& f, const Simplex& g, int value) {
    b_[position(f)][position(g)] += value;
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (std::size_t i = 0; i < b_.size(); ++i)
        for (std::size_t j = 0; j < b_.size(); ++j)
            if (b_[i][j] != -b_[j][i]) return false;
    return true;
}

bool ExchangeMatrix::entries_within_unit() const {
    for (const auto& row : b_)
        for (int x : row)
            if (x < -1 || x > 1) return false;
    return true;
}

ExchangeMatrix ExchangeMatrix::negated() const {
    ExchangeMatrix out(*this);
    for (auto& row : out.b_)
        for (int& x : row) x = -x;
    return out;
}

ExchangeMatrix ExchangeMatrix::reindexed(const std::vector<Simplex>& order) const {
    if (order.size() != index_.size())
        throw Error(Errc::IndexMismatch, "reindex order has wrong size");
    ExchangeMatrix out(order);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            out.b_[i][j] = at(order[i], order[j]);
    return out;
}

ExchangeMatrix local_matrix(const OrientedSimplex& s, const std::vector<Simplex>& index) {
    ExchangeMatrix B(index);
    std::vector<Simplex> faces = k_subsets(s.simplex, static_cast<int>(s.simplex.size()) - 1);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (i == j) continue;
            if (!B.has(faces[i]) || !B.has(faces[j])) continue;
            PairOrder po = pair_order(s, faces[i], faces[j]);
            if (po == PairOrder::SecondPrecedes)
                B.add(faces[i], faces[j], +1);
            else if (po == PairOrder::FirstPrecedes)
                B.add(faces[i], faces[j], -1);
        }
    }
    return B;
}

ExchangeMatrix exchange_matrix(const std::vector<OrientedSimplex>& facets) {
    std::set<Simplex> idx;
    for (const auto& of : facets)
        for (int v : of.simplex.vertices()) idx.insert(of.simplex.without(v));
    ExchangeMatrix B(std::vector<Simplex>(idx.begin(), idx.end()));
    for (const auto& of : facets) {
        std::vector<Simplex> faces =
            k_subsets(of.simplex, static_cast<int>(of.simplex.size()) - 1);
        for (const Simplex& f : faces) {
            for (const Simplex& g : faces) {
                if (f == g) continue;
                PairOrder po = pair_order(of, f, g);
                if (po == PairOrder::Incomparable) continue;  // n = 1 only
                B.add(f, g, po == PairOrder::SecondPrecedes ? +1 : -1);
            }
        }
    }
    return B;
}

ExchangeMatrix exchange_matrix(const TriangulatedManifold& K) {
    return exchange_matrix(K.oriented_facets());
}

ExchangeMatrix mutate(const ExchangeMatrix& B, const MoveLocalFrame& frame,
                      const LocalFaceSets& sets) {
    for (const Simplex& f : sets.d_alpha)
        if (!B.has(f))
            throw Error(Errc::IndexMismatch,
                        "matrix index is missing the exchanged face " + f.str());
    for (const Simplex& f : sets.lambda_alpha_faces)
        if (!B.has(f))
            throw Error(Errc::IndexMismatch,
                        "matrix index is missing the local face " + f.str());

    std::set<Simplex> new_index(B.index().begin(), B.index().end());
    for (const Simplex& f : sets.d_alpha) new_index.erase(f);
    for (const Simplex& f : sets.d_beta) new_index.insert(f);

    std::set<Simplex> in_beta(sets.lambda_beta_faces.begin(), sets.lambda_beta_faces.end());

    ExchangeMatrix out(std::vector<Simplex>(new_index.begin(), new_index.end()));
    const auto& idx = out.index();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Simplex& f = idx[i];
            const Simplex& g = idx[j];
            int value;
            if (in_beta.count(f) && in_beta.count(g))
                value = -B.at(frame.sigma_face(f), frame.sigma_face(g));
            else
                value = B.at_or_zero(f, g);
            out.entry(i, j) = value;
        }
    }
    return out;
}

std::string to_text(const ExchangeMatrix& B, bool signed_style) {
    std::string out;
    for (std::size_t i = 0; i < B.index().size(); ++i) {
        if (i) out += " ";
        out += B.index()[i].str();
    }
    out += "\n";
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (j) out += " ";
            int v = B.entry(i, j);
            if (signed_style && v > 0) out += "+";
            out += std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

}  // namespace bistellar
