#include "bistellar/moves.hpp"

#include <algorithm>
#include <deque>

#include "bistellar/exchange_matrix.hpp"

namespace bistellar {

int MoveLocalFrame::sigma_vertex(int v) const {
    auto it = sigma.find(v);
    if (it == sigma.end())
        throw Error(Errc::NotFaces, "sigma undefined on vertex " + std::to_string(v));
    return it->second;
}

Simplex MoveLocalFrame::sigma_face(const Simplex& f) const {
    std::vector<int> out;
    out.reserve(f.size());
    for (int v : f.vertices()) out.push_back(sigma_vertex(v));
    std::sort(out.begin(), out.end());
    return Simplex::from_sorted(std::move(out));
}

std::vector<Simplex> LocalFaceSets::common() const {
    std::vector<Simplex> out;
    std::set_difference(lambda_alpha_faces.begin(), lambda_alpha_faces.end(),
                        d_alpha.begin(), d_alpha.end(), std::back_inserter(out));
    return out;
}

namespace {

// Link(alpha) = d(beta) detection: the link facets of an (n-h)-face must be
// exactly all h-subsets of an (h+1)-vertex set beta with beta missing.
std::optional<Simplex> missing_coface(const TriangulatedManifold& K, const Simplex& alpha) {
    std::vector<Simplex> link_facets;
    for (const auto& of : K.oriented_facets())
        if (of.simplex.contains(alpha)) link_facets.push_back(of.simplex.minus(alpha));
    std::set<int> verts;
    for (const Simplex& g : link_facets)
        for (int v : g.vertices()) verts.insert(v);
    const int h = K.dim() - alpha.dim();  // dim beta
    if (static_cast<int>(verts.size()) != h + 1) return std::nullopt;
    Simplex beta = Simplex::from_sorted({verts.begin(), verts.end()});
    std::vector<Simplex> expected = k_subsets(beta, h);
    std::sort(link_facets.begin(), link_facets.end());
    link_facets.erase(std::unique(link_facets.begin(), link_facets.end()),
                      link_facets.end());
    if (link_facets != expected) return std::nullopt;
    if (K.complex().contains(beta)) return std::nullopt;
    return beta;
}

}  // namespace

namespace {

void verify_middle_sigma(const BistellarPair& p, MoveLocalFrame& frame) {
    ExchangeMatrix block_out = exchange_matrix(frame.old_facets);
    ExchangeMatrix block_in = exchange_matrix(frame.new_facets);
    const std::vector<Simplex>& faces = block_out.index();

    auto map_face = [](const std::map<int, int>& sigma, const Simplex& f) {
        std::vector<int> out;
        for (int v : f.vertices()) out.push_back(sigma.at(v));
        std::sort(out.begin(), out.end());
        return Simplex::from_sorted(std::move(out));
    };
    auto negates_block = [&](const std::map<int, int>& sigma) {
        for (const Simplex& f : faces)
            for (const Simplex& g : faces) {
                if (f == g) continue;
                if (block_in.at_or_zero(map_face(sigma, f), map_face(sigma, g)) !=
                    -block_out.at_or_zero(f, g))
                    return false;
            }
        return true;
    };
    if (negates_block(frame.sigma)) return;

    // Fallback: search every alpha-beta pairing for one negating the block.
    std::vector<int> images = p.beta.vertices();
    std::sort(images.begin(), images.end());
    do {
        std::map<int, int> sigma;
        for (std::size_t i = 0; i < images.size(); ++i) {
            sigma[p.alpha[i]] = images[i];
            sigma[images[i]] = p.alpha[i];
        }
        if (negates_block(sigma)) {
            frame.sigma = std::move(sigma);
            frame.ordering = p.alpha.vertices();
            for (auto it = p.alpha.vertices().rbegin();
                 it != p.alpha.vertices().rend(); ++it)
                frame.ordering.push_back(frame.sigma.at(*it));
            return;
        }
    } while (std::next_permutation(images.begin(), images.end()));
    throw Error(Errc::OrientationBreak,
                "no involution matches the mutation block at pair " + p.str());
}

}  // namespace

std::vector<BistellarPair> find_bistellar_pairs(const TriangulatedManifold& K, int h,
                                                std::optional<int> fresh_vertex) {
    const int n = K.dim();
    if (h < 0 || h > n)
        throw Error(Errc::KOutOfRange, "move type " + std::to_string(h) +
                                           " out of range for dimension " +
                                           std::to_string(n));
    std::vector<BistellarPair> out;
    if (h == 0) {
        int fresh = fresh_vertex.value_or(K.vertex_universe() + 1);
        if (K.complex().contains(Simplex{fresh}))
            throw Error(Errc::PairNotValid,
                        "fresh vertex " + std::to_string(fresh) + " already present");
        for (const auto& of : K.oriented_facets())
            out.push_back({of.simplex, Simplex{fresh}, 0});
        return out;
    }
    for (const Simplex& alpha : K.complex().faces_of_dim(n - h))
        if (auto beta = missing_coface(K, alpha))
            out.push_back({alpha, *beta, h});
    return out;
}

std::vector<BistellarPair> find_middle_pairs(const TriangulatedManifold& K) {
    if (K.dim() % 2 != 0)
        throw Error(Errc::NotMiddleMove,
                    "middle moves need even dimension, got " + std::to_string(K.dim()));
    return find_bistellar_pairs(K, K.dim() / 2);
}

bool pair_is_valid(const TriangulatedManifold& K, const BistellarPair& p) {
    const int n = K.dim();
    if (p.move_type != p.beta.dim() || p.alpha.dim() != n - p.move_type) return false;
    if (!p.alpha.disjoint(p.beta)) return false;
    if (p.move_type == 0) {
        // beta must be a fresh vertex, alpha a facet.
        return p.beta.size() == 1 && !K.complex().contains(p.beta) && K.has_facet(p.alpha);
    }
    if (!K.complex().contains(p.alpha)) return false;
    auto beta = missing_coface(K, p.alpha);
    return beta && *beta == p.beta;
}

namespace {

// Non-crossing pairing of the alpha and beta vertices along the sorted
// label order (matched like brackets of opposite kinds). Symmetric in the
// two sides, so a pair and its inverse share one involution; it degenerates
// to the plain label reversal when every alpha label precedes every beta
// label.
std::map<int, int> bracket_pairing(const Simplex& alpha, const Simplex& beta) {
    std::vector<std::pair<int, bool>> items;
    for (int v : alpha.vertices()) items.push_back({v, true});
    for (int v : beta.vertices()) items.push_back({v, false});
    std::sort(items.begin(), items.end());
    std::map<int, int> sigma;
    std::vector<std::pair<int, bool>> stack;
    for (const auto& item : items) {
        if (!stack.empty() && stack.back().second != item.second) {
            sigma[stack.back().first] = item.first;
            sigma[item.first] = stack.back().first;
            stack.pop_back();
        } else {
            stack.push_back(item);
        }
    }
    if (!stack.empty())
        throw Error(Errc::NotMiddleMove, "pairing needs equally many vertices");
    return sigma;
}

// Sign of the new facet A \ {a}: forced through any ridge it shares with a
// facet of K surviving the move.
int propagated_new_sign(const TriangulatedManifold& K, const Simplex& all,
                        const Simplex& beta, int removed_alpha) {
    Simplex new_facet = all.without(removed_alpha);
    int result = 0;
    auto coeff = [](const Simplex& facet, int missing) {
        return facet.position_of(missing) % 2 == 0 ? +1 : -1;
    };
    for (int b : beta.vertices()) {
        Simplex ridge = new_facet.without(b);
        Simplex old_facet = all.without(b);
        // The ridge's second host facet survives the move and pins the sign.
        const Simplex* neighbor = nullptr;
        for (const auto& of : K.oriented_facets()) {
            if (of.simplex == old_facet) continue;
            if (of.simplex.contains(ridge)) {
                neighbor = &of.simplex;
                break;
            }
        }
        if (!neighbor)
            throw Error(Errc::OrientationBreak,
                        "ridge " + ridge.str() + " has no surviving neighbor");
        int missing = neighbor->minus(ridge)[0];
        int forced = -K.facet_sign(*neighbor) * coeff(*neighbor, missing) *
                     coeff(new_facet, b);
        if (result == 0)
            result = forced;
        else if (result != forced)
            throw Error(Errc::OrientationBreak,
                        "inconsistent forced sign at facet " + new_facet.str());
    }
    return result;
}

// The involution must negate the local block: the sum of the outgoing
// facets' pair-ordering blocks, pushed through sigma, has to be the
// negated sum of the incoming ones. The non-crossing pairing satisfies
// this; as a safeguard every other pairing is tried before giving up.
void verify_middle_sigma(const BistellarPair& p, MoveLocalFrame& frame);

}  // namespace

MoveLocalFrame local_frame(const TriangulatedManifold& K, const BistellarPair& p) {
    const int n = K.dim();
    const int h = p.move_type;
    if (h < 1 || h > n - 1)
        throw Error(Errc::PairNotValid,
                    "local frames exist only for 1 <= h <= n-1, got h = " +
                        std::to_string(h));
    if (!pair_is_valid(K, p))
        throw Error(Errc::PairNotValid, "pair " + p.str() + " is not valid in K");

    MoveLocalFrame frame;
    Simplex all = p.alpha.unite(p.beta);

    if (p.alpha.size() == p.beta.size()) {
        // Middle move: sigma is the non-crossing pairing, and the ordering
        // realizes it as the positional reversal (alpha ascending first).
        frame.sigma = bracket_pairing(p.alpha, p.beta);
        frame.ordering = p.alpha.vertices();
        for (auto it = p.alpha.vertices().rbegin(); it != p.alpha.vertices().rend(); ++it)
            frame.ordering.push_back(frame.sigma.at(*it));
    } else {
        frame.ordering = p.alpha.vertices();
        frame.ordering.insert(frame.ordering.end(), p.beta.vertices().begin(),
                              p.beta.vertices().end());
        for (int i = 0; i <= n + 1; ++i)
            frame.sigma[frame.ordering[static_cast<std::size_t>(i)]] =
                frame.ordering[static_cast<std::size_t>(n + 1 - i)];
    }

    // Outgoing facets keep their stored signs; incoming ones get the sign
    // forced by ridge coherence with the surviving part of the host.
    for (int i = 0; i <= h; ++i) {
        Simplex facet = all.without(frame.ordering[static_cast<std::size_t>(n + 1 - i)]);
        frame.old_facets.emplace_back(facet, K.facet_sign(facet));
    }
    for (int j = 0; j <= n - h; ++j) {
        int removed = frame.ordering[static_cast<std::size_t>(j)];
        frame.new_facets.emplace_back(
            all.without(removed), propagated_new_sign(K, all, p.beta, removed));
    }
    if (p.alpha.size() == p.beta.size()) verify_middle_sigma(p, frame);
    return frame;
}

LocalFaceSets local_face_sets(const MoveLocalFrame& frame) {
    const int n = static_cast<int>(frame.ordering.size()) - 2;
    const int h = static_cast<int>(frame.old_facets.size()) - 1;
    if (n != 2 * h)
        throw Error(Errc::NotMiddleMove, "D-sets are defined for middle moves only");

    LocalFaceSets sets;
    std::set<Simplex> la, lb;
    for (const auto& of : frame.old_facets)
        for (int v : of.simplex.vertices()) la.insert(of.simplex.without(v));
    for (const auto& of : frame.new_facets)
        for (int v : of.simplex.vertices()) lb.insert(of.simplex.without(v));
    sets.lambda_alpha_faces.assign(la.begin(), la.end());
    sets.lambda_beta_faces.assign(lb.begin(), lb.end());
    std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                        std::back_inserter(sets.d_alpha));
    std::set_difference(lb.begin(), lb.end(), la.begin(), la.end(),
                        std::back_inserter(sets.d_beta));
    return sets;
}

namespace {

// Sign completion for facets not covered by frame formulas: propagate the
// opposite-induced-orientation constraint across shared ridges from the
// already-signed facets.
std::vector<OrientedSimplex> complete_signs(
    const std::vector<OrientedSimplex>& anchored, const std::vector<Simplex>& unsigned_facets) {
    struct Entry {
        Simplex facet;
        int sign;  // 0 = unknown
    };
    std::vector<Entry> all;
    for (const auto& of : anchored) all.push_back({of.simplex, of.sign});
    for (const auto& f : unsigned_facets) all.push_back({f, 0});
    std::sort(all.begin(), all.end(),
              [](const Entry& a, const Entry& b) { return a.facet < b.facet; });

    std::map<Simplex, std::vector<std::size_t>> inc;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (int v : all[i].facet.vertices())
            inc[all[i].facet.without(v)].push_back(i);

    auto coeff = [](const Simplex& facet, int missing) {
        return facet.position_of(missing) % 2 == 0 ? +1 : -1;
    };

    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].sign != 0) queue.push_back(i);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (int v : all[i].facet.vertices()) {
            Simplex ridge = all[i].facet.without(v);
            for (std::size_t j : inc[ridge]) {
                if (j == i) continue;
                int missing = all[j].facet.minus(ridge)[0];
                int needed =
                    -all[i].sign * coeff(all[i].facet, v) * coeff(all[j].facet, missing);
                if (all[j].sign == 0) {
                    all[j].sign = needed;
                    queue.push_back(j);
                } else if (all[j].sign != needed) {
                    throw Error(Errc::OrientationBreak,
                                "sign propagation conflict at facet " +
                                    all[j].facet.str());
                }
            }
        }
    }
    std::vector<OrientedSimplex> out;
    for (const Entry& e : all) {
        if (e.sign == 0)
            throw Error(Errc::OrientationBreak,
                        "facet " + e.facet.str() + " unreachable during sign completion");
        out.emplace_back(e.facet, e.sign);
    }
    return out;
}

}  // namespace

TriangulatedManifold apply_move(const TriangulatedManifold& K, const BistellarPair& p) {
    const int n = K.dim();
    const int h = p.move_type;
    if (!pair_is_valid(K, p))
        throw Error(Errc::PairNotValid, "pair " + p.str() + " is not valid in K");

    // Outgoing facets: those containing alpha. Incoming: d(alpha) * beta.
    std::vector<Simplex> outgoing;
    for (const auto& of : K.oriented_facets())
        if (of.simplex.contains(p.alpha)) outgoing.push_back(of.simplex);
    std::vector<Simplex> incoming;
    for (int a : p.alpha.vertices())
        incoming.push_back(p.alpha.without(a).unite(p.beta));
    if (p.alpha.size() == 1) incoming = {p.beta};  // d(vertex) = {∅}

    std::vector<OrientedSimplex> kept;
    for (const auto& of : K.oriented_facets())
        if (!of.simplex.contains(p.alpha)) kept.push_back(of);

    // Frame signs extend the host orientation coherently; type-0 and
    // type-n moves fall back to global ridge propagation.
    std::vector<OrientedSimplex> result;
    if (h >= 1 && h <= n - 1) {
        MoveLocalFrame frame = local_frame(K, p);
        result = kept;
        for (const auto& of : frame.new_facets) result.push_back(of);
    } else {
        if (kept.empty())
            throw Error(Errc::OrientationBreak, "move would replace every facet");
        result = complete_signs(kept, incoming);
    }

    int universe = std::max(K.vertex_universe(), p.beta.vertices().back());
    return TriangulatedManifold::from_oriented_facets(std::move(result), n, universe);
}

MoveTrace apply_sequence(const TriangulatedManifold& K,
                         const std::vector<BistellarPair>& moves) {
    MoveTrace trace;
    trace.states.push_back(K);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (!pair_is_valid(trace.states.back(), moves[i]))
            throw Error(Errc::PairNotValidAtStep,
                        "move " + std::to_string(i) + " (" + moves[i].str() +
                            ") is not valid at that step",
                        static_cast<long>(i));
        trace.states.push_back(apply_move(trace.states.back(), moves[i]));
    }
    return trace;
}

bool complexes_equal(const TriangulatedManifold& A, const TriangulatedManifold& B) {
    return A.facet_simplices() == B.facet_simplices();
}

}  // namespace bistellar
