#pragma once

#include <map>
#include <vector>

#include "bistellar/exchange_matrix.hpp"
#include "bistellar/semifield.hpp"

namespace bistellar {

/// Normalized coefficient pair: plus ⊕ minus = 1; u = plus / minus.
template <class S>
struct CoefficientPair {
    typename S::Elem plus;
    typename S::Elem minus;

    typename S::Elem u(const S& s) const { return s.mul(plus, s.inv(minus)); }
};

/// Coefficient pair from a u-ratio: plus = u/(1 ⊕ u), minus = 1/(1 ⊕ u).
template <class S>
CoefficientPair<S> normalize_u(const S& s, const typename S::Elem& u) {
    typename S::Elem denom = s.oplus(s.one(), u);
    CoefficientPair<S> pair{s.mul(u, s.inv(denom)), s.inv(denom)};
    if (!s.equal(s.oplus(pair.plus, pair.minus), s.one()))
        throw Error(Errc::NormalizationImpossible,
                    "semifield cannot normalize the coefficient ratio");
    return pair;
}

/// A seed: the host triangulation, one cluster variable per codimension-1
/// face (the face itself is the variable id), a normalized coefficient
/// pair per variable, and the exchange matrix.
template <class S>
struct Seed {
    TriangulatedManifold host;
    std::map<Simplex, CoefficientPair<S>> coefficients;
    ExchangeMatrix matrix;

    bool equal(const Seed& o, const S& s) const {
        if (!complexes_equal(host, o.host) || !(matrix == o.matrix)) return false;
        if (coefficients.size() != o.coefficients.size()) return false;
        for (const auto& [f, pair] : coefficients) {
            auto it = o.coefficients.find(f);
            if (it == o.coefficients.end()) return false;
            if (!s.equal(pair.plus, it->second.plus) ||
                !s.equal(pair.minus, it->second.minus))
                return false;
        }
        return true;
    }
};

/// Seed with explicit u-assignments; faces without an assignment get the
/// semifield's default generator keyed by the face's rank in F(K) shifted
/// by `generator_offset` (principal coefficients).
template <class S>
Seed<S> initial_seed(const TriangulatedManifold& K, const S& s,
                     const std::map<Simplex, typename S::Elem>& u_assignment = {},
                     int generator_offset = 0) {
    Seed<S> seed;
    seed.host = K;
    seed.matrix = exchange_matrix(K);
    const auto& faces = seed.matrix.index();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto it = u_assignment.find(faces[i]);
        typename S::Elem u = (it != u_assignment.end())
                                 ? it->second
                                 : s.default_u(generator_offset + static_cast<int>(i));
        seed.coefficients[faces[i]] = normalize_u(s, u);
    }
    return seed;
}

/// One exchangeable-variable monomial: exponent map over cluster variables
/// with a semifield coefficient.
template <class S>
struct ClusterMonomial {
    std::map<Simplex, int> exps;
    typename S::Elem coeff;

    bool equal(const ClusterMonomial& o, const S& s) const {
        return exps == o.exps && s.equal(coeff, o.coeff);
    }
};

/// x_f * x_{sigma(f)} = m_plus + m_minus, with coprime monomials.
template <class S>
struct ExchangeRelation {
    Simplex f;
    Simplex sigma_f;
    ClusterMonomial<S> m_plus;
    ClusterMonomial<S> m_minus;
};

/// Coefficient-stripped identity of a relation: the unordered left pair and
/// the unordered pair of monomial exponent maps.
struct RelationKey {
    std::pair<Simplex, Simplex> left;
    std::pair<std::map<Simplex, int>, std::map<Simplex, int>> monomials;

    bool operator==(const RelationKey&) const = default;
    auto operator<=>(const RelationKey&) const = default;
};

template <class S>
RelationKey relation_key(const ExchangeRelation<S>& r) {
    RelationKey key;
    key.left = r.f < r.sigma_f ? std::make_pair(r.f, r.sigma_f)
                               : std::make_pair(r.sigma_f, r.f);
    key.monomials = r.m_plus.exps < r.m_minus.exps
                        ? std::make_pair(r.m_plus.exps, r.m_minus.exps)
                        : std::make_pair(r.m_minus.exps, r.m_plus.exps);
    return key;
}

namespace detail {

inline int pos_part(int b) { return b > 0 ? b : 0; }

/// Exponent maps of the divisor D_{alpha,f}; both product forms are
/// computed and must agree.
inline std::map<Simplex, int> divisor_exponents(const ExchangeMatrix& B,
                                                const MoveLocalFrame& frame,
                                                const std::vector<Simplex>& common,
                                                const Simplex& f) {
    std::map<Simplex, int> first, second;
    for (const Simplex& g : common) {
        Simplex sg = frame.sigma_face(g);
        int bfg = B.at(f, g);
        int bfsg = B.at(f, sg);
        if (bfg > 0 && bfsg < 0) {
            first[g] += bfg;
            first[sg] += bfg;
        }
        if (bfg < 0 && bfsg > 0) {
            second[g] += -bfg;
            second[sg] += -bfg;
        }
    }
    if (first != second)
        throw Error(Errc::DivisorMismatch,
                    "the two divisor forms disagree at face " + f.str());
    return first;
}

/// lcm of the plain and sigma-twisted local products with exponents
/// [sign * b_{fg}]_+, divided exactly by the divisor.
inline std::map<Simplex, int> relation_monomial_exponents(
    const ExchangeMatrix& B, const MoveLocalFrame& frame,
    const std::vector<Simplex>& common, const Simplex& f, int sign,
    const std::map<Simplex, int>& divisor) {
    std::map<Simplex, int> plain, twisted;
    for (const Simplex& g : common) {
        int e = pos_part(sign * B.at(f, g));
        if (e) {
            plain[g] += e;
            twisted[frame.sigma_face(g)] += e;
        }
    }
    std::map<Simplex, int> lcm(plain);
    for (const auto& [g, e] : twisted) {
        int& slot = lcm[g];
        slot = std::max(slot, e);
    }
    for (const auto& [g, e] : divisor) {
        auto it = lcm.find(g);
        if (it == lcm.end() || it->second < e)
            throw Error(Errc::NonDivisible,
                        "divisor does not divide the lcm monomial at face " + f.str());
        it->second -= e;
        if (it->second == 0) lcm.erase(it);
    }
    return lcm;
}

}  // namespace detail

/// The binom(h+1, 2) exchange relations of a middle move, one per face of
/// D_alpha, in lexicographic order of that face.
template <class S>
std::vector<ExchangeRelation<S>> exchange_relations(const Seed<S>& seed,
                                                    const MoveLocalFrame& frame,
                                                    const LocalFaceSets& sets,
                                                    [[maybe_unused]] const S& s) {
    std::vector<Simplex> common = sets.common();
    std::vector<ExchangeRelation<S>> out;
    for (const Simplex& f : sets.d_alpha) {
        const CoefficientPair<S>& pf = seed.coefficients.at(f);
        auto divisor = detail::divisor_exponents(seed.matrix, frame, common, f);
        ExchangeRelation<S> rel;
        rel.f = f;
        rel.sigma_f = frame.sigma_face(f);
        rel.m_plus.exps =
            detail::relation_monomial_exponents(seed.matrix, frame, common, f, +1, divisor);
        rel.m_plus.coeff = pf.plus;
        rel.m_minus.exps =
            detail::relation_monomial_exponents(seed.matrix, frame, common, f, -1, divisor);
        rel.m_minus.coeff = pf.minus;
        out.push_back(std::move(rel));
    }
    return out;
}

/// pi_{alpha,g} = prod over d in D_alpha of p+_d^[b_dg]+ * p-_d^(-[-b_dg]+).
template <class S>
typename S::Elem coefficient_pi(const Seed<S>& seed, const LocalFaceSets& sets,
                                const Simplex& g, const S& s) {
    typename S::Elem out = s.one();
    for (const Simplex& d : sets.d_alpha) {
        const CoefficientPair<S>& pd = seed.coefficients.at(d);
        int b = seed.matrix.at(d, g);
        out = s.mul(out, s.pow(pd.plus, detail::pos_part(b)));
        out = s.mul(out, s.pow(pd.minus, -detail::pos_part(-b)));
    }
    return out;
}

/// Bistellar seed mutation: cluster relabeled along sigma, coefficients
/// updated through the u-rule and renormalized, matrix mutated.
template <class S>
Seed<S> mutate_seed(const Seed<S>& seed, const MoveLocalFrame& frame,
                    const LocalFaceSets& sets, const S& s) {
    const int h = static_cast<int>(frame.old_facets.size()) - 1;
    Simplex alpha = Simplex::from_sorted(std::vector<int>(
        frame.ordering.begin(), frame.ordering.begin() + h + 1));
    std::vector<int> beta_verts(frame.ordering.begin() + h + 1, frame.ordering.end());
    std::sort(beta_verts.begin(), beta_verts.end());
    BistellarPair pair{alpha, Simplex::from_sorted(beta_verts), h};

    Seed<S> out;
    out.host = apply_move(seed.host, pair);
    out.matrix = mutate(seed.matrix, frame, sets);

    std::set<Simplex> in_beta(sets.lambda_beta_faces.begin(),
                              sets.lambda_beta_faces.end());
    std::set<Simplex> in_d_beta(sets.d_beta.begin(), sets.d_beta.end());
    for (const Simplex& f : out.matrix.index()) {
        typename S::Elem u;
        if (in_d_beta.count(f)) {
            u = s.inv(seed.coefficients.at(frame.sigma_face(f)).u(s));
        } else if (in_beta.count(f)) {
            Simplex sf = frame.sigma_face(f);
            u = s.mul(coefficient_pi(seed, sets, sf, s), seed.coefficients.at(sf).u(s));
        } else {
            u = seed.coefficients.at(f).u(s);
        }
        out.coefficients[f] = normalize_u(s, u);
    }
    return out;
}

/// The substitution realizing the field identification: identity away from
/// Lambda_alpha, the sigma-relabeling on the common faces, and the
/// exchange-relation expression (m+ + m-)/x_f on D_alpha. Coefficients are
/// embedded into the exact rational-expression domain.
template <class S>
std::map<Simplex, RatExpr> field_map(const Seed<S>& seed, const MoveLocalFrame& frame,
                                     const LocalFaceSets& sets, const S& s) {
    auto monomial_expr = [&](const ClusterMonomial<S>& m) {
        RatExpr out = s.to_ratexpr(m.coeff);
        for (const auto& [g, e] : m.exps)
            out = out * RatExpr::variable(VarKey::cluster(g)).pow(e);
        return out;
    };
    std::map<Simplex, RatExpr> images;
    std::set<Simplex> in_alpha(sets.lambda_alpha_faces.begin(),
                               sets.lambda_alpha_faces.end());
    std::set<Simplex> in_d_alpha(sets.d_alpha.begin(), sets.d_alpha.end());
    std::vector<ExchangeRelation<S>> relations =
        exchange_relations(seed, frame, sets, s);
    for (const Simplex& f : seed.matrix.index()) {
        if (!in_alpha.count(f)) {
            images[f] = RatExpr::variable(VarKey::cluster(f));
        } else if (!in_d_alpha.count(f)) {
            images[f] = RatExpr::variable(VarKey::cluster(frame.sigma_face(f)));
        } else {
            const ExchangeRelation<S>* rel = nullptr;
            for (const auto& r : relations)
                if (r.f == f) rel = &r;
            images[f] = (monomial_expr(rel->m_plus) + monomial_expr(rel->m_minus)) /
                        RatExpr::variable(VarKey::cluster(f));
        }
    }
    return images;
}

/// Lemma-pro3 check: M±_{K,alpha,f} = M∓_{L,beta,sigma(f)} for every
/// f in D_alpha, together with equality of the divisors.
template <class S>
bool symmetry_check_M(const Seed<S>& seed, const MoveLocalFrame& frame,
                      const LocalFaceSets& sets, const S& s) {
    Seed<S> mutated = mutate_seed(seed, frame, sets, s);
    const int h = static_cast<int>(frame.old_facets.size()) - 1;
    std::vector<int> beta_verts(frame.ordering.begin() + h + 1, frame.ordering.end());
    std::sort(beta_verts.begin(), beta_verts.end());
    Simplex alpha = Simplex::from_sorted(std::vector<int>(
        frame.ordering.begin(), frame.ordering.begin() + h + 1));
    BistellarPair inverse{Simplex::from_sorted(beta_verts), alpha, h};

    MoveLocalFrame back_frame = local_frame(mutated.host, inverse);
    LocalFaceSets back_sets = local_face_sets(back_frame);

    auto fwd = exchange_relations(seed, frame, sets, s);
    auto bwd = exchange_relations(mutated, back_frame, back_sets, s);

    auto divisor_fwd = [&](const Simplex& f) {
        return detail::divisor_exponents(seed.matrix, frame, sets.common(), f);
    };
    auto divisor_bwd = [&](const Simplex& f) {
        return detail::divisor_exponents(mutated.matrix, back_frame, back_sets.common(), f);
    };

    for (const auto& rk : fwd) {
        Simplex sf = frame.sigma_face(rk.f);
        const ExchangeRelation<S>* rl = nullptr;
        for (const auto& r : bwd)
            if (r.f == sf) rl = &r;
        if (!rl) return false;
        if (!rk.m_plus.equal(rl->m_minus, s)) return false;
        if (!rk.m_minus.equal(rl->m_plus, s)) return false;
        if (divisor_fwd(rk.f) != divisor_bwd(sf)) return false;
    }
    return true;
}

/// pi-duality: pi^K_{alpha,sigma(f)} * pi^L_{beta,f} = 1 on the common part.
template <class S>
bool pi_duality_check(const Seed<S>& seed, const MoveLocalFrame& frame,
                      const LocalFaceSets& sets, const S& s) {
    Seed<S> mutated = mutate_seed(seed, frame, sets, s);
    const int h = static_cast<int>(frame.old_facets.size()) - 1;
    std::vector<int> beta_verts(frame.ordering.begin() + h + 1, frame.ordering.end());
    std::sort(beta_verts.begin(), beta_verts.end());
    Simplex alpha = Simplex::from_sorted(std::vector<int>(
        frame.ordering.begin(), frame.ordering.begin() + h + 1));
    BistellarPair inverse{Simplex::from_sorted(beta_verts), alpha, h};
    MoveLocalFrame back_frame = local_frame(mutated.host, inverse);
    LocalFaceSets back_sets = local_face_sets(back_frame);

    for (const Simplex& f : back_sets.common()) {
        typename S::Elem forward = coefficient_pi(seed, sets, frame.sigma_face(f), s);
        typename S::Elem backward = coefficient_pi(mutated, back_sets, f, s);
        if (!s.equal(s.mul(forward, backward), s.one())) return false;
    }
    return true;
}

}  // namespace bistellar
