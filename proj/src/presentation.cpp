#include "bistellar/presentation.hpp"

namespace bistellar {

bool grouped_relation_check(const std::vector<ExchangeRelation<PosRatSemifield>>& triple) {
    if (triple.size() != 3) return false;
    PosRatSemifield s;

    auto left_product = [](const ExchangeRelation<PosRatSemifield>& r) {
        std::map<Simplex, int> exps;
        exps[r.f] += 1;
        exps[r.sigma_f] += 1;
        return exps;
    };

    const auto& r1 = triple[0];
    auto p1 = left_product(r1);

    // Every relation must be normalized: p+ + p- = 1.
    for (const auto& r : triple)
        if (!s.equal(s.oplus(r.m_plus.coeff, r.m_minus.coeff), s.one())) return false;

    // Locate the relations whose left products are r1's right-hand monomials.
    const ExchangeRelation<PosRatSemifield>* r2 = nullptr;
    const ExchangeRelation<PosRatSemifield>* r3 = nullptr;
    for (const auto& r : triple) {
        if (left_product(r) == r1.m_plus.exps) r2 = &r;
        if (left_product(r) == r1.m_minus.exps) r3 = &r;
    }
    if (!r2 || !r3 || r2 == r3 || r2 == &r1 || r3 == &r1) return false;

    RatExpr a = r1.m_plus.coeff.value;   // coefficient of P2 in r1
    RatExpr b = r1.m_minus.coeff.value;  // coefficient of P3 in r1

    // r2 : P2 = c*P1 + d*P3.
    RatExpr c, d;
    if (r2->m_plus.exps == p1 && r2->m_minus.exps == r1.m_minus.exps) {
        c = r2->m_plus.coeff.value;
        d = r2->m_minus.coeff.value;
    } else if (r2->m_minus.exps == p1 && r2->m_plus.exps == r1.m_minus.exps) {
        c = r2->m_minus.coeff.value;
        d = r2->m_plus.coeff.value;
    } else {
        return false;
    }

    // Substituting r2 into r1: (1 - a c) P1 = (a d + b) P3.
    RatExpr lhs = RatExpr::one() - a * c;
    RatExpr rhs = a * d + b;
    if (!lhs.equals(rhs)) return false;
    if (lhs.is_zero()) return false;

    // The cancellation factor is (1 + u + v)/((1 + u)(1 + v)) with
    // u = a/b and v = c/d.
    RatExpr u = a / b;
    RatExpr v = c / d;
    RatExpr expected = (RatExpr::one() + u + v) /
                       ((RatExpr::one() + u) * (RatExpr::one() + v));
    if (!lhs.equals(expected)) return false;

    // r3 : P3 = c'*P1 + d'*P2; substitution gives (1 - b c') P1 = (a + b d') P2.
    RatExpr cp, dp;
    if (r3->m_plus.exps == p1 && r3->m_minus.exps == r1.m_plus.exps) {
        cp = r3->m_plus.coeff.value;
        dp = r3->m_minus.coeff.value;
    } else if (r3->m_minus.exps == p1 && r3->m_plus.exps == r1.m_plus.exps) {
        cp = r3->m_minus.coeff.value;
        dp = r3->m_plus.coeff.value;
    } else {
        return false;
    }
    RatExpr lhs2 = RatExpr::one() - b * cp;
    RatExpr rhs2 = a + b * dp;
    if (!lhs2.equals(rhs2)) return false;
    if (lhs2.is_zero()) return false;

    // Both products cancel by a nonzero factor: P1 = P2 = P3.
    return true;
}

}  // namespace bistellar
