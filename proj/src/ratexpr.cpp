#include "bistellar/ratexpr.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "bistellar/errors.hpp"

namespace bistellar {

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        first = false;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        bool need_coeff = (mag != 1) || e.empty();
        if (need_coeff) out += mag.str();
        bool first_var = true;
        for (const auto& [v, k] : e) {
            if (!first_var || need_coeff) out += "*";
            first_var = false;
            out += v.str();
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RatExpr::RatExpr(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error(Errc::NonDivisible, "zero denominator");
    strip_content();
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    if (o.is_zero()) throw Error(Errc::NonDivisible, "division by zero expression");
    return {num * o.den, den * o.num};
}

RatExpr RatExpr::inverse() const {
    if (is_zero()) throw Error(Errc::NonDivisible, "inverse of zero expression");
    return {den, num};
}

RatExpr RatExpr::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    RatExpr out = one();
    for (long long i = 0; i < k; ++i) out = out * *this;
    return out;
}

RatExpr RatExpr::substituted(const std::map<VarKey, RatExpr>& images) const {
    auto substitute_poly = [&](const Poly& p) {
        RatExpr acc = zero();
        for (const auto& [e, c] : p.terms) {
            RatExpr term = from_poly(Poly::constant(c));
            for (const auto& [v, k] : e) {
                auto it = images.find(v);
                RatExpr base = (it == images.end()) ? variable(v) : it->second;
                term = term * base.pow(k);
            }
            acc = acc + term;
        }
        return acc;
    };
    RatExpr n = substitute_poly(num);
    RatExpr d = substitute_poly(den);
    return n / d;
}

void RatExpr::strip_content() {
    if (num.is_zero()) {
        den = Poly::one();
        return;
    }
    // Common monomial factor across every term of num and den.
    std::map<VarKey, int> common;
    bool first = true;
    auto scan = [&](const Poly& p) {
        for (const auto& [e, c] : p.terms) {
            (void)c;
            if (first) {
                common = e;
                first = false;
                continue;
            }
            for (auto it = common.begin(); it != common.end();) {
                auto found = e.find(it->first);
                int have = found == e.end() ? 0 : found->second;
                it->second = std::min(it->second, have);
                it = (it->second == 0) ? common.erase(it) : std::next(it);
            }
        }
    };
    scan(num);
    scan(den);
    auto divide_monomial = [&](Poly& p) {
        std::map<Exponents, BigInt> out;
        for (const auto& [e, c] : p.terms) {
            Exponents reduced(e);
            for (const auto& [v, k] : common) {
                int& slot = reduced[v];
                slot -= k;
                if (slot == 0) reduced.erase(v);
            }
            out[std::move(reduced)] = c;
        }
        p.terms = std::move(out);
    };
    if (!common.empty()) {
        divide_monomial(num);
        divide_monomial(den);
    }
    // Integer content.
    BigInt g = 0;
    for (const auto& [e, c] : num.terms) g = boost::multiprecision::gcd(g, c);
    for (const auto& [e, c] : den.terms) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    if (g > 1) {
        for (auto& [e, c] : num.terms) c /= g;
        for (auto& [e, c] : den.terms) c /= g;
    }
    // Sign normalization: leading denominator coefficient positive.
    if (!den.terms.empty() && den.terms.begin()->second < 0) {
        for (auto& [e, c] : num.terms) c = -c;
        for (auto& [e, c] : den.terms) c = -c;
    }
}

std::string RatExpr::str() const {
    if (den == Poly::one()) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

}  // namespace bistellar
