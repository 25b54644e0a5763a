#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bistellar/simplex.hpp"

namespace bistellar {

using BigInt = boost::multiprecision::cpp_int;

/// Variable of the expression engine: either a semifield coefficient
/// generator (id >= 0) or a cluster variable attached to a face.
struct VarKey {
    int gen = -1;
    Simplex face;

    static VarKey generator(int id) { return {id, Simplex()}; }
    static VarKey cluster(Simplex f) { return {-1, std::move(f)}; }

    bool is_generator() const { return gen >= 0; }

    bool operator==(const VarKey&) const = default;
    auto operator<=>(const VarKey&) const = default;

    std::string str() const {
        return is_generator() ? "u" + std::to_string(gen) : "x" + face.str();
    }
};

using Exponents = std::map<VarKey, int>;  // nonzero, nonnegative exponents

/// Multivariate polynomial with exact integer coefficients.
class Poly {
public:
    std::map<Exponents, BigInt> terms;  // nonzero coefficients only

    static Poly zero() { return {}; }
    static Poly constant(BigInt c) {
        Poly p;
        if (c != 0) p.terms[{}] = std::move(c);
        return p;
    }
    static Poly one() { return constant(1); }
    static Poly variable(const VarKey& v, int exponent = 1) {
        Poly p;
        Exponents e;
        if (exponent != 0) e[v] = exponent;
        p.terms[std::move(e)] = 1;
        return p;
    }
    static Poly monomial(Exponents e, BigInt c) {
        Poly p;
        if (c != 0) p.terms[std::move(e)] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    Poly operator+(const Poly& o) const {
        Poly out(*this);
        for (const auto& [e, c] : o.terms) {
            auto it = out.terms.find(e);
            if (it == out.terms.end()) {
                out.terms.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) out.terms.erase(it);
            }
        }
        return out;
    }

    Poly operator-() const {
        Poly out(*this);
        for (auto& [e, c] : out.terms) c = -c;
        return out;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [e1, c1] : terms) {
            for (const auto& [e2, c2] : o.terms) {
                Exponents e(e1);
                for (const auto& [v, k] : e2) {
                    int& slot = e[v];
                    slot += k;
                    if (slot == 0) e.erase(v);
                }
                BigInt& slot = out.terms[e];
                slot += c1 * c2;
                if (slot == 0) out.terms.erase(e);
            }
        }
        return out;
    }

    bool operator==(const Poly&) const = default;

    std::string str() const;
};

/// Quotient of polynomials; kept unreduced except for monomial and integer
/// content stripping. Equality is decided by cross-multiplication.
class RatExpr {
public:
    Poly num = Poly::zero();
    Poly den = Poly::one();

    RatExpr() = default;
    RatExpr(Poly n, Poly d);

    static RatExpr zero() { return {}; }
    static RatExpr one() { return {Poly::one(), Poly::one()}; }
    static RatExpr from_poly(Poly p) { return {std::move(p), Poly::one()}; }
    static RatExpr variable(const VarKey& v) { return from_poly(Poly::variable(v)); }

    bool is_zero() const { return num.is_zero(); }

    RatExpr operator+(const RatExpr& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    RatExpr operator-(const RatExpr& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    RatExpr operator*(const RatExpr& o) const { return {num * o.num, den * o.den}; }
    RatExpr operator/(const RatExpr& o) const;
    RatExpr inverse() const;

    RatExpr pow(long long k) const;

    bool equals(const RatExpr& o) const { return num * o.den == o.num * den; }

    /// Replaces each variable with the given expression (variables without
    /// an entry stay themselves). Exponents in a Poly are nonnegative, so
    /// only products are needed.
    RatExpr substituted(const std::map<VarKey, RatExpr>& images) const;

    std::string str() const;

private:
    void strip_content();
};

}  // namespace bistellar
