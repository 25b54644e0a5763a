#pragma once

#include <map>
#include <string>

#include "bistellar/ratexpr.hpp"

namespace bistellar {

/// The one-element semifield {1}.
struct TrivialSemifield {
    struct Elem {
        bool operator==(const Elem&) const = default;
    };
    static constexpr const char* name() { return "trivial"; }

    Elem one() const { return {}; }
    Elem mul(const Elem&, const Elem&) const { return {}; }
    Elem inv(const Elem&) const { return {}; }
    Elem pow(const Elem&, long long) const { return {}; }
    Elem oplus(const Elem&, const Elem&) const { return {}; }
    bool equal(const Elem&, const Elem&) const { return true; }
    std::string str(const Elem&) const { return "1"; }
    RatExpr to_ratexpr(const Elem&) const { return RatExpr::one(); }
    Elem default_u(int) const { return {}; }
};

/// Tropical semifield on generators y_0, y_1, ...: elements are Laurent
/// monomials in the generators, multiplication adds exponent vectors and
/// the auxiliary addition takes the componentwise minimum (absent
/// exponents read as 0).
struct TropicalSemifield {
    struct Elem {
        std::map<int, long long> exps;  // generator id -> nonzero exponent
        bool operator==(const Elem&) const = default;
    };
    static constexpr const char* name() { return "tropical"; }

    Elem one() const { return {}; }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out(a);
        for (const auto& [id, k] : b.exps) {
            long long& slot = out.exps[id];
            slot += k;
            if (slot == 0) out.exps.erase(id);
        }
        return out;
    }

    Elem inv(const Elem& a) const {
        Elem out(a);
        for (auto& [id, k] : out.exps) k = -k;
        return out;
    }

    Elem pow(const Elem& a, long long k) const {
        Elem out;
        for (const auto& [id, e] : a.exps)
            if (e * k != 0) out.exps[id] = e * k;
        return out;
    }

    Elem oplus(const Elem& a, const Elem& b) const {
        Elem out;
        std::map<int, std::pair<long long, long long>> both;
        for (const auto& [id, k] : a.exps) both[id].first = k;
        for (const auto& [id, k] : b.exps) both[id].second = k;
        for (const auto& [id, ks] : both) {
            long long m = std::min(ks.first, ks.second);
            if (m != 0) out.exps[id] = m;
        }
        return out;
    }

    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const {
        if (a.exps.empty()) return "1";
        std::string out;
        bool first = true;
        for (const auto& [id, k] : a.exps) {
            if (!first) out += "*";
            first = false;
            out += "y" + std::to_string(id);
            if (k != 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    RatExpr to_ratexpr(const Elem& a) const {
        Poly n = Poly::one(), d = Poly::one();
        for (const auto& [id, k] : a.exps) {
            if (k > 0)
                n = n * Poly::variable(VarKey::generator(id), static_cast<int>(k));
            else
                d = d * Poly::variable(VarKey::generator(id), static_cast<int>(-k));
        }
        return {std::move(n), std::move(d)};
    }

    Elem default_u(int generator_id) const { return Elem{{{generator_id, 1}}}; }
};

/// Positive rational functions in generators u_0, u_1, ... with the
/// ordinary addition as the auxiliary one; exact arbitrary-precision
/// arithmetic, equality by cross-multiplication.
struct PosRatSemifield {
    struct Elem {
        RatExpr value = RatExpr::one();
        bool operator==(const Elem& o) const { return value.equals(o.value); }
    };
    static constexpr const char* name() { return "posrat"; }

    Elem one() const { return {RatExpr::one()}; }
    Elem mul(const Elem& a, const Elem& b) const { return {a.value * b.value}; }
    Elem inv(const Elem& a) const { return {a.value.inverse()}; }
    Elem pow(const Elem& a, long long k) const { return {a.value.pow(k)}; }
    Elem oplus(const Elem& a, const Elem& b) const { return {a.value + b.value}; }
    bool equal(const Elem& a, const Elem& b) const { return a.value.equals(b.value); }
    std::string str(const Elem& a) const { return a.value.str(); }
    RatExpr to_ratexpr(const Elem& a) const { return a.value; }
    Elem default_u(int generator_id) const {
        return {RatExpr::variable(VarKey::generator(generator_id))};
    }
};

}  // namespace bistellar
