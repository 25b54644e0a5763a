#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "bistellar/errors.hpp"

namespace bistellar {

/// An abstract simplex: a strictly increasing sequence of positive vertex
/// labels. The empty simplex (dimension -1) is a valid value.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<int> vertices) : v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] <= 0)
                throw Error(Errc::ParseError, "vertex labels must be positive");
            if (i > 0 && v_[i] == v_[i - 1])
                throw Error(Errc::ParseError, "repeated vertex in simplex");
        }
    }

    Simplex(std::initializer_list<int> vertices)
        : Simplex(std::vector<int>(vertices)) {}

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<int>& vertices() const { return v_; }
    int operator[](std::size_t i) const { return v_[i]; }

    bool contains(int vertex) const {
        return std::binary_search(v_.begin(), v_.end(), vertex);
    }

    bool contains(const Simplex& other) const {
        return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
    }

    bool disjoint(const Simplex& other) const {
        std::size_t i = 0, j = 0;
        while (i < v_.size() && j < other.v_.size()) {
            if (v_[i] == other.v_[j]) return false;
            if (v_[i] < other.v_[j]) ++i; else ++j;
        }
        return true;
    }

    Simplex intersect(const Simplex& other) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Simplex unite(const Simplex& other) const {
        std::vector<int> out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Simplex minus(const Simplex& other) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Simplex without(int vertex) const {
        std::vector<int> out;
        out.reserve(v_.size());
        for (int x : v_) if (x != vertex) out.push_back(x);
        return from_sorted(std::move(out));
    }

    Simplex with(int vertex) const {
        std::vector<int> out(v_);
        out.push_back(vertex);
        std::sort(out.begin(), out.end());
        return from_sorted(std::move(out));
    }

    /// 0-based position of `vertex` in the ascending vertex list.
    int position_of(int vertex) const {
        auto it = std::lower_bound(v_.begin(), v_.end(), vertex);
        if (it == v_.end() || *it != vertex)
            throw Error(Errc::NotFaces, "vertex not in simplex");
        return static_cast<int>(it - v_.begin());
    }

    bool operator==(const Simplex&) const = default;

    /// Ordering graded by cardinality, then lexicographic on the sorted
    /// label sequence. For equal-size simplices this is plain lexicographic
    /// order; the grading matches the natural ordering of all faces of a
    /// vertex set.
    std::strong_ordering operator<=>(const Simplex& other) const {
        if (v_.size() != other.v_.size())
            return v_.size() <=> other.v_.size();
        return std::lexicographical_compare_three_way(
            v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
    }

    std::string str() const {
        if (v_.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        s += ")";
        return s;
    }

    /// Bypasses sorting/validation for vertex lists already known sorted.
    static Simplex from_sorted(std::vector<int> sorted) {
        Simplex s;
        s.v_ = std::move(sorted);
        return s;
    }

private:
    std::vector<int> v_;
};

/// A simplex with a sign in {-1,+1} relative to the ascending vertex order.
struct OrientedSimplex {
    Simplex simplex;
    int sign = +1;

    OrientedSimplex() = default;
    OrientedSimplex(Simplex s, int sgn) : simplex(std::move(s)), sign(sgn) {}

    OrientedSimplex operator-() const { return {simplex, -sign}; }
    bool operator==(const OrientedSimplex&) const = default;

    std::string str() const {
        return (sign < 0 ? "-" : "") + simplex.str();
    }
};

/// Sign of the permutation taking `sequence` to its sorted order, or 0 if
/// the sequence has a repeated entry.
inline int permutation_sign(const std::vector<int>& sequence) {
    std::vector<int> a(sequence);
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[j] < a[i]) {
                std::swap(a[i], a[j]);
                sign = -sign;
            } else if (a[j] == a[i]) {
                return 0;
            }
        }
    }
    return sign;
}

/// Oriented simplex from an explicit vertex ordering (orientation relative
/// to ascending order is the parity of the ordering).
inline OrientedSimplex oriented_from_sequence(const std::vector<int>& sequence) {
    int sgn = permutation_sign(sequence);
    if (sgn == 0) throw Error(Errc::ParseError, "repeated vertex in oriented simplex");
    std::vector<int> sorted(sequence);
    std::sort(sorted.begin(), sorted.end());
    return {Simplex::from_sorted(std::move(sorted)), sgn};
}

/// All subsets of `s` of size `k`, in lexicographic order.
inline std::vector<Simplex> k_subsets(const Simplex& s, int k) {
    std::vector<Simplex> out;
    if (k < 0 || k > static_cast<int>(s.size())) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(s.size());
    while (true) {
        std::vector<int> verts;
        verts.reserve(static_cast<std::size_t>(k));
        for (int i : idx) verts.push_back(s[static_cast<std::size_t>(i)]);
        out.push_back(Simplex::from_sorted(std::move(verts)));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace bistellar
