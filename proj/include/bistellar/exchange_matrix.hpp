#pragma once

#include <map>
#include <vector>

#include "bistellar/moves.hpp"

namespace bistellar {

/// Integer chain: simplices with nonzero coefficients only.
struct SignedChain {
    std::map<Simplex, long long> terms;

    long long coefficient(const Simplex& s) const {
        auto it = terms.find(s);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const SignedChain&) const = default;
};

/// Generalized boundary operator: sum over k-subsets of vertex positions,
/// coefficient (-1)^(sum of removed positions), scaled by the sign of s.
SignedChain boundary_k(const OrientedSimplex& s, int k);

enum class PairOrder {
    FirstPrecedes,   // f ≺ g
    SecondPrecedes,  // g ≺ f
    Incomparable,    // disjoint faces
};

/// Orientation-induced pair ordering between two distinct d-faces f, g of
/// the oriented simplex s, read off a generalized boundary coefficient.
PairOrder pair_order(const OrientedSimplex& s, const Simplex& f, const Simplex& g);

/// Skew-symmetric integer matrix indexed by codimension-1 faces in
/// lexicographic order.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(std::vector<Simplex> index);

    const std::vector<Simplex>& index() const { return index_; }
    std::size_t size() const { return index_.size(); }

    bool has(const Simplex& f) const { return pos_.count(f) != 0; }
    std::size_t position(const Simplex& f) const;

    int at(const Simplex& f, const Simplex& g) const;
    /// 0 when either face is absent from the index.
    int at_or_zero(const Simplex& f, const Simplex& g) const;
    int& entry(std::size_t i, std::size_t j) { return b_[i][j]; }
    int entry(std::size_t i, std::size_t j) const { return b_[i][j]; }

    void add(const Simplex& f, const Simplex& g, int value);

    bool is_skew_symmetric() const;
    bool entries_within_unit() const;

    ExchangeMatrix negated() const;

    /// Same matrix with rows/columns listed in the given order; the order
    /// must be a permutation of the index. Used to compare against
    /// externally printed matrices.
    ExchangeMatrix reindexed(const std::vector<Simplex>& order) const;

    bool operator==(const ExchangeMatrix&) const = default;

private:
    std::vector<Simplex> index_;
    std::map<Simplex, std::size_t> pos_;
    std::vector<std::vector<int>> b_;
};

/// Per-facet block B^s over the given index: ±1 between codimension-1
/// faces of s per the pair ordering, 0 elsewhere.
ExchangeMatrix local_matrix(const OrientedSimplex& s, const std::vector<Simplex>& index);

/// Sum of local matrices over the oriented facets; index defaults to the
/// lexicographically sorted codimension-1 faces of the collection.
ExchangeMatrix exchange_matrix(const std::vector<OrientedSimplex>& facets);
ExchangeMatrix exchange_matrix(const TriangulatedManifold& K);

/// Matrix mutation along a middle move: entries with both faces in
/// F(Lambda_beta) become -b_{sigma(f) sigma(g)}, all others are carried
/// over (absent indices read as 0). The result is indexed by F(L) in
/// lexicographic order.
ExchangeMatrix mutate(const ExchangeMatrix& B, const MoveLocalFrame& frame,
                      const LocalFaceSets& sets);

/// Text rendering: header line of face labels, then rows of space-separated
/// entries. `signed_style` renders +1/-1/0, otherwise plain integers.
std::string to_text(const ExchangeMatrix& B, bool signed_style);

}  // namespace bistellar
