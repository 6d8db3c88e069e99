#pragma once

#include <compare>
#include <string>
#include <vector>

#include "htt/base.hpp"

namespace htt::simpset {

/// Strictly decreasing degeneracy word [i_1 > i_2 > ... > i_k]; the referenced
/// simplex is s_{i_1}(s_{i_2}(...(base)...)). Empty word = nondegenerate.
using DegeneracyWord = std::vector<int>;

/// Eilenberg-Zilber normal form of a (possibly degenerate) simplex.
struct SimplexRef {
    int base_dim = 0;
    int base = 0; // index into cells[base_dim]
    DegeneracyWord word;

    int dim() const { return base_dim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }

    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct Simplex {
    std::string name;
    std::vector<SimplexRef> faces; // d_0..d_n for an n-simplex, n >= 1
};

struct Report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Finite simplicial set truncated at dim_cap, presented by its nondegenerate
/// simplices. Immutable once built; all operations are pure.
struct TruncatedSimplicialSet {
    int dim_cap = 0;
    std::vector<std::vector<Simplex>> cells; // cells[n], n <= dim_cap

    TruncatedSimplicialSet() : cells(1) {}
    explicit TruncatedSimplicialSet(int cap) : dim_cap(cap), cells(cap + 1) {}

    int cell_count(int n) const {
        if (n < 0 || n > dim_cap) return 0;
        return static_cast<int>(cells[n].size());
    }
    bool is_empty() const {
        for (const auto& c : cells)
            if (!c.empty()) return false;
        return true;
    }
    int top_nondegenerate_dim() const {
        for (int n = dim_cap; n >= 0; --n)
            if (!cells[n].empty()) return n;
        return -1;
    }
    const Simplex& cell(int n, int i) const { return cells[n][i]; }

    /// d_i on a normal form, renormalized.
    SimplexRef face(const SimplexRef& r, int i) const;
};

/// s_j applied to a normal form (does not need the ambient complex).
SimplexRef apply_degeneracy(const SimplexRef& r, int j);

/// All n-simplices, degenerate included, in a canonical order
/// (base dimension descending, base index ascending, word lexicographic).
std::vector<SimplexRef> n_simplices(const TruncatedSimplicialSet& X, int n);

std::string ref_name(const TruncatedSimplicialSet& X, const SimplexRef& r);

TruncatedSimplicialSet standard_simplex(int n, int dim_cap = -1);
TruncatedSimplicialSet boundary(int n, int dim_cap = -1);
TruncatedSimplicialSet horn(int n, int k, int dim_cap = -1);
TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a,
                                      const TruncatedSimplicialSet& b);

/// Checks d_i d_j = d_{j-1} d_i (i < j) on every simplex up to the cap,
/// plus structural well-formedness of the stored normal forms.
Report verify_identities(const TruncatedSimplicialSet& X);

struct Pi0 {
    std::vector<int> component; // per 0-cell, component ids numbered by first occurrence
    int count = 0;
};
Pi0 pi0(const TruncatedSimplicialSet& X);

struct HomologyGroup {
    long long betti = 0;
    std::vector<long long> torsion; // invariant factors > 1, each dividing the next
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyReport {
    std::vector<HomologyGroup> groups; // degrees 0..up_to
    int validity_bound = 0;            // = dim_cap - 1
    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// Integral homology of the normalized chain complex, degrees 0..up_to.
/// Requires up_to <= dim_cap - 1.
HomologyReport homology(const TruncatedSimplicialSet& X, int up_to);

long long euler_characteristic(const TruncatedSimplicialSet& X);

/// Simplicial map presented on nondegenerate simplices of the source.
struct SimplicialMap {
    const TruncatedSimplicialSet* source = nullptr;
    const TruncatedSimplicialSet* target = nullptr;
    std::vector<std::vector<SimplexRef>> assignment; // per source dim, per cell

    SimplexRef apply(const SimplexRef& r) const;
    Report verify() const;
    /// True when the map is a dimension-wise bijection on nondegenerate cells
    /// (and verifies). Verify separately for diagnostics.
    bool is_isomorphism() const;
};

/// Battery outcome comparing two complexes through invariants only.
struct InvariantComparison {
    bool pi0_equal = false;
    bool homology_equal = false;
    std::string detail;
    bool pass() const { return pi0_equal && homology_equal; }
};
InvariantComparison compare_invariants(const TruncatedSimplicialSet& a,
                                       const TruncatedSimplicialSet& b);

} // namespace htt::simpset
