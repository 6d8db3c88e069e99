#pragma once

#include <map>
#include <string>
#include <vector>

#include "htt/base.hpp"
#include "htt/fincat.hpp"
#include "htt/simpset.hpp"

namespace htt::enriched {

using simpset::Report;
using simpset::SimplexRef;
using simpset::TruncatedSimplicialSet;

/// Finite simplicial category: mapping spaces are truncated simplicial sets
/// sharing one dimension cap; composition is stored levelwise on total
/// simplices in normal form and must be strictly associative and unital.
struct FinSimplicialCategory {
    std::vector<std::string> objects;
    int cap = 0;
    std::vector<std::vector<TruncatedSimplicialSet>> map_space; // [a][b]
    std::vector<int> identity_vertex;                           // in map(a,a)

    // caches: total k-simplices of map(a,b) and their positions
    std::vector<std::vector<std::vector<std::vector<SimplexRef>>>> simplices;
    std::vector<std::vector<std::vector<std::map<SimplexRef, int>>>> simplex_index;
    // comp[a][b][c][k][g * |map(a,b)_k| + f] -> index in map(a,c)_k
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> comp;

    int object_count() const { return static_cast<int>(objects.size()); }
    void build_caches();
    int total_count(int a, int b, int k) const {
        return static_cast<int>(simplices[a][b][k].size());
    }
    SimplexRef compose(int a, int b, int c, int k, const SimplexRef& g,
                       const SimplexRef& f) const;

    Report verify() const;
};

/// Discrete enrichment of an ordinary category.
FinSimplicialCategory discrete_enrichment(const fincat::FinCategory& C, int cap);

/// One-object simplicial category with mapping space the nerve of a finite
/// group, composition induced by multiplication.
FinSimplicialCategory group_nerve_enrichment(const fincat::FinCategory& G, int cap);

/// pi0 of every mapping space; composition must be constant on components.
fincat::FinCategory pi0_category(const FinSimplicialCategory& C);

/// The cube poset on the interval [i, j]: subsets containing both endpoints,
/// ordered by inclusion. Nerve dimension is j - i - 1.
struct CubePoset {
    int lo = 0, hi = 0;
    std::vector<std::vector<int>> chains0; // the elements, as sorted subsets
};

/// The cosimplicial cube category: objects 0..n, Map(i,j) the nerve of
/// CubePoset(i,j), composition by union of subsets.
FinSimplicialCategory cdelta(int n, int cap = -1);

/// Coherent nerve: n-simplices are simplicial functors cdelta(n) -> C,
/// enumerated exhaustively; d <= 3.
TruncatedSimplicialSet coherent_nerve(const FinSimplicialCategory& C, int d);

/// Enrichment-preserving functor presented on nondegenerate cells.
struct SimplicialFunctor {
    const FinSimplicialCategory* source = nullptr;
    const FinSimplicialCategory* target = nullptr;
    std::vector<int> object_map;
    // assign[a][b][dim][cell] in map(Fa, Fb)
    std::vector<std::vector<std::vector<std::vector<SimplexRef>>>> assign;

    SimplexRef apply(int a, int b, const SimplexRef& r) const;
    Report verify() const;
};

SimplicialFunctor identity_functor(const FinSimplicialCategory& C);

enum class DkVerdict { Equivalent, NotEquivalent, Unknown };
struct DkResult {
    DkVerdict verdict = DkVerdict::Unknown;
    std::string detail;
};
DkResult dk_check_enriched(const SimplicialFunctor& F);

/// Hammock mapping space from a to b at cap 1: vertices are three-stage
/// zig-zags with backward maps in S, edges are two-row hammocks with vertical
/// maps in S and commuting cells; faces select rows.
TruncatedSimplicialSet hammock_mapping_space(const fincat::FinCategory& C,
                                             const fincat::MorphismClassS& S,
                                             int a, int b);

} // namespace htt::enriched
