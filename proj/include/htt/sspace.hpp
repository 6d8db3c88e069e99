#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htt/base.hpp"
#include "htt/fincat.hpp"
#include "htt/lifting.hpp"
#include "htt/simpset.hpp"

namespace htt::sspace {

using simpset::Report;

/// A truncated simplicial set presented by total level sets and operator
/// tables (degenerate elements stored explicitly). Derived objects (columns
/// of bisimplicial sets, fiber powers, mapping spaces) live here before being
/// reduced to normal forms.
struct TotalSimplicialSet {
    int cap = 0;
    std::vector<int> sizes;
    std::vector<std::vector<std::string>> names; // optional per level
    // face[m][i][e] for 1 <= m <= cap; degen[m][j][e] for 0 <= m < cap
    std::vector<std::vector<std::vector<int>>> face;
    std::vector<std::vector<std::vector<int>>> degen;

    Report verify() const;
};

/// Reduction of a total presentation to nondegenerate cells, with the
/// translation tables both ways.
struct NormalizedTotal {
    simpset::TruncatedSimplicialSet ss;
    std::vector<std::vector<int>> cell_elem;            // cell index -> element id
    std::vector<std::vector<simpset::SimplexRef>> elem_ref; // element id -> normal form
};
NormalizedTotal normalize(const TotalSimplicialSet& T);

/// Bigraded family of finite sets with horizontal and vertical simplicial
/// structure, truncated at caps (N, M). Operator tables are explicit.
struct TruncatedBisimplicialSet {
    int cap_n = 0, cap_m = 0;
    // sizes[n][m]
    std::vector<std::vector<int>> sizes;
    std::vector<std::vector<std::vector<std::string>>> names;
    // hface[n][m][i][e] -> (n-1, m); hdeg[n][m][i][e] -> (n+1, m)
    // vface[n][m][j][e] -> (n, m-1); vdeg[n][m][j][e] -> (n, m+1)
    std::vector<std::vector<std::vector<std::vector<int>>>> hface, hdeg, vface, vdeg;

    int size(int n, int m) const { return sizes[n][m]; }
    friend bool operator==(const TruncatedBisimplicialSet&,
                           const TruncatedBisimplicialSet&) = default;
};

/// Simplicial identities in both directions plus commutation of the two
/// actions, checked exhaustively.
Report verify_bisimplicial(const TruncatedBisimplicialSet& W);

/// The vertical simplicial set at horizontal level n.
TotalSimplicialSet column(const TruncatedBisimplicialSet& W, int n);

/// The horizontal simplicial set at vertical level m; row(NC, 0) recovers the
/// nerve of C.
TotalSimplicialSet row(const TruncatedBisimplicialSet& W, int m);

/// Classifying diagram N(C): level (n,m) holds the n-by-m grids of morphisms
/// with all vertical arrows invertible. Grids are kept for later lookups.
struct ClassifyingDiagram {
    TruncatedBisimplicialSet W;
    const fincat::FinCategory* category = nullptr;
    // canonical grid encoding -> element index, per bidegree
    std::vector<std::vector<std::map<std::vector<int>, int>>> index;
    std::vector<std::vector<std::vector<std::vector<int>>>> grids; // decoded
};
ClassifyingDiagram classifying_diagram(const fincat::FinCategory& C, int cap_n,
                                       int cap_m, long long budget = 4000000);

enum class SegalVerdict { Bijection, Battery, Fail };

struct SegalReport {
    struct Level {
        int k = 0;
        SegalVerdict verdict = SegalVerdict::Fail;
        std::string witness;
    };
    std::vector<Level> levels; // k = 2..cap_n
    bool pass() const {
        for (const auto& l : levels)
            if (l.verdict == SegalVerdict::Fail) return false;
        return true;
    }
    bool all_bijections() const {
        for (const auto& l : levels)
            if (l.verdict != SegalVerdict::Bijection) return false;
        return true;
    }
};

/// Compares W_k with the k-fold fiber power of W_1 over W_0 in every bidegree.
SegalReport segal_check(const TruncatedBisimplicialSet& W);

struct MappingSpace {
    int x = 0, y = 0;
    simpset::TruncatedSimplicialSet carrier;
    std::vector<std::vector<int>> level_elements; // carrier level -> W[1][m] ids
};
MappingSpace mapping_space(const TruncatedBisimplicialSet& W, int x, int y);

struct HoCategory {
    fincat::FinCategory cat;
    // morphism index -> (x, y, component id in map(x,y))
    std::vector<std::array<int, 3>> mor_key;
    // per pair (x,y): component of each map(x,y) vertex, and the W[1][0]
    // element ids backing those vertices
    std::vector<std::vector<std::vector<int>>> pair_vertex_component;
    std::vector<std::vector<std::vector<int>>> pair_vertex_element;

    int morphism_of(int x, int y, int comp) const;
    /// Ho-morphism represented by a W[1][0] element with exact endpoints.
    int morphism_of_element(const TruncatedBisimplicialSet& W, int e) const;
};

/// Homotopy category: objects W_{0,0}, hom-sets pi0 of mapping spaces,
/// composition through Segal lifts in W_{2,0}. Composite independence of the
/// lift is verified exhaustively; failures throw InputError.
HoCategory homotopy_category(const TruncatedBisimplicialSet& W);

struct HeqResult {
    simpset::Pi0 w1_components;       // components of the column at n = 1
    std::vector<bool> component_heq;  // per component
    std::vector<int> element_component; // W[1][0] element -> component
    std::vector<bool> uniform;        // per component: vertices agreed
};
HeqResult heq(const TruncatedBisimplicialSet& W, const HoCategory& ho);
HeqResult heq(const TruncatedBisimplicialSet& W);

enum class Completeness { Complete, Incomplete, Unknown };
struct CompletenessResult {
    Completeness verdict = Completeness::Unknown;
    std::string witness;
};
CompletenessResult completeness_check(const TruncatedBisimplicialSet& W);

/// True iff every vertical operator on level 0 is a bijection.
bool is_segal_precategory(const TruncatedBisimplicialSet& X);

/// Pullback against 0-coskeleta: keeps the simplices all of whose horizontal
/// vertices are vertically constant. The result is a Segal precategory.
TruncatedBisimplicialSet discretize(const TruncatedBisimplicialSet& W);

struct BisimplicialMap {
    const TruncatedBisimplicialSet* source = nullptr;
    const TruncatedBisimplicialSet* target = nullptr;
    std::vector<std::vector<std::vector<int>>> assign; // per (n,m), per element

    Report verify() const;
};

enum class DkVerdict { Equivalent, NotEquivalent, Unknown };
struct DkResult {
    DkVerdict verdict = DkVerdict::Unknown;
    std::string detail;
};

/// Dwyer-Kan check: mapping-space battery with bijection witnesses plus
/// equivalence of homotopy categories.
DkResult dk_check(const BisimplicialMap& f);

/// The induced map of classifying diagrams of a functor.
BisimplicialMap classifying_diagram_map(const fincat::Functor& F,
                                        const ClassifyingDiagram& NC,
                                        const ClassifyingDiagram& ND);

BisimplicialMap identity_map(const TruncatedBisimplicialSet& W);

} // namespace htt::sspace
