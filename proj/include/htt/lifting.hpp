#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htt/base.hpp"
#include "htt/fincat.hpp"
#include "htt/simpset.hpp"

namespace htt::lifting {

/// A map V[n,k] -> X, presented as the compatible tuple of its faces.
/// faces[i] is meaningful for i != k; faces[k] is a placeholder.
struct HornProblem {
    int n = 0;
    int k = 0;
    std::vector<simpset::SimplexRef> faces;

    friend bool operator==(const HornProblem&, const HornProblem&) = default;
};

/// All horn problems of shape (n,k), via indexed assembly. The reference
/// variant scans tuples exhaustively; both must agree.
std::vector<HornProblem> enumerate_horns(const simpset::TruncatedSimplicialSet& X,
                                         int n, int k);
std::vector<HornProblem> enumerate_horns_reference(
    const simpset::TruncatedSimplicialSet& X, int n, int k);

/// All n-simplices z (degenerate allowed) with d_i(z) = faces[i] for i != k.
std::vector<simpset::SimplexRef> fillers(const simpset::TruncatedSimplicialSet& X,
                                         const HornProblem& p);

struct LiftLine {
    int n = 0, k = 0;
    long long total = 0, unfilled = 0, multifilled = 0;
};

struct LiftReport {
    int d = 0;
    std::vector<LiftLine> lines; // all (n,k), 1 <= n <= d
    // verdicts, derived from the counts; uniqueness quantifies over n >= 2
    bool kan = true;            // all horns filled
    bool quasicategory = true;  // inner horns filled
    bool inner_unique = true;   // inner horns uniquely filled (n >= 2)
    bool all_unique = true;     // all horns uniquely filled (n >= 2)
    std::optional<HornProblem> kan_witness;   // first unfilled horn
    std::optional<HornProblem> inner_witness; // first unfilled/multi inner horn

    bool nerve_of_category() const { return quasicategory && inner_unique; }
    bool nerve_of_groupoid() const { return kan && all_unique; }
};

/// Filler statistics for every (n,k) with n <= d. Data-parallel over horn
/// problems; deterministic aggregation.
LiftReport analyze(const simpset::TruncatedSimplicialSet& X, int d,
                   Exec exec = Exec::Parallel);

LiftReport is_kan(const simpset::TruncatedSimplicialSet& X, int d);
LiftReport is_quasicategory(const simpset::TruncatedSimplicialSet& X, int d);
bool is_nerve_of_groupoid(const simpset::TruncatedSimplicialSet& X, int d);
bool is_nerve_of_category(const simpset::TruncatedSimplicialSet& X, int d);

struct Reconstruction {
    fincat::FinCategory category;
    // vertex i of X <-> object i; edge_morphism[e] = morphism of nondegenerate
    // edge e; identities come from degenerate edges
    std::vector<int> edge_morphism;
    bool ok = false;
    std::string detail;
};

/// Rebuilds a category from vertices, edges and unique inner 2-fillers;
/// verifies the result and the nerve round-trip up to d.
Reconstruction reconstruct_category(const simpset::TruncatedSimplicialSet& X, int d);

std::string format_report(const LiftReport& rep);

} // namespace htt::lifting
