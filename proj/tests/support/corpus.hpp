#pragma once

#include <string>
#include <vector>

#include "htt/fincat.hpp"

namespace htt::testsupport {

// The three walking examples: C (one object, identity only), D (walking
// isomorphism), E (walking arrow).
fincat::FinCategory terminal_cat();
fincat::FinCategory walking_iso();
fincat::FinCategory walking_arrow();

fincat::FinCategory discrete_cat(int n);

/// One-object category from a monoid multiplication table; table[a][b] = a*b,
/// element 0 is the unit.
fincat::FinCategory monoid_cat(const std::vector<std::vector<int>>& table,
                               const std::string& prefix);

fincat::FinCategory cyclic_group_cat(int n);
/// (Z/2, *) as a monoid: {1, 0} under multiplication.
fincat::FinCategory z2_mult_monoid();

/// Poset category from a reflexive-transitive-antisymmetric relation.
fincat::FinCategory poset_cat(const std::vector<std::vector<bool>>& leq,
                              const std::string& prefix);

/// Pair groupoid: one morphism between every ordered pair of n objects.
fincat::FinCategory pair_groupoid(int n);

fincat::FinCategory disjoint_union_cat(const fincat::FinCategory& a,
                                       const fincat::FinCategory& b);

/// All partial orders on {0..n-1}, by brute force; n <= 4 supported.
std::vector<std::vector<std::vector<bool>>> all_posets(int n);

struct CorpusEntry {
    std::string name;
    fincat::FinCategory category;
};

/// Deterministic corpus of >= 50 finite categories with <= 4 objects and
/// <= 12 morphisms, mixing groupoids and non-groupoids.
const std::vector<CorpusEntry>& corpus();

/// Exhaustive isomorphism search between small categories.
bool categories_isomorphic(const fincat::FinCategory& A,
                           const fincat::FinCategory& B);

} // namespace htt::testsupport

#include "htt/enriched.hpp"

namespace htt::testsupport {

/// Two objects a, b with endomorphism points, the given space from a to b,
/// nothing back, and unit-forced composition.
enriched::FinSimplicialCategory two_object_enriched(
    const simpset::TruncatedSimplicialSet& hom_ab);

} // namespace htt::testsupport
