#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htt/base.hpp"
#include "htt/simpset.hpp"

namespace htt::fincat {

using simpset::Report;

/// Finite category: objects, morphisms with endpoints, identities and a total
/// composition table over composable pairs. Values are immutable after
/// construction and all operations here are pure.
struct FinCategory {
    std::vector<std::string> objects;
    struct Mor {
        std::string name;
        int src = 0;
        int tgt = 0;
    };
    std::vector<Mor> morphisms;
    std::vector<int> identity;              // per object
    std::vector<std::vector<int>> table;    // table[g][f] = g∘f, -1 when not composable

    int object_count() const { return static_cast<int>(objects.size()); }
    int morphism_count() const { return static_cast<int>(morphisms.size()); }
    int compose(int g, int f) const { return table[g][f]; }
    bool composable(int g, int f) const {
        return morphisms[f].tgt == morphisms[g].src;
    }
    bool is_identity(int m) const { return identity[morphisms[m].src] == m &&
                                           morphisms[m].src == morphisms[m].tgt; }
    std::optional<int> inverse(int m) const;
    std::vector<int> hom(int a, int b) const;
    int object_index(const std::string& name) const;
    int morphism_index(const std::string& name) const;
};

Report verify_category(const FinCategory& C);

/// Nerve truncated at dim_cap: n-cells are identity-free composable chains.
simpset::TruncatedSimplicialSet nerve(const FinCategory& C, int dim_cap);

/// Chains of length n (identities allowed) in a canonical order; the n-simplices
/// of the nerve as a set. chain[0] is the first morphism applied.
std::vector<std::vector<int>> chains(const FinCategory& C, int n);

/// Normal form of a chain with possible identities, as a simplex of nerve(C).
simpset::SimplexRef chain_ref(const FinCategory& C,
                              const simpset::TruncatedSimplicialSet& N,
                              const std::vector<int>& chain, int base_object);

bool is_groupoid(const FinCategory& C);
FinCategory maximal_subgroupoid(const FinCategory& C);

/// Category of functors [n] -> C: objects are n-chains, morphisms are ladders.
FinCategory arrow_category(const FinCategory& C, int n);

struct Functor {
    const FinCategory* source = nullptr;
    const FinCategory* target = nullptr;
    std::vector<int> object_map;
    std::vector<int> morphism_map;

    Report verify() const;
};

bool check_equivalence(const Functor& F);

/// Nerve is functorial; the induced simplicial map on nerves.
simpset::SimplicialMap nerve_map(const Functor& F,
                                 const simpset::TruncatedSimplicialSet& NC,
                                 const simpset::TruncatedSimplicialSet& ND);

struct MorphismClassS {
    const FinCategory* ambient = nullptr;
    std::vector<bool> member; // per morphism; identities always included

    static MorphismClassS of(const FinCategory& C, const std::vector<int>& ms);
    static MorphismClassS identities(const FinCategory& C);
    static MorphismClassS isos(const FinCategory& C);
};

struct OreResult {
    bool holds = true;
    // witness span when it fails: s in S and f sharing a source
    int s = -1, f = -1;
};

/// Left Ore square completion as drawn: given s: a->b in S and f: a->c, look
/// for s': c->d in S and f': b->d with s'∘f = f'∘s. dual=true checks the
/// mirrored orientation.
OreResult ore_check(const FinCategory& C, const MorphismClassS& S, bool dual = false);

/// One letter of a zig-zag word: a morphism traversed forward, or a member of
/// S traversed backward (its formal inverse).
struct ZigzagLetter {
    bool backward = false;
    int morphism = 0;
    friend bool operator==(const ZigzagLetter&, const ZigzagLetter&) = default;
    friend auto operator<=>(const ZigzagLetter&, const ZigzagLetter&) = default;
};
using Zigzag = std::vector<ZigzagLetter>;

struct GzHomResult {
    enum class Status { Stabilized, Unknown };
    Status status = Status::Unknown;
    std::string note;                  // why Unknown, when it is
    std::vector<Zigzag> class_reps;    // canonical representative per class
    std::vector<long long> class_sizes;
    int count() const { return static_cast<int>(class_reps.size()); }
};

/// Hom-set of the Gabriel-Zisman localization C[S^-1] from x to y, computed by
/// bounded zig-zag word saturation. Unknown when the class count has not
/// stabilized between word_cap-1 and word_cap, or the word budget is hit.
GzHomResult gz_localize_hom(const FinCategory& C, const MorphismClassS& S, int x,
                            int y, int word_cap, long long max_words = 2000000);

} // namespace htt::fincat
