#include "support/corpus.hpp"

#include <sstream>

namespace htt::testsupport {

using fincat::FinCategory;

FinCategory terminal_cat() {
    FinCategory C;
    C.objects = {"x"};
    C.morphisms = {{"id_x", 0, 0}};
    C.identity = {0};
    C.table = {{0}};
    return C;
}

FinCategory walking_iso() {
    FinCategory C;
    C.objects = {"x", "y"};
    C.morphisms = {{"id_x", 0, 0}, {"id_y", 1, 1}, {"f", 0, 1}, {"g", 1, 0}};
    C.identity = {0, 1};
    C.table.assign(4, std::vector<int>(4, -1));
    auto set = [&](int g, int f, int gf) { C.table[g][f] = gf; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2); // f∘id_x = f
    set(1, 2, 2); // id_y∘f = f
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0); // g∘f = id_x
    set(2, 3, 1); // f∘g = id_y
    return C;
}

FinCategory walking_arrow() {
    FinCategory C;
    C.objects = {"x", "y"};
    C.morphisms = {{"id_x", 0, 0}, {"id_y", 1, 1}, {"f", 0, 1}};
    C.identity = {0, 1};
    C.table.assign(3, std::vector<int>(3, -1));
    C.table[0][0] = 0;
    C.table[1][1] = 1;
    C.table[2][0] = 2;
    C.table[1][2] = 2;
    return C;
}

FinCategory discrete_cat(int n) {
    FinCategory C;
    for (int i = 0; i < n; ++i) {
        C.objects.push_back("o" + std::to_string(i));
        C.morphisms.push_back({"id_o" + std::to_string(i), i, i});
        C.identity.push_back(i);
    }
    C.table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) C.table[i][i] = i;
    return C;
}

FinCategory monoid_cat(const std::vector<std::vector<int>>& table,
                       const std::string& prefix) {
    FinCategory C;
    const int n = static_cast<int>(table.size());
    C.objects = {prefix + "·"};
    for (int i = 0; i < n; ++i)
        C.morphisms.push_back({prefix + "m" + std::to_string(i), 0, 0});
    C.identity = {0};
    C.table.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) C.table[a][b] = table[a][b];
    return C;
}

FinCategory cyclic_group_cat(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return monoid_cat(t, "z" + std::to_string(n) + ".");
}

FinCategory z2_mult_monoid() {
    // elements {1, 0} under multiplication; index 0 is the unit 1
    return monoid_cat({{0, 1}, {1, 1}}, "z2x.");
}

FinCategory poset_cat(const std::vector<std::vector<bool>>& leq,
                      const std::string& prefix) {
    FinCategory C;
    const int n = static_cast<int>(leq.size());
    for (int i = 0; i < n; ++i) C.objects.push_back(prefix + "p" + std::to_string(i));
    std::vector<std::vector<int>> midx(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq[a][b]) {
                midx[a][b] = static_cast<int>(C.morphisms.size());
                std::ostringstream os;
                os << prefix << "le" << a << b;
                C.morphisms.push_back({os.str(), a, b});
            }
    C.identity.resize(n);
    for (int i = 0; i < n; ++i) C.identity[i] = midx[i][i];
    const int nm = C.morphism_count();
    C.table.assign(nm, std::vector<int>(nm, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (leq[a][b] && leq[b][c])
                    C.table[midx[b][c]][midx[a][b]] = midx[a][c];
    return C;
}

FinCategory pair_groupoid(int n) {
    FinCategory C;
    for (int i = 0; i < n; ++i) C.objects.push_back("g" + std::to_string(i));
    std::vector<std::vector<int>> midx(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            midx[a][b] = static_cast<int>(C.morphisms.size());
            C.morphisms.push_back(
                {"e" + std::to_string(a) + std::to_string(b), a, b});
        }
    C.identity.resize(n);
    for (int i = 0; i < n; ++i) C.identity[i] = midx[i][i];
    const int nm = C.morphism_count();
    C.table.assign(nm, std::vector<int>(nm, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) C.table[midx[b][c]][midx[a][b]] = midx[a][c];
    return C;
}

FinCategory disjoint_union_cat(const FinCategory& a, const FinCategory& b) {
    FinCategory C;
    for (const auto& o : a.objects) C.objects.push_back("L" + o);
    for (const auto& o : b.objects) C.objects.push_back("R" + o);
    for (const auto& m : a.morphisms) C.morphisms.push_back({"L" + m.name, m.src, m.tgt});
    const int om = a.object_count(), mm = a.morphism_count();
    for (const auto& m : b.morphisms)
        C.morphisms.push_back({"R" + m.name, m.src + om, m.tgt + om});
    for (int i : a.identity) C.identity.push_back(i);
    for (int i : b.identity) C.identity.push_back(i + mm);
    const int nm = C.morphism_count();
    C.table.assign(nm, std::vector<int>(nm, -1));
    for (int g = 0; g < a.morphism_count(); ++g)
        for (int f = 0; f < a.morphism_count(); ++f)
            if (a.table[g][f] >= 0) C.table[g][f] = a.table[g][f];
    for (int g = 0; g < b.morphism_count(); ++g)
        for (int f = 0; f < b.morphism_count(); ++f)
            if (b.table[g][f] >= 0) C.table[g + mm][f + mm] = b.table[g][f] + mm;
    return C;
}

std::vector<std::vector<std::vector<bool>>> all_posets(int n) {
    std::vector<std::vector<std::vector<bool>>> out;
    const int pairs = n * n;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                r[a][b] = (mask >> (a * n + b)) & 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!r[a][a]) ok = false;
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && r[a][b] && r[b][a]) ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
            }
        }
        if (ok) out.push_back(std::move(r));
    }
    return out;
}

enriched::FinSimplicialCategory two_object_enriched(
    const simpset::TruncatedSimplicialSet& hom_ab) {
    enriched::FinSimplicialCategory C;
    const int cap = hom_ab.dim_cap;
    C.objects = {"a", "b"};
    C.cap = cap;
    C.map_space.assign(2, std::vector<simpset::TruncatedSimplicialSet>(2));
    C.map_space[0][0] = simpset::standard_simplex(0, cap);
    C.map_space[1][1] = simpset::standard_simplex(0, cap);
    C.map_space[0][1] = hom_ab;
    C.map_space[1][0] = simpset::TruncatedSimplicialSet(cap);
    C.identity_vertex = {0, 0};
    C.build_caches();
    C.comp.assign(2, {});
    for (int a = 0; a < 2; ++a) {
        C.comp[a].assign(2, {});
        for (int b = 0; b < 2; ++b) {
            C.comp[a][b].assign(2, {});
            for (int c = 0; c < 2; ++c) {
                C.comp[a][b][c].resize(cap + 1);
                for (int k = 0; k <= cap; ++k) {
                    const int G = C.total_count(b, c, k);
                    const int F = C.total_count(a, b, k);
                    C.comp[a][b][c][k].assign(G * F, 0);
                    for (int gi = 0; gi < G; ++gi)
                        for (int fi = 0; fi < F; ++fi)
                            C.comp[a][b][c][k][gi * F + fi] = a == b ? gi : fi;
                }
            }
        }
    }
    return C;
}

bool categories_isomorphic(const FinCategory& A, const FinCategory& B) {
    if (A.object_count() != B.object_count() ||
        A.morphism_count() != B.morphism_count())
        return false;
    const int no = A.object_count();
    std::vector<int> omap(no, -1), used(no, 0);
    std::vector<int> mmap(A.morphism_count(), -1);
    std::vector<int> mused(B.morphism_count(), 0);
    auto try_morphisms = [&](auto&& self, int m) -> bool {
        if (m == A.morphism_count()) {
            for (int g = 0; g < A.morphism_count(); ++g)
                for (int f = 0; f < A.morphism_count(); ++f) {
                    const int gf = A.table[g][f];
                    const int im = B.table[mmap[g]][mmap[f]];
                    if ((gf < 0) != (im < 0)) return false;
                    if (gf >= 0 && mmap[gf] != im) return false;
                }
            return true;
        }
        const auto& mm = A.morphisms[m];
        for (int c = 0; c < B.morphism_count(); ++c) {
            if (mused[c]) continue;
            if (B.morphisms[c].src != omap[mm.src] ||
                B.morphisms[c].tgt != omap[mm.tgt])
                continue;
            if (A.is_identity(m) != B.is_identity(c)) continue;
            mmap[m] = c;
            mused[c] = 1;
            if (self(self, m + 1)) return true;
            mused[c] = 0;
            mmap[m] = -1;
        }
        return false;
    };
    auto try_objects = [&](auto&& self, int o) -> bool {
        if (o == no) return try_morphisms(try_morphisms, 0);
        for (int c = 0; c < no; ++c) {
            if (used[c]) continue;
            omap[o] = c;
            used[c] = 1;
            if (self(self, o + 1)) return true;
            used[c] = 0;
            omap[o] = -1;
        }
        return false;
    };
    return try_objects(try_objects, 0);
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        v.push_back({"terminal", terminal_cat()});
        v.push_back({"walking_iso", walking_iso()});
        v.push_back({"walking_arrow", walking_arrow()});
        v.push_back({"discrete2", discrete_cat(2)});
        v.push_back({"discrete3", discrete_cat(3)});
        v.push_back({"z2", cyclic_group_cat(2)});
        v.push_back({"z3", cyclic_group_cat(3)});
        v.push_back({"z2_mult", z2_mult_monoid()});
        v.push_back({"pair2", pair_groupoid(2)});
        v.push_back({"iso_plus_pt", disjoint_union_cat(walking_iso(), terminal_cat())});
        v.push_back({"arrow_plus_iso",
                     disjoint_union_cat(walking_arrow(), walking_iso())});
        v.push_back({"z2_plus_pt", disjoint_union_cat(cyclic_group_cat(2),
                                                      terminal_cat())});
        // all posets on 3 elements (19 of them)
        {
            int i = 0;
            for (const auto& r : all_posets(3)) {
                std::ostringstream os;
                os << "poset3_" << i;
                v.push_back({os.str(), poset_cat(r, os.str() + ".")});
                ++i;
            }
        }
        // a deterministic slice of the posets on 4 elements
        {
            const auto p4 = all_posets(4);
            int taken = 0;
            for (size_t i = 0; i < p4.size() && taken < 22; i += 11, ++taken) {
                std::ostringstream os;
                os << "poset4_" << i;
                v.push_back({os.str(), poset_cat(p4[i], os.str() + ".")});
            }
        }
        return v;
    }();
    return entries;
}

} // namespace htt::testsupport
