#include "htt/enriched.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace htt::enriched {

using fincat::FinCategory;

void FinSimplicialCategory::build_caches() {
    const int no = object_count();
    simplices.assign(no, {});
    simplex_index.assign(no, {});
    for (int a = 0; a < no; ++a) {
        simplices[a].resize(no);
        simplex_index[a].resize(no);
        for (int b = 0; b < no; ++b) {
            simplices[a][b].resize(cap + 1);
            simplex_index[a][b].resize(cap + 1);
            for (int k = 0; k <= cap; ++k) {
                simplices[a][b][k] = simpset::n_simplices(map_space[a][b], k);
                for (int i = 0; i < static_cast<int>(simplices[a][b][k].size()); ++i)
                    simplex_index[a][b][k][simplices[a][b][k][i]] = i;
            }
        }
    }
}

SimplexRef FinSimplicialCategory::compose(int a, int b, int c, int k,
                                          const SimplexRef& g,
                                          const SimplexRef& f) const {
    const int gi = simplex_index[b][c][k].at(g);
    const int fi = simplex_index[a][b][k].at(f);
    const int F = total_count(a, b, k);
    return simplices[a][c][k][comp[a][b][c][k][gi * F + fi]];
}

Report FinSimplicialCategory::verify() const {
    Report rep;
    const int no = object_count();
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            const auto r = simpset::verify_identities(map_space[a][b]);
            for (const auto& v : r.violations)
                rep.violations.push_back("map(" + objects[a] + "," + objects[b] +
                                         "): " + v);
            if (map_space[a][b].dim_cap != cap)
                rep.violations.push_back("map space cap mismatch");
        }
    if (!rep.ok()) return rep;
    // identities
    for (int a = 0; a < no; ++a)
        if (identity_vertex[a] < 0 ||
            identity_vertex[a] >= map_space[a][a].cell_count(0))
            rep.violations.push_back("identity vertex out of range");
    if (!rep.ok()) return rep;
    auto id_at = [&](int a, int k) {
        SimplexRef r{0, identity_vertex[a], {}};
        for (int j = 0; j < k; ++j) r = simpset::apply_degeneracy(r, j);
        return r;
    };
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int k = 0; k <= cap; ++k)
                for (const auto& f : simplices[a][b][k]) {
                    if (compose(a, b, b, k, id_at(b, k), f) != f)
                        rep.violations.push_back("left unit law fails");
                    if (compose(a, a, b, k, f, id_at(a, k)) != f)
                        rep.violations.push_back("right unit law fails");
                }
    // associativity, levelwise
    for (int a = 0; a < no && rep.ok(); ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                for (int d = 0; d < no; ++d)
                    for (int k = 0; k <= cap; ++k)
                        for (const auto& h : simplices[c][d][k])
                            for (const auto& g : simplices[b][c][k])
                                for (const auto& f : simplices[a][b][k]) {
                                    const auto l = compose(
                                        a, b, d, k, compose(b, c, d, k, h, g), f);
                                    const auto r2 = compose(
                                        a, c, d, k, h, compose(a, b, c, k, g, f));
                                    if (l != r2)
                                        rep.violations.push_back(
                                            "associativity fails at level " +
                                            std::to_string(k));
                                }
    if (!rep.ok()) return rep;
    // composition commutes with faces and degeneracies
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c) {
                for (int k = 1; k <= cap; ++k)
                    for (const auto& g : simplices[b][c][k])
                        for (const auto& f : simplices[a][b][k]) {
                            const auto gf = compose(a, b, c, k, g, f);
                            for (int i = 0; i <= k; ++i) {
                                const auto lhs = map_space[a][c].face(gf, i);
                                const auto rhs = compose(
                                    a, b, c, k - 1, map_space[b][c].face(g, i),
                                    map_space[a][b].face(f, i));
                                if (lhs != rhs)
                                    rep.violations.push_back(
                                        "composition does not commute with d_" +
                                        std::to_string(i));
                            }
                        }
                for (int k = 0; k < cap; ++k)
                    for (const auto& g : simplices[b][c][k])
                        for (const auto& f : simplices[a][b][k]) {
                            const auto gf = compose(a, b, c, k, g, f);
                            for (int j = 0; j <= k; ++j) {
                                const auto lhs = simpset::apply_degeneracy(gf, j);
                                const auto rhs = compose(
                                    a, b, c, k + 1, simpset::apply_degeneracy(g, j),
                                    simpset::apply_degeneracy(f, j));
                                if (lhs != rhs)
                                    rep.violations.push_back(
                                        "composition does not commute with s_" +
                                        std::to_string(j));
                            }
                        }
            }
    return rep;
}

FinSimplicialCategory discrete_enrichment(const FinCategory& C, int cap) {
    FinSimplicialCategory S;
    S.objects = C.objects;
    S.cap = cap;
    const int no = C.object_count();
    S.map_space.assign(no, std::vector<TruncatedSimplicialSet>(no));
    S.identity_vertex.resize(no);
    std::vector<std::vector<std::vector<int>>> hom(no,
                                                   std::vector<std::vector<int>>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            hom[a][b] = C.hom(a, b);
            TruncatedSimplicialSet X(cap);
            for (int m : hom[a][b]) X.cells[0].push_back({C.morphisms[m].name, {}});
            S.map_space[a][b] = std::move(X);
        }
    for (int a = 0; a < no; ++a) {
        const auto& h = hom[a][a];
        S.identity_vertex[a] = static_cast<int>(
            std::find(h.begin(), h.end(), C.identity[a]) - h.begin());
    }
    S.build_caches();
    S.comp.assign(no, {});
    for (int a = 0; a < no; ++a) {
        S.comp[a].assign(no, {});
        for (int b = 0; b < no; ++b) {
            S.comp[a][b].assign(no, {});
            for (int c = 0; c < no; ++c) {
                S.comp[a][b][c].resize(cap + 1);
                for (int k = 0; k <= cap; ++k) {
                    const int G = S.total_count(b, c, k);
                    const int F = S.total_count(a, b, k);
                    S.comp[a][b][c][k].resize(G * F);
                    for (int gi = 0; gi < G; ++gi)
                        for (int fi = 0; fi < F; ++fi) {
                            // all total simplices are degeneracies of vertices
                            const int gv = S.simplices[b][c][k][gi].base;
                            const int fv = S.simplices[a][b][k][fi].base;
                            const int m = C.compose(hom[b][c][gv], hom[a][b][fv]);
                            const auto& hac = hom[a][c];
                            const int v = static_cast<int>(
                                std::find(hac.begin(), hac.end(), m) - hac.begin());
                            SimplexRef r{0, v, {}};
                            for (int j = 0; j < k; ++j)
                                r = simpset::apply_degeneracy(r, j);
                            S.comp[a][b][c][k][gi * F + fi] =
                                S.simplex_index[a][c][k].at(r);
                        }
                }
            }
        }
    }
    return S;
}

FinSimplicialCategory group_nerve_enrichment(const FinCategory& G, int cap) {
    if (G.object_count() != 1 || !fincat::is_groupoid(G))
        throw InputError("group_nerve_enrichment: input must be a one-object groupoid");
    FinSimplicialCategory S;
    S.objects = {"*"};
    S.cap = cap;
    S.map_space.assign(1, std::vector<TruncatedSimplicialSet>(1));
    S.map_space[0][0] = fincat::nerve(G, cap);
    S.identity_vertex = {0};
    S.build_caches();
    // chains multiply entrywise under the multiplication functor G x G -> G;
    // this needs G abelian to be a functor, which holds for cyclic groups
    for (int g = 0; g < G.morphism_count(); ++g)
        for (int f = 0; f < G.morphism_count(); ++f)
            if (G.compose(g, f) != G.compose(f, g))
                throw InputError("group_nerve_enrichment: group must be abelian");
    const auto N = S.map_space[0][0];
    // a total k-simplex corresponds to a chain of k group elements
    auto to_chain = [&](const SimplexRef& r) {
        std::vector<int> ch;
        // rebuild the chain by iterated faces: entry i is the edge (i-1,i)
        for (int i = 1; i <= r.dim(); ++i) {
            SimplexRef cur = r;
            for (int l = r.dim(); l > i; --l) cur = N.face(cur, l);
            for (int t = 0; t < i - 1; ++t) cur = N.face(cur, 0);
            // cur is an edge: a 1-chain
            if (cur.degenerate())
                ch.push_back(G.identity[0]);
            else {
                const auto nm = N.cells[1][cur.base].name;
                ch.push_back(G.morphism_index(nm));
            }
        }
        return ch;
    };
    S.comp.assign(1, {});
    S.comp[0].assign(1, {});
    S.comp[0][0].assign(1, {});
    S.comp[0][0][0].resize(cap + 1);
    for (int k = 0; k <= cap; ++k) {
        const int F = S.total_count(0, 0, k);
        S.comp[0][0][0][k].resize(F * F);
        for (int gi = 0; gi < F; ++gi)
            for (int fi = 0; fi < F; ++fi) {
                const auto gc = to_chain(S.simplices[0][0][k][gi]);
                const auto fc = to_chain(S.simplices[0][0][k][fi]);
                std::vector<int> prod(k);
                for (int i = 0; i < k; ++i) prod[i] = G.compose(gc[i], fc[i]);
                const auto ref =
                    fincat::chain_ref(G, S.map_space[0][0], prod, 0);
                S.comp[0][0][0][k][gi * F + fi] = S.simplex_index[0][0][k].at(ref);
            }
    }
    return S;
}

fincat::FinCategory pi0_category(const FinSimplicialCategory& C) {
    const int no = C.object_count();
    fincat::FinCategory P;
    P.objects = C.objects;
    std::vector<std::vector<simpset::Pi0>> comps(no, std::vector<simpset::Pi0>(no));
    std::vector<std::vector<int>> base(no, std::vector<int>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            comps[a][b] = simpset::pi0(C.map_space[a][b]);
            base[a][b] = static_cast<int>(P.morphisms.size());
            for (int c = 0; c < comps[a][b].count; ++c)
                P.morphisms.push_back({C.objects[a] + ">" + C.objects[b] + "#" +
                                           std::to_string(c),
                                       a, b});
        }
    P.identity.resize(no);
    for (int a = 0; a < no; ++a)
        P.identity[a] = base[a][a] + comps[a][a].component[C.identity_vertex[a]];
    const int nm = static_cast<int>(P.morphisms.size());
    P.table.assign(nm, std::vector<int>(nm, -1));
    // composition at level 0; must be constant on components
    std::vector<std::vector<std::vector<int>>> chosen(
        no, std::vector<std::vector<int>>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                for (int gv = 0; gv < C.map_space[b][c].cell_count(0); ++gv)
                    for (int fv = 0; fv < C.map_space[a][b].cell_count(0); ++fv) {
                        const auto r = C.compose(a, b, c, 0, SimplexRef{0, gv, {}},
                                                 SimplexRef{0, fv, {}});
                        const int gm = base[b][c] + comps[b][c].component[gv];
                        const int fm = base[a][b] + comps[a][b].component[fv];
                        const int rm = base[a][c] + comps[a][c].component[r.base];
                        if (P.table[gm][fm] == -1)
                            P.table[gm][fm] = rm;
                        else if (P.table[gm][fm] != rm)
                            throw InputError(
                                "pi0_category: composition not constant on "
                                "components");
                    }
    const auto rep = fincat::verify_category(P);
    if (!rep.ok()) throw InputError("pi0_category: " + rep.violations[0]);
    return P;
}

// ---------------------------------------------------------------------------
// cube categories

namespace {

std::string subset_label(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

// nerve of the inclusion poset of the given subsets
struct PosetNerve {
    TruncatedSimplicialSet ss;
    std::vector<std::vector<std::vector<std::vector<int>>>> chains; // per dim
    std::map<std::vector<std::vector<int>>, int> index;             // per chain
};

bool subset_leq(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PosetNerve poset_nerve(const std::vector<std::vector<int>>& elems, int cap) {
    PosetNerve out;
    out.ss = TruncatedSimplicialSet(cap);
    out.chains.resize(cap + 1);
    // strict chains per dimension
    std::vector<std::vector<std::vector<int>>> cur;
    for (const auto& e : elems) cur.push_back({e});
    for (int d = 0; d <= cap; ++d) {
        if (d > 0) {
            std::vector<std::vector<std::vector<int>>> next;
            for (const auto& ch : cur)
                for (const auto& e : elems)
                    if (ch.back() != e && subset_leq(ch.back(), e)) {
                        auto ext = ch;
                        ext.push_back(e);
                        next.push_back(std::move(ext));
                    }
            cur = std::move(next);
        }
        std::sort(cur.begin(), cur.end());
        for (const auto& ch : cur) {
            out.index[ch] = static_cast<int>(out.chains[d].size());
            out.chains[d].push_back(ch);
            simpset::Simplex sx;
            std::ostringstream nm;
            for (size_t i = 0; i < ch.size(); ++i)
                nm << (i ? "<" : "") << subset_label(ch[i]);
            sx.name = nm.str();
            if (d >= 1)
                for (int i = 0; i <= d; ++i) {
                    auto f = ch;
                    f.erase(f.begin() + i);
                    sx.faces.push_back(SimplexRef{d - 1, out.index.at(f), {}});
                }
            out.ss.cells[d].push_back(std::move(sx));
        }
    }
    return out;
}

// weak chain <-> normal form translation for poset nerves
std::vector<std::vector<int>> expand_chain(const PosetNerve& P, const SimplexRef& r) {
    auto weak = P.chains[r.base_dim][r.base];
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it)
        weak.insert(weak.begin() + *it + 1, weak[*it]);
    return weak;
}

SimplexRef normalize_chain(const PosetNerve& P,
                           std::vector<std::vector<int>> weak) {
    std::vector<int> word;
    while (true) {
        int p = -1;
        for (int i = static_cast<int>(weak.size()) - 1; i >= 1; --i)
            if (weak[i] == weak[i - 1]) {
                p = i;
                break;
            }
        if (p < 0) break;
        word.push_back(p - 1);
        weak.erase(weak.begin() + p);
    }
    const int d = static_cast<int>(weak.size()) - 1;
    return SimplexRef{d, P.index.at(weak), word};
}

} // namespace

FinSimplicialCategory cdelta(int n, int cap) {
    if (n < 0) throw InputError("cdelta: n must be >= 0");
    const int effective_cap = cap < 0 ? std::max(0, n - 1) : cap;
    FinSimplicialCategory S;
    S.cap = effective_cap;
    for (int i = 0; i <= n; ++i) S.objects.push_back(std::to_string(i));
    const int no = n + 1;
    S.map_space.assign(no, std::vector<TruncatedSimplicialSet>(no));
    S.identity_vertex.assign(no, 0);
    std::vector<std::vector<PosetNerve>> nerves(no, std::vector<PosetNerve>(no));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i > j) {
                S.map_space[i][j] = TruncatedSimplicialSet(effective_cap);
                continue;
            }
            // subsets S with {i,j} in S in [i..j]
            std::vector<std::vector<int>> elems;
            const int interior = std::max(0, j - i - 1);
            for (int mask = 0; mask < (1 << interior); ++mask) {
                std::vector<int> s{i};
                for (int t = 0; t < interior; ++t)
                    if ((mask >> t) & 1) s.push_back(i + 1 + t);
                if (j != i) s.push_back(j);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                elems.push_back(std::move(s));
            }
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
            nerves[i][j] = poset_nerve(elems, effective_cap);
            S.map_space[i][j] = nerves[i][j].ss;
        }
    S.build_caches();
    S.comp.assign(no, {});
    for (int a = 0; a < no; ++a) {
        S.comp[a].assign(no, {});
        for (int b = 0; b < no; ++b) {
            S.comp[a][b].assign(no, {});
            for (int c = 0; c < no; ++c) {
                S.comp[a][b][c].resize(effective_cap + 1);
                if (a > b || b > c) continue;
                for (int k = 0; k <= effective_cap; ++k) {
                    const int G = S.total_count(b, c, k);
                    const int F = S.total_count(a, b, k);
                    S.comp[a][b][c][k].resize(G * F);
                    for (int gi = 0; gi < G; ++gi)
                        for (int fi = 0; fi < F; ++fi) {
                            const auto gw =
                                expand_chain(nerves[b][c], S.simplices[b][c][k][gi]);
                            const auto fw =
                                expand_chain(nerves[a][b], S.simplices[a][b][k][fi]);
                            std::vector<std::vector<int>> uw(k + 1);
                            for (int l = 0; l <= k; ++l) {
                                std::set_union(fw[l].begin(), fw[l].end(),
                                               gw[l].begin(), gw[l].end(),
                                               std::back_inserter(uw[l]));
                            }
                            const auto r = normalize_chain(nerves[a][c], uw);
                            S.comp[a][b][c][k][gi * F + fi] =
                                S.simplex_index[a][c][k].at(r);
                        }
                }
            }
        }
    }
    return S;
}

// ---------------------------------------------------------------------------
// coherent nerve

namespace {

// a simplicial functor cdelta(n) -> C as explicit cell assignments
struct CoherentSimplex {
    std::vector<int> obj;
    // phi[i][j][dim][cell] for i < j
    std::vector<std::vector<std::vector<std::vector<SimplexRef>>>> phi;

    std::vector<int> encode() const {
        std::vector<int> key = obj;
        key.push_back(-7);
        for (const auto& row : phi)
            for (const auto& p : row)
                for (const auto& dim : p)
                    for (const auto& r : dim) {
                        key.push_back(r.base_dim);
                        key.push_back(r.base);
                        key.push_back(static_cast<int>(r.word.size()));
                        for (int w : r.word) key.push_back(w);
                    }
        return key;
    }
};

SimplexRef apply_assignment(const std::vector<std::vector<SimplexRef>>& assign,
                            const SimplexRef& r) {
    SimplexRef out = assign[r.base_dim][r.base];
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it)
        out = simpset::apply_degeneracy(out, *it);
    return out;
}

// all simplicial maps K -> Y, K a poset nerve (nondegenerate faces)
std::vector<std::vector<std::vector<SimplexRef>>> simplicial_maps(
    const TruncatedSimplicialSet& K, const TruncatedSimplicialSet& Y) {
    std::vector<std::vector<std::vector<SimplexRef>>> out;
    std::vector<std::vector<SimplexRef>> cur(K.dim_cap + 1);
    const int top = K.top_nondegenerate_dim();
    auto rec = [&](auto&& self, int d, int c) -> void {
        if (d > top) {
            out.push_back(cur);
            return;
        }
        if (c == K.cell_count(d)) {
            self(self, d + 1, 0);
            return;
        }
        for (const auto& cand : simpset::n_simplices(Y, d)) {
            bool ok = true;
            for (int i = 0; i <= d && ok && d >= 1; ++i) {
                const auto& fr = K.cells[d][c].faces[i];
                if (Y.face(cand, i) != apply_assignment(cur, fr)) ok = false;
            }
            if (!ok) continue;
            cur[d].push_back(cand);
            self(self, d, c + 1);
            cur[d].pop_back();
        }
    };
    for (int d = 0; d <= K.dim_cap; ++d) cur[d].reserve(K.cell_count(d));
    rec(rec, 0, 0);
    return out;
}

} // namespace

TruncatedSimplicialSet coherent_nerve(const FinSimplicialCategory& C, int d) {
    if (d > 3)
        throw ResourceError("coherent_nerve: d > 3 exceeds the exhaustive "
                            "enumerator");
    if (d < 0) throw InputError("coherent_nerve: d must be >= 0");
    if (C.cap < std::max(0, d - 1))
        throw InputError("coherent_nerve: mapping-space cap too small for d");
    const int no = C.object_count();

    // cube categories and their poset data per simplex dimension
    std::vector<FinSimplicialCategory> cubes;
    std::vector<std::vector<std::vector<PosetNerve>>> cube_nerves(d + 1);
    for (int n = 0; n <= d; ++n) {
        cubes.push_back(cdelta(n, C.cap));
        cube_nerves[n].assign(n + 1, std::vector<PosetNerve>(n + 1));
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                // rebuild the poset presentation to translate chains
                std::vector<std::vector<int>> elems;
                const int interior = std::max(0, j - i - 1);
                for (int mask = 0; mask < (1 << interior); ++mask) {
                    std::vector<int> s{i};
                    for (int t = 0; t < interior; ++t)
                        if ((mask >> t) & 1) s.push_back(i + 1 + t);
                    if (j != i) s.push_back(j);
                    std::sort(s.begin(), s.end());
                    s.erase(std::unique(s.begin(), s.end()), s.end());
                    elems.push_back(std::move(s));
                }
                std::sort(elems.begin(), elems.end());
                elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
                cube_nerves[n][i][j] = poset_nerve(elems, C.cap);
            }
    }

    // enumerate the functors at each dimension
    std::vector<std::vector<CoherentSimplex>> level(d + 1);
    std::vector<std::map<std::vector<int>, int>> level_index(d + 1);
    for (int n = 0; n <= d; ++n) {
        std::vector<int> obj(n + 1, 0);
        auto rec_obj = [&](auto&& self, int i) -> void {
            if (i > n) {
                // candidate phi maps per pair
                std::vector<std::vector<std::vector<
                    std::vector<std::vector<SimplexRef>>>>> cand(n + 1);
                bool possible = true;
                for (int a = 0; a <= n && possible; ++a) {
                    cand[a].resize(n + 1);
                    for (int b = a + 1; b <= n && possible; ++b) {
                        cand[a][b] = simplicial_maps(cubes[n].map_space[a][b],
                                                     C.map_space[obj[a]][obj[b]]);
                        if (cand[a][b].empty()) possible = false;
                    }
                }
                if (!possible) return;
                CoherentSimplex cs;
                cs.obj = obj;
                cs.phi.assign(n + 1, {});
                for (int a = 0; a <= n; ++a) cs.phi[a].resize(n + 1);
                auto rec_phi = [&](auto&& self2, int a, int b) -> void {
                    if (a > n) {
                        level_index[n][cs.encode()] =
                            static_cast<int>(level[n].size());
                        level[n].push_back(cs);
                        return;
                    }
                    if (b > n) {
                        self2(self2, a + 1, a + 2);
                        return;
                    }
                    for (const auto& p : cand[a][b]) {
                        cs.phi[a][b] = p;
                        // in lexicographic pair order, the triples completed
                        // by choosing (a,b) are (x, a, b) with x < a
                        bool ok = true;
                        for (int x = 0; x < a && ok; ++x) {
                            for (int k = 0; k <= C.cap && ok; ++k) {
                                const auto& lists_g = cubes[n].simplices[a][b][k];
                                const auto& lists_f = cubes[n].simplices[x][a][k];
                                for (const auto& g : lists_g)
                                    for (const auto& f : lists_f) {
                                        const auto cube_comp = cubes[n].compose(
                                            x, a, b, k, g, f);
                                        const auto lhs = apply_assignment(
                                            cs.phi[x][b], cube_comp);
                                        const auto rhs = C.compose(
                                            obj[x], obj[a], obj[b], k,
                                            apply_assignment(cs.phi[a][b], g),
                                            apply_assignment(cs.phi[x][a], f));
                                        if (lhs != rhs) {
                                            ok = false;
                                            break;
                                        }
                                    }
                            }
                        }
                        if (ok) self2(self2, a, b + 1);
                    }
                };
                rec_phi(rec_phi, 0, 1);
                return;
            }
            for (int o = 0; o < no; ++o) {
                obj[i] = o;
                self(self, i + 1);
            }
        };
        rec_obj(rec_obj, 0);
    }

    // simplicial structure by precomposition with the cosimplicial maps
    auto induced = [&](int from, const std::vector<int>& theta,
                       const CoherentSimplex& cs) {
        // theta: [from] -> [n'] monotone, cs a functor on cdelta(n') where
        // n' = theta range cap; produce cs ∘ cdelta(theta) on cdelta(from)
        CoherentSimplex out;
        out.obj.resize(from + 1);
        for (int i = 0; i <= from; ++i) out.obj[i] = cs.obj[theta[i]];
        out.phi.assign(from + 1, {});
        const int n2 = static_cast<int>(cs.obj.size()) - 1;
        for (int a = 0; a <= from; ++a) {
            out.phi[a].resize(from + 1);
            for (int b = a + 1; b <= from; ++b) {
                const int ta = theta[a], tb = theta[b];
                const auto& src_nerve = cube_nerves[from][a][b];
                auto& assign = out.phi[a][b];
                assign.resize(C.cap + 1);
                for (int dim = 0; dim <= C.cap; ++dim) {
                    for (const auto& ch : src_nerve.chains[dim]) {
                        // image chain: theta(S) u {ta, tb}
                        std::vector<std::vector<int>> img;
                        for (const auto& s : ch) {
                            std::vector<int> t;
                            for (int v : s) t.push_back(theta[v]);
                            std::sort(t.begin(), t.end());
                            t.erase(std::unique(t.begin(), t.end()), t.end());
                            img.push_back(std::move(t));
                        }
                        if (ta == tb) {
                            // collapses into the identity point
                            SimplexRef r{0, C.identity_vertex[out.obj[a]], {}};
                            for (int j = 0; j < dim; ++j)
                                r = simpset::apply_degeneracy(r, j);
                            assign[dim].push_back(r);
                            continue;
                        }
                        const auto ref =
                            normalize_chain(cube_nerves[n2][ta][tb], img);
                        assign[dim].push_back(
                            apply_assignment(cs.phi[ta][tb], ref));
                    }
                }
            }
        }
        return out;
    };

    // assemble the total levels and reduce to normal forms
    std::vector<int> sizes(d + 1);
    for (int n = 0; n <= d; ++n) sizes[n] = static_cast<int>(level[n].size());

    // face/degeneracy tables
    std::vector<std::vector<std::vector<int>>> face(d + 1), degen(d + 1);
    for (int n = 1; n <= d; ++n) {
        face[n].assign(n + 1, std::vector<int>(sizes[n]));
        for (int e = 0; e < sizes[n]; ++e)
            for (int i = 0; i <= n; ++i) {
                std::vector<int> theta;
                for (int v = 0; v <= n; ++v)
                    if (v != i) theta.push_back(v);
                const auto img = induced(n - 1, theta, level[n][e]);
                face[n][i][e] = level_index[n - 1].at(img.encode());
            }
    }
    for (int n = 0; n < d; ++n) {
        degen[n].assign(n + 1, std::vector<int>(sizes[n]));
        for (int e = 0; e < sizes[n]; ++e)
            for (int j = 0; j <= n; ++j) {
                std::vector<int> theta;
                for (int v = 0; v <= n + 1; ++v) theta.push_back(v <= j ? v : v - 1);
                const auto img = induced(n + 1, theta, level[n][e]);
                degen[n][j][e] = level_index[n + 1].at(img.encode());
            }
    }

    // reduce to normal forms directly
    TruncatedSimplicialSet out(d);
    std::vector<std::vector<SimplexRef>> elem_ref(d + 1);
    for (int n = 0; n <= d; ++n) elem_ref[n].resize(sizes[n]);
    for (int e = 0; e < sizes[0]; ++e) {
        elem_ref[0][e] = SimplexRef{0, e, {}};
        out.cells[0].push_back({C.objects[level[0][e].obj[0]], {}});
    }
    for (int n = 1; n <= d; ++n)
        for (int e = 0; e < sizes[n]; ++e) {
            int dj = -1;
            for (int j = 0; j < n; ++j)
                if (degen[n - 1][j][face[n][j][e]] == e) {
                    dj = j;
                    break;
                }
            if (dj >= 0) {
                elem_ref[n][e] =
                    simpset::apply_degeneracy(elem_ref[n - 1][face[n][dj][e]], dj);
                continue;
            }
            simpset::Simplex sx;
            std::ostringstream nm;
            for (size_t i = 0; i < level[n][e].obj.size(); ++i)
                nm << (i ? "," : "") << C.objects[level[n][e].obj[i]];
            nm << "#" << e;
            sx.name = nm.str();
            for (int i = 0; i <= n; ++i)
                sx.faces.push_back(elem_ref[n - 1][face[n][i][e]]);
            elem_ref[n][e] =
                SimplexRef{n, static_cast<int>(out.cells[n].size()), {}};
            out.cells[n].push_back(std::move(sx));
        }
    return out;
}

// ---------------------------------------------------------------------------
// simplicial functors and the enriched Dwyer-Kan check

SimplexRef SimplicialFunctor::apply(int a, int b, const SimplexRef& r) const {
    SimplexRef out = assign[a][b][r.base_dim][r.base];
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it)
        out = simpset::apply_degeneracy(out, *it);
    return out;
}

Report SimplicialFunctor::verify() const {
    Report rep;
    const auto& C = *source;
    const auto& D = *target;
    if (C.cap != D.cap) {
        rep.violations.push_back("caps differ");
        return rep;
    }
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b) {
            const auto& X = C.map_space[a][b];
            const auto& Y = D.map_space[object_map[a]][object_map[b]];
            for (int dim = 0; dim <= C.cap; ++dim) {
                if (static_cast<int>(assign[a][b][dim].size()) !=
                    X.cell_count(dim)) {
                    rep.violations.push_back("assignment size mismatch");
                    return rep;
                }
                for (int c = 0; c < X.cell_count(dim); ++c) {
                    if (assign[a][b][dim][c].dim() != dim)
                        rep.violations.push_back("image dimension mismatch");
                    if (dim >= 1)
                        for (int i = 0; i <= dim; ++i) {
                            const auto lhs = apply(a, b, X.face({dim, c, {}}, i));
                            const auto rhs = Y.face(assign[a][b][dim][c], i);
                            if (lhs != rhs)
                                rep.violations.push_back(
                                    "functor does not commute with faces");
                        }
                }
            }
        }
    if (!rep.ok()) return rep;
    for (int a = 0; a < C.object_count(); ++a) {
        const auto img = assign[a][a][0][C.identity_vertex[a]];
        if (img.base != D.identity_vertex[object_map[a]])
            rep.violations.push_back("identity vertex not preserved");
    }
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b)
            for (int c = 0; c < C.object_count(); ++c)
                for (int k = 0; k <= C.cap; ++k)
                    for (const auto& g : C.simplices[b][c][k])
                        for (const auto& f : C.simplices[a][b][k]) {
                            const auto lhs =
                                apply(a, c, C.compose(a, b, c, k, g, f));
                            const auto rhs = D.compose(
                                object_map[a], object_map[b], object_map[c], k,
                                apply(b, c, g), apply(a, b, f));
                            if (lhs != rhs) {
                                rep.violations.push_back(
                                    "functor does not preserve composition");
                                return rep;
                            }
                        }
    return rep;
}

SimplicialFunctor identity_functor(const FinSimplicialCategory& C) {
    SimplicialFunctor F;
    F.source = &C;
    F.target = &C;
    F.object_map.resize(C.object_count());
    std::iota(F.object_map.begin(), F.object_map.end(), 0);
    F.assign.assign(C.object_count(), {});
    for (int a = 0; a < C.object_count(); ++a) {
        F.assign[a].resize(C.object_count());
        for (int b = 0; b < C.object_count(); ++b) {
            F.assign[a][b].resize(C.cap + 1);
            for (int dim = 0; dim <= C.cap; ++dim)
                for (int c = 0; c < C.map_space[a][b].cell_count(dim); ++c)
                    F.assign[a][b][dim].push_back(SimplexRef{dim, c, {}});
        }
    }
    return F;
}

DkResult dk_check_enriched(const SimplicialFunctor& F) {
    if (!F.verify().ok())
        throw InputError("dk_check_enriched: ill-formed simplicial functor");
    const auto& C = *F.source;
    const auto& D = *F.target;
    DkResult out;
    bool all_bijections = true;
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b) {
            const auto& X = C.map_space[a][b];
            const auto& Y = D.map_space[F.object_map[a]][F.object_map[b]];
            bool bij = true;
            for (int k = 0; k <= C.cap; ++k) {
                const auto xs = simpset::n_simplices(X, k);
                const auto ys = simpset::n_simplices(Y, k);
                std::set<SimplexRef> image;
                for (const auto& r : xs) image.insert(F.apply(a, b, r));
                if (image.size() != xs.size() || image.size() != ys.size())
                    bij = false;
            }
            if (bij) continue;
            all_bijections = false;
            const auto cmp = simpset::compare_invariants(X, Y);
            if (!cmp.pass()) {
                out.verdict = DkVerdict::NotEquivalent;
                out.detail = "map(" + C.objects[a] + "," + C.objects[b] +
                             "): " + cmp.detail;
                return out;
            }
        }
    const auto PC = pi0_category(C);
    const auto PD = pi0_category(D);
    // induced functor on components
    fincat::Functor P;
    P.source = &PC;
    P.target = &PD;
    P.object_map = F.object_map;
    P.morphism_map.resize(PC.morphism_count());
    // morphism order in pi0_category: pair-major, then component id
    {
        std::vector<std::vector<simpset::Pi0>> cc(
            C.object_count(), std::vector<simpset::Pi0>(C.object_count()));
        std::vector<std::vector<simpset::Pi0>> dd(
            D.object_count(), std::vector<simpset::Pi0>(D.object_count()));
        for (int a = 0; a < C.object_count(); ++a)
            for (int b = 0; b < C.object_count(); ++b)
                cc[a][b] = simpset::pi0(C.map_space[a][b]);
        for (int a = 0; a < D.object_count(); ++a)
            for (int b = 0; b < D.object_count(); ++b)
                dd[a][b] = simpset::pi0(D.map_space[a][b]);
        auto base_of = [&](const fincat::FinCategory& P2,
                           const std::vector<std::vector<simpset::Pi0>>& comp,
                           int a, int b) {
            int base = 0;
            const int no = P2.object_count();
            for (int x = 0; x < no; ++x)
                for (int y = 0; y < no; ++y) {
                    if (x == a && y == b) return base;
                    base += comp[x][y].count;
                }
            return base;
        };
        for (int a = 0; a < C.object_count(); ++a)
            for (int b = 0; b < C.object_count(); ++b)
                for (int v = 0; v < C.map_space[a][b].cell_count(0); ++v) {
                    const int src_m = base_of(PC, cc, a, b) + cc[a][b].component[v];
                    const auto img = F.apply(a, b, SimplexRef{0, v, {}});
                    const int fa = F.object_map[a], fb = F.object_map[b];
                    const int tgt_m =
                        base_of(PD, dd, fa, fb) + dd[fa][fb].component[img.base];
                    P.morphism_map[src_m] = tgt_m;
                }
    }
    if (!P.verify().ok()) {
        out.verdict = DkVerdict::Unknown;
        out.detail = "pi0 functor not well defined at this truncation";
        return out;
    }
    if (!fincat::check_equivalence(P)) {
        out.verdict = DkVerdict::NotEquivalent;
        out.detail = "pi0 functor is not an equivalence of categories";
        return out;
    }
    if (all_bijections) {
        out.verdict = DkVerdict::Equivalent;
        out.detail = "levelwise bijections on mapping spaces and pi0 equivalence";
    } else {
        out.verdict = DkVerdict::Unknown;
        out.detail = "battery passed without an exact witness";
    }
    return out;
}

// ---------------------------------------------------------------------------
// hammock localization

TruncatedSimplicialSet hammock_mapping_space(const FinCategory& C,
                                             const fincat::MorphismClassS& S,
                                             int a, int b) {
    struct Vertex {
        int s, g, t;
    };
    std::vector<Vertex> verts;
    std::map<std::array<int, 3>, int> vidx;
    for (int s = 0; s < C.morphism_count(); ++s) {
        if (!S.member[s] || C.morphisms[s].tgt != a) continue;
        for (int g = 0; g < C.morphism_count(); ++g) {
            if (C.morphisms[g].src != C.morphisms[s].src) continue;
            for (int t = 0; t < C.morphism_count(); ++t) {
                if (!S.member[t] || C.morphisms[t].src != b) continue;
                if (C.morphisms[t].tgt != C.morphisms[g].tgt) continue;
                vidx[{s, g, t}] = static_cast<int>(verts.size());
                verts.push_back({s, g, t});
            }
        }
    }
    struct Edge {
        int top, bot, u, w;
    };
    std::vector<Edge> edges;
    for (int top = 0; top < static_cast<int>(verts.size()); ++top)
        for (int bot = 0; bot < static_cast<int>(verts.size()); ++bot) {
            const auto& T = verts[top];
            const auto& B = verts[bot];
            for (int u = 0; u < C.morphism_count(); ++u) {
                if (!S.member[u]) continue;
                if (C.morphisms[u].src != C.morphisms[T.s].src ||
                    C.morphisms[u].tgt != C.morphisms[B.s].src)
                    continue;
                if (C.compose(B.s, u) != T.s) continue;
                for (int w = 0; w < C.morphism_count(); ++w) {
                    if (!S.member[w]) continue;
                    if (C.morphisms[w].src != C.morphisms[T.t].tgt ||
                        C.morphisms[w].tgt != C.morphisms[B.t].tgt)
                        continue;
                    if (C.compose(w, T.t) != B.t) continue;
                    if (C.compose(B.g, u) != C.compose(w, T.g)) continue;
                    edges.push_back({top, bot, u, w});
                }
            }
        }
    TruncatedSimplicialSet out(1);
    for (const auto& v : verts) {
        std::ostringstream nm;
        nm << C.morphisms[v.s].name << "\\" << C.morphisms[v.g].name << "/"
           << C.morphisms[v.t].name;
        out.cells[0].push_back({nm.str(), {}});
    }
    for (const auto& e : edges) {
        // skip the degenerate hammocks: identity verticals with equal rows
        if (e.top == e.bot && C.is_identity(e.u) && C.is_identity(e.w)) continue;
        std::ostringstream nm;
        nm << out.cells[0][e.top].name << "=>" << out.cells[0][e.bot].name << "["
           << C.morphisms[e.u].name << ";" << C.morphisms[e.w].name << "]";
        simpset::Simplex sx;
        sx.name = nm.str();
        sx.faces = {SimplexRef{0, e.bot, {}}, SimplexRef{0, e.top, {}}};
        out.cells[1].push_back(std::move(sx));
    }
    return out;
}

} // namespace htt::enriched
