#include "htt/fincat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace htt::fincat {

using simpset::SimplexRef;
using simpset::TruncatedSimplicialSet;

std::optional<int> FinCategory::inverse(int m) const {
    const auto& mm = morphisms[m];
    for (int g = 0; g < morphism_count(); ++g) {
        if (morphisms[g].src != mm.tgt || morphisms[g].tgt != mm.src) continue;
        if (compose(g, m) == identity[mm.src] && compose(m, g) == identity[mm.tgt])
            return g;
    }
    return std::nullopt;
}

std::vector<int> FinCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < morphism_count(); ++m)
        if (morphisms[m].src == a && morphisms[m].tgt == b) out.push_back(m);
    return out;
}

int FinCategory::object_index(const std::string& name) const {
    for (int i = 0; i < object_count(); ++i)
        if (objects[i] == name) return i;
    throw InputError("unknown object: " + name);
}

int FinCategory::morphism_index(const std::string& name) const {
    for (int i = 0; i < morphism_count(); ++i)
        if (morphisms[i].name == name) return i;
    throw InputError("unknown morphism: " + name);
}

Report verify_category(const FinCategory& C) {
    Report rep;
    const int nm = C.morphism_count();
    if (static_cast<int>(C.identity.size()) != C.object_count())
        rep.violations.push_back("identity table size mismatch");
    if (static_cast<int>(C.table.size()) != nm)
        rep.violations.push_back("composition table size mismatch");
    if (!rep.ok()) return rep;

    for (int o = 0; o < C.object_count(); ++o) {
        const int id = C.identity[o];
        if (id < 0 || id >= nm || C.morphisms[id].src != o || C.morphisms[id].tgt != o)
            rep.violations.push_back("identity of " + C.objects[o] + " ill-typed");
    }
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            const int gf = C.table[g][f];
            if (C.composable(g, f)) {
                if (gf < 0 || gf >= nm) {
                    rep.violations.push_back("missing composite " + C.morphisms[g].name +
                                             "∘" + C.morphisms[f].name);
                    continue;
                }
                if (C.morphisms[gf].src != C.morphisms[f].src ||
                    C.morphisms[gf].tgt != C.morphisms[g].tgt)
                    rep.violations.push_back("ill-typed composite " + C.morphisms[g].name +
                                             "∘" + C.morphisms[f].name);
            } else if (gf != -1) {
                rep.violations.push_back("composite defined for non-composable pair " +
                                         C.morphisms[g].name + "," + C.morphisms[f].name);
            }
        }
    if (!rep.ok()) return rep;

    for (int f = 0; f < nm; ++f) {
        const auto& m = C.morphisms[f];
        if (C.compose(f, C.identity[m.src]) != f)
            rep.violations.push_back("right identity law fails for " + m.name);
        if (C.compose(C.identity[m.tgt], f) != f)
            rep.violations.push_back("left identity law fails for " + m.name);
    }
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (!C.composable(h, g)) continue;
            for (int f = 0; f < nm; ++f) {
                if (!C.composable(g, f)) continue;
                if (C.compose(C.compose(h, g), f) != C.compose(h, C.compose(g, f))) {
                    std::ostringstream os;
                    os << "associativity fails on (" << C.morphisms[h].name << ","
                       << C.morphisms[g].name << "," << C.morphisms[f].name << ")";
                    rep.violations.push_back(os.str());
                }
            }
        }
    return rep;
}

std::vector<std::vector<int>> chains(const FinCategory& C, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out; // callers use objects directly at n = 0
    std::vector<int> cur;
    auto rec = [&](auto&& self, int at) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int m = 0; m < C.morphism_count(); ++m)
            if (C.morphisms[m].src == at) {
                cur.push_back(m);
                self(self, C.morphisms[m].tgt);
                cur.pop_back();
            }
    };
    for (int o = 0; o < C.object_count(); ++o) rec(rec, o);
    return out;
}

namespace {

std::string chain_name(const FinCategory& C, const std::vector<int>& chain) {
    std::ostringstream os;
    for (size_t i = 0; i < chain.size(); ++i)
        os << (i ? "|" : "") << C.morphisms[chain[i]].name;
    return os.str();
}

struct NerveIndex {
    // per dimension, chain -> cell index (dimension 0 keyed by object id)
    std::vector<std::map<std::vector<int>, int>> idx;
};

// Peels identities off a chain, producing the EZ normal form.
SimplexRef normalize_chain(const FinCategory& C, const NerveIndex& ni,
                           std::vector<int> chain, int base_object) {
    std::vector<int> word;
    while (true) {
        int p = -1; // largest 1-indexed identity position
        for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i)
            if (C.is_identity(chain[i])) {
                p = i + 1;
                break;
            }
        if (p < 0) break;
        word.push_back(p - 1);
        chain.erase(chain.begin() + (p - 1));
    }
    const int d = static_cast<int>(chain.size());
    const int base = d == 0 ? ni.idx[0].at(std::vector<int>{base_object})
                            : ni.idx[d].at(chain);
    return SimplexRef{d, base, word};
}

} // namespace

simpset::TruncatedSimplicialSet nerve(const FinCategory& C, int dim_cap) {
    if (dim_cap < 0) throw InputError("nerve: dim_cap must be >= 0");
    TruncatedSimplicialSet N(dim_cap);
    NerveIndex ni;
    ni.idx.resize(dim_cap + 1);
    for (int o = 0; o < C.object_count(); ++o) {
        ni.idx[0][{o}] = o;
        N.cells[0].push_back({C.objects[o], {}});
    }
    for (int d = 1; d <= dim_cap; ++d) {
        for (const auto& ch : chains(C, d)) {
            bool nondeg = true;
            for (int m : ch)
                if (C.is_identity(m)) nondeg = false;
            if (!nondeg) continue;
            ni.idx[d][ch] = static_cast<int>(N.cells[d].size());
            N.cells[d].push_back({chain_name(C, ch), {}});
        }
    }
    for (int d = 1; d <= dim_cap; ++d) {
        for (auto& [ch, ci] : ni.idx[d]) {
            auto& cell = N.cells[d][ci];
            for (int i = 0; i <= d; ++i) {
                std::vector<int> faced;
                int base_obj;
                if (i == 0) {
                    faced.assign(ch.begin() + 1, ch.end());
                    base_obj = C.morphisms[ch[0]].tgt;
                } else if (i == d) {
                    faced.assign(ch.begin(), ch.end() - 1);
                    base_obj = C.morphisms[ch[0]].src;
                } else {
                    faced = ch;
                    faced[i - 1] = C.compose(ch[i], ch[i - 1]);
                    faced.erase(faced.begin() + i);
                    base_obj = C.morphisms[ch[0]].src;
                }
                cell.faces.push_back(normalize_chain(C, ni, faced, base_obj));
            }
        }
    }
    return N;
}

simpset::SimplexRef chain_ref(const FinCategory& C,
                              const simpset::TruncatedSimplicialSet& N,
                              const std::vector<int>& chain, int base_object) {
    NerveIndex ni;
    ni.idx.resize(N.dim_cap + 1);
    for (int o = 0; o < C.object_count(); ++o) ni.idx[0][{o}] = o;
    for (int d = 1; d <= N.dim_cap; ++d) {
        int next = 0;
        for (const auto& ch : chains(C, d)) {
            bool nondeg = true;
            for (int m : ch)
                if (C.is_identity(m)) nondeg = false;
            if (nondeg) ni.idx[d][ch] = next++;
        }
    }
    return normalize_chain(C, ni, chain, base_object);
}

bool is_groupoid(const FinCategory& C) {
    for (int m = 0; m < C.morphism_count(); ++m)
        if (!C.inverse(m)) return false;
    return true;
}

FinCategory maximal_subgroupoid(const FinCategory& C) {
    std::vector<int> keep;
    std::vector<int> remap(C.morphism_count(), -1);
    for (int m = 0; m < C.morphism_count(); ++m)
        if (C.inverse(m)) {
            remap[m] = static_cast<int>(keep.size());
            keep.push_back(m);
        }
    FinCategory G;
    G.objects = C.objects;
    for (int m : keep) G.morphisms.push_back(C.morphisms[m]);
    G.identity.resize(C.object_count());
    for (int o = 0; o < C.object_count(); ++o) G.identity[o] = remap[C.identity[o]];
    G.table.assign(keep.size(), std::vector<int>(keep.size(), -1));
    for (size_t g = 0; g < keep.size(); ++g)
        for (size_t f = 0; f < keep.size(); ++f)
            if (G.composable(static_cast<int>(g), static_cast<int>(f)))
                G.table[g][f] = remap[C.compose(keep[g], keep[f])];
    return G;
}

FinCategory arrow_category(const FinCategory& C, int n) {
    if (n < 0) throw InputError("arrow_category: n must be >= 0");
    FinCategory A;
    std::vector<std::vector<int>> objs; // chains of length n; n=0 -> single object id
    if (n == 0) {
        for (int o = 0; o < C.object_count(); ++o) objs.push_back({o});
    } else {
        objs = chains(C, n);
    }
    auto chain_obj = [&](const std::vector<int>& ch, int i) {
        // object at position i of the chain
        if (n == 0) return ch[0];
        return i == 0 ? C.morphisms[ch[0]].src : C.morphisms[ch[i - 1]].tgt;
    };
    for (const auto& ch : objs)
        A.objects.push_back(n == 0 ? C.objects[ch[0]] : chain_name(C, ch));

    // ladders: tuples u_0..u_n with u_i ∘ c_i = c'_i ∘ u_{i-1}
    struct Ladder {
        int src_obj, tgt_obj;
        std::vector<int> u;
    };
    std::vector<Ladder> ladders;
    for (int a = 0; a < static_cast<int>(objs.size()); ++a)
        for (int b = 0; b < static_cast<int>(objs.size()); ++b) {
            std::vector<int> u(n + 1, -1);
            auto rec = [&](auto&& self, int i) -> void {
                if (i > n) {
                    ladders.push_back({a, b, u});
                    return;
                }
                for (int m : C.hom(chain_obj(objs[a], i), chain_obj(objs[b], i))) {
                    if (i > 0) {
                        const int lhs = C.compose(m, objs[a][i - 1]);
                        const int rhs = C.compose(objs[b][i - 1], u[i - 1]);
                        if (lhs != rhs) continue;
                    }
                    u[i] = m;
                    self(self, i + 1);
                    u[i] = -1;
                }
            };
            rec(rec, 0);
        }
    for (const auto& l : ladders) {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i <= n; ++i) os << (i ? "|" : "") << C.morphisms[l.u[i]].name;
        os << ":" << l.src_obj << ">" << l.tgt_obj << ")";
        A.morphisms.push_back({os.str(), l.src_obj, l.tgt_obj});
    }
    A.identity.assign(objs.size(), -1);
    for (int m = 0; m < A.morphism_count(); ++m) {
        const auto& l = ladders[m];
        if (l.src_obj == l.tgt_obj) {
            bool all_id = true;
            for (int i = 0; i <= n; ++i)
                if (!C.is_identity(l.u[i])) all_id = false;
            if (all_id) A.identity[l.src_obj] = m;
        }
    }
    A.table.assign(A.morphism_count(), std::vector<int>(A.morphism_count(), -1));
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> lookup;
    for (int m = 0; m < A.morphism_count(); ++m)
        lookup[{{ladders[m].src_obj, ladders[m].tgt_obj}, ladders[m].u}] = m;
    for (int g = 0; g < A.morphism_count(); ++g)
        for (int f = 0; f < A.morphism_count(); ++f) {
            if (ladders[f].tgt_obj != ladders[g].src_obj) continue;
            std::vector<int> comp(n + 1);
            for (int i = 0; i <= n; ++i)
                comp[i] = C.compose(ladders[g].u[i], ladders[f].u[i]);
            A.table[g][f] = lookup.at({{ladders[f].src_obj, ladders[g].tgt_obj}, comp});
        }
    return A;
}

Report Functor::verify() const {
    Report rep;
    const auto& C = *source;
    const auto& D = *target;
    if (static_cast<int>(object_map.size()) != C.object_count() ||
        static_cast<int>(morphism_map.size()) != C.morphism_count()) {
        rep.violations.push_back("functor maps have wrong size");
        return rep;
    }
    for (int m = 0; m < C.morphism_count(); ++m) {
        const auto& mm = C.morphisms[m];
        const auto& dm = D.morphisms[morphism_map[m]];
        if (dm.src != object_map[mm.src] || dm.tgt != object_map[mm.tgt])
            rep.violations.push_back("functor ill-typed on " + mm.name);
    }
    for (int o = 0; o < C.object_count(); ++o)
        if (morphism_map[C.identity[o]] != D.identity[object_map[o]])
            rep.violations.push_back("functor does not preserve identity of " +
                                     C.objects[o]);
    for (int g = 0; g < C.morphism_count(); ++g)
        for (int f = 0; f < C.morphism_count(); ++f)
            if (C.composable(g, f) &&
                morphism_map[C.compose(g, f)] !=
                    D.compose(morphism_map[g], morphism_map[f]))
                rep.violations.push_back("functor does not preserve " +
                                         C.morphisms[g].name + "∘" +
                                         C.morphisms[f].name);
    return rep;
}

bool check_equivalence(const Functor& F) {
    if (!F.verify().ok()) throw InputError("check_equivalence: ill-formed functor");
    const auto& C = *F.source;
    const auto& D = *F.target;
    // fully faithful
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b) {
            const auto dom = C.hom(a, b);
            const auto cod = D.hom(F.object_map[a], F.object_map[b]);
            if (dom.size() != cod.size()) return false;
            std::vector<bool> hit(D.morphism_count(), false);
            for (int m : dom) {
                if (hit[F.morphism_map[m]]) return false;
                hit[F.morphism_map[m]] = true;
            }
        }
    // essentially surjective
    for (int d = 0; d < D.object_count(); ++d) {
        bool found = false;
        for (int a = 0; a < C.object_count() && !found; ++a)
            for (int m : D.hom(F.object_map[a], d))
                if (D.inverse(m)) {
                    found = true;
                    break;
                }
        if (!found) return false;
    }
    return true;
}

simpset::SimplicialMap nerve_map(const Functor& F,
                                 const simpset::TruncatedSimplicialSet& NC,
                                 const simpset::TruncatedSimplicialSet& ND) {
    const auto& C = *F.source;
    const auto& D = *F.target;
    NerveIndex nd;
    nd.idx.resize(ND.dim_cap + 1);
    for (int o = 0; o < D.object_count(); ++o) nd.idx[0][{o}] = o;
    for (int d = 1; d <= ND.dim_cap; ++d) {
        int next = 0;
        for (const auto& ch : chains(D, d)) {
            bool nondeg = true;
            for (int m : ch)
                if (D.is_identity(m)) nondeg = false;
            if (nondeg) nd.idx[d][ch] = next++;
        }
    }
    simpset::SimplicialMap f;
    f.source = &NC;
    f.target = &ND;
    f.assignment.resize(NC.dim_cap + 1);
    for (int o = 0; o < C.object_count(); ++o)
        f.assignment[0].push_back(SimplexRef{0, F.object_map[o], {}});
    for (int d = 1; d <= NC.dim_cap; ++d) {
        for (const auto& ch : chains(C, d)) {
            bool nondeg = true;
            for (int m : ch)
                if (C.is_identity(m)) nondeg = false;
            if (!nondeg) continue;
            std::vector<int> img(ch.size());
            for (size_t i = 0; i < ch.size(); ++i) img[i] = F.morphism_map[ch[i]];
            f.assignment[d].push_back(
                normalize_chain(D, nd, img, D.morphisms[img[0]].src));
        }
    }
    return f;
}

MorphismClassS MorphismClassS::of(const FinCategory& C, const std::vector<int>& ms) {
    MorphismClassS S;
    S.ambient = &C;
    S.member.assign(C.morphism_count(), false);
    for (int id : C.identity) S.member[id] = true;
    for (int m : ms) S.member.at(m) = true;
    return S;
}

MorphismClassS MorphismClassS::identities(const FinCategory& C) { return of(C, {}); }

MorphismClassS MorphismClassS::isos(const FinCategory& C) {
    std::vector<int> ms;
    for (int m = 0; m < C.morphism_count(); ++m)
        if (C.inverse(m)) ms.push_back(m);
    return of(C, ms);
}

OreResult ore_check(const FinCategory& C, const MorphismClassS& S, bool dual) {
    for (int s = 0; s < C.morphism_count(); ++s) {
        if (!S.member[s]) continue;
        for (int f = 0; f < C.morphism_count(); ++f) {
            const bool span = dual ? C.morphisms[s].tgt == C.morphisms[f].tgt
                                   : C.morphisms[s].src == C.morphisms[f].src;
            if (!span) continue;
            bool completed = false;
            for (int s2 = 0; s2 < C.morphism_count() && !completed; ++s2) {
                if (!S.member[s2]) continue;
                for (int f2 = 0; f2 < C.morphism_count() && !completed; ++f2) {
                    if (dual) {
                        // s: b->a in S, f: c->a; want s': d->c in S, f': d->b
                        // with s∘f' = f∘s'
                        if (C.morphisms[s2].tgt != C.morphisms[f].src) continue;
                        if (C.morphisms[f2].tgt != C.morphisms[s].src) continue;
                        if (C.morphisms[f2].src != C.morphisms[s2].src) continue;
                        if (C.compose(s, f2) == C.compose(f, s2)) completed = true;
                    } else {
                        // s: a->b in S, f: a->c; want s': c->d in S, f': b->d
                        // with s'∘f = f'∘s
                        if (C.morphisms[s2].src != C.morphisms[f].tgt) continue;
                        if (C.morphisms[f2].src != C.morphisms[s].tgt) continue;
                        if (C.morphisms[f2].tgt != C.morphisms[s2].tgt) continue;
                        if (C.compose(s2, f) == C.compose(f2, s)) completed = true;
                    }
                }
            }
            if (!completed) return {false, s, f};
        }
    }
    return {};
}

namespace {

struct WordUniverse {
    std::vector<Zigzag> words;
    std::map<Zigzag, int> index;
};

void enumerate_words(const FinCategory& C, const MorphismClassS& S, int x, int y,
                     int cap, long long max_words, WordUniverse& U) {
    Zigzag cur;
    long long seen = 0;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == y) {
            if (++seen > max_words) throw ResourceError("zig-zag word budget exceeded");
            U.index.emplace(cur, static_cast<int>(U.words.size()));
            U.words.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == cap) return;
        for (int m = 0; m < C.morphism_count(); ++m) {
            if (C.morphisms[m].src == at) {
                cur.push_back({false, m});
                self(self, C.morphisms[m].tgt);
                cur.pop_back();
            }
            if (S.member[m] && C.morphisms[m].tgt == at) {
                cur.push_back({true, m});
                self(self, C.morphisms[m].src);
                cur.pop_back();
            }
        }
    };
    rec(rec, x);
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Number of classes (and reps) of words of length <= cap under the bounded
// congruence closure. Shrinking moves generated from every word cover each
// congruence edge whose endpoints both fit in the universe.
std::pair<std::vector<Zigzag>, std::vector<long long>>
saturate(const FinCategory& C, const MorphismClassS& S, const WordUniverse& U,
         int cap) {
    std::vector<int> live;
    for (int i = 0; i < static_cast<int>(U.words.size()); ++i)
        if (static_cast<int>(U.words[i].size()) <= cap) live.push_back(i);
    std::map<int, int> live_pos;
    for (int i = 0; i < static_cast<int>(live.size()); ++i) live_pos[live[i]] = i;
    UF uf(static_cast<int>(live.size()));
    auto unite_words = [&](int wi, const Zigzag& w2) {
        auto it = U.index.find(w2);
        if (it == U.index.end()) return;
        auto lp = live_pos.find(it->second);
        if (lp == live_pos.end()) return;
        uf.unite(live_pos.at(wi), lp->second);
    };
    for (int wi : live) {
        const Zigzag& w = U.words[wi];
        const int n = static_cast<int>(w.size());
        for (int t = 0; t < n; ++t) {
            // drop an identity letter
            if (C.is_identity(w[t].morphism)) {
                Zigzag w2 = w;
                w2.erase(w2.begin() + t);
                unite_words(wi, w2);
            }
            // replace a backward letter by an actual two-sided inverse
            if (w[t].backward) {
                if (const auto inv = C.inverse(w[t].morphism)) {
                    Zigzag w2 = w;
                    w2[t] = {false, *inv};
                    unite_words(wi, w2);
                }
            }
            if (t + 1 >= n) continue;
            const auto &a = w[t], &b = w[t + 1];
            // compose adjacent forward letters
            if (!a.backward && !b.backward) {
                Zigzag w2 = w;
                w2[t] = {false, C.compose(b.morphism, a.morphism)};
                w2.erase(w2.begin() + t + 1);
                unite_words(wi, w2);
            }
            // compose adjacent backward letters when the composite stays in S
            if (a.backward && b.backward) {
                const int u = C.compose(a.morphism, b.morphism);
                if (u >= 0 && S.member[u]) {
                    Zigzag w2 = w;
                    w2[t] = {true, u};
                    w2.erase(w2.begin() + t + 1);
                    unite_words(wi, w2);
                }
            }
            // absorb a backward letter into a neighbouring forward letter:
            // [fwd m][bwd s] ~ [fwd m'] whenever s∘m' = m, and
            // [bwd s][fwd m] ~ [fwd m'] whenever m'∘s = m
            if (!a.backward && b.backward) {
                for (int m2 = 0; m2 < C.morphism_count(); ++m2)
                    if (C.composable(b.morphism, m2) &&
                        C.compose(b.morphism, m2) == a.morphism) {
                        Zigzag w2 = w;
                        w2[t] = {false, m2};
                        w2.erase(w2.begin() + t + 1);
                        unite_words(wi, w2);
                    }
            }
            if (a.backward && !b.backward) {
                for (int m2 = 0; m2 < C.morphism_count(); ++m2)
                    if (C.composable(m2, a.morphism) &&
                        C.compose(m2, a.morphism) == b.morphism) {
                        Zigzag w2 = w;
                        w2[t] = {false, m2};
                        w2.erase(w2.begin() + t + 1);
                        unite_words(wi, w2);
                    }
            }
            // cancel s s^-1 and s^-1 s
            if (a.morphism == b.morphism && a.backward != b.backward &&
                S.member[a.morphism]) {
                Zigzag w2 = w;
                w2.erase(w2.begin() + t, w2.begin() + t + 2);
                unite_words(wi, w2);
            }
        }
    }
    std::map<int, std::pair<Zigzag, long long>> cls; // root -> (best rep, size)
    auto better = [](const Zigzag& a, const Zigzag& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    for (int i = 0; i < static_cast<int>(live.size()); ++i) {
        const int r = uf.find(i);
        const Zigzag& w = U.words[live[i]];
        auto it = cls.find(r);
        if (it == cls.end())
            cls.emplace(r, std::make_pair(w, 1LL));
        else {
            if (better(w, it->second.first)) it->second.first = w;
            it->second.second++;
        }
    }
    std::vector<Zigzag> reps;
    std::vector<long long> sizes;
    std::vector<std::pair<Zigzag, long long>> sorted;
    for (auto& [r, v] : cls) sorted.push_back(v);
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        return better(a.first, b.first);
    });
    for (auto& [w, s] : sorted) {
        reps.push_back(w);
        sizes.push_back(s);
    }
    return {reps, sizes};
}

} // namespace

GzHomResult gz_localize_hom(const FinCategory& C, const MorphismClassS& S, int x,
                            int y, int word_cap, long long max_words) {
    if (word_cap < 1) throw InputError("gz_localize_hom: word_cap must be >= 1");
    GzHomResult res;
    WordUniverse U;
    try {
        enumerate_words(C, S, x, y, word_cap, max_words, U);
    } catch (const ResourceError& e) {
        res.status = GzHomResult::Status::Unknown;
        res.note = e.what();
        return res;
    }
    auto full = saturate(C, S, U, word_cap);
    auto prev = saturate(C, S, U, word_cap - 1);
    if (full.first.size() != prev.first.size()) {
        res.status = GzHomResult::Status::Unknown;
        res.note = "class count not stabilized between caps " +
                   std::to_string(word_cap - 1) + " and " + std::to_string(word_cap);
        return res;
    }
    res.status = GzHomResult::Status::Stabilized;
    res.class_reps = std::move(full.first);
    res.class_sizes = std::move(full.second);
    return res;
}

} // namespace htt::fincat
