#include "htt/sspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace htt::sspace {

using fincat::FinCategory;
using simpset::SimplexRef;
using simpset::TruncatedSimplicialSet;

Report TotalSimplicialSet::verify() const {
    Report rep;
    auto in_range = [&](int m, int e) { return m >= 0 && m <= cap && e >= 0 &&
                                               e < sizes[m]; };
    for (int m = 1; m <= cap; ++m)
        for (int i = 0; i <= m; ++i)
            for (int e = 0; e < sizes[m]; ++e)
                if (!in_range(m - 1, face[m][i][e]))
                    rep.violations.push_back("face out of range");
    for (int m = 0; m < cap; ++m)
        for (int j = 0; j <= m; ++j)
            for (int e = 0; e < sizes[m]; ++e)
                if (!in_range(m + 1, degen[m][j][e]))
                    rep.violations.push_back("degeneracy out of range");
    if (!rep.ok()) return rep;
    for (int m = 2; m <= cap; ++m)
        for (int e = 0; e < sizes[m]; ++e)
            for (int j = 1; j <= m; ++j)
                for (int i = 0; i < j; ++i)
                    if (face[m - 1][i][face[m][j][e]] !=
                        face[m - 1][j - 1][face[m][i][e]])
                        rep.violations.push_back("d_i d_j identity fails");
    for (int m = 0; m < cap; ++m)
        for (int e = 0; e < sizes[m]; ++e)
            for (int j = 0; j <= m; ++j)
                if (face[m + 1][j][degen[m][j][e]] != e ||
                    face[m + 1][j + 1][degen[m][j][e]] != e)
                    rep.violations.push_back("d s identity fails");
    return rep;
}

NormalizedTotal normalize(const TotalSimplicialSet& T) {
    NormalizedTotal out;
    out.ss = TruncatedSimplicialSet(T.cap);
    out.cell_elem.resize(T.cap + 1);
    out.elem_ref.resize(T.cap + 1);
    for (int m = 0; m <= T.cap; ++m) out.elem_ref[m].resize(T.sizes[m]);
    for (int e = 0; e < T.sizes[0]; ++e) {
        out.elem_ref[0][e] = SimplexRef{0, e, {}};
        out.cell_elem[0].push_back(e);
        std::string nm = (T.names.empty() || T.names[0].empty())
                             ? "v" + std::to_string(e)
                             : T.names[0][e];
        out.ss.cells[0].push_back({std::move(nm), {}});
    }
    for (int m = 1; m <= T.cap; ++m) {
        for (int e = 0; e < T.sizes[m]; ++e) {
            int dj = -1;
            for (int j = 0; j < m; ++j)
                if (T.degen[m - 1][j][T.face[m][j][e]] == e) {
                    dj = j;
                    break;
                }
            if (dj >= 0) {
                out.elem_ref[m][e] = simpset::apply_degeneracy(
                    out.elem_ref[m - 1][T.face[m][dj][e]], dj);
                continue;
            }
            const int ci = static_cast<int>(out.ss.cells[m].size());
            simpset::Simplex sx;
            sx.name = (static_cast<int>(T.names.size()) > m &&
                       static_cast<int>(T.names[m].size()) > e)
                          ? T.names[m][e]
                          : "c" + std::to_string(m) + "_" + std::to_string(e);
            for (int i = 0; i <= m; ++i)
                sx.faces.push_back(out.elem_ref[m - 1][T.face[m][i][e]]);
            out.ss.cells[m].push_back(std::move(sx));
            out.cell_elem[m].push_back(e);
            out.elem_ref[m][e] = SimplexRef{m, ci, {}};
        }
    }
    return out;
}

Report verify_bisimplicial(const TruncatedBisimplicialSet& W) {
    Report rep;
    for (int n = 0; n <= W.cap_n; ++n) {
        const auto col = column(W, n);
        const auto r = col.verify();
        for (const auto& v : r.violations)
            rep.violations.push_back("column " + std::to_string(n) + ": " + v);
    }
    for (int m = 0; m <= W.cap_m; ++m) {
        for (int n = 2; n <= W.cap_n; ++n)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (W.hface[n - 1][m][i][W.hface[n][m][j][e]] !=
                            W.hface[n - 1][m][j - 1][W.hface[n][m][i][e]])
                            rep.violations.push_back("horizontal d_i d_j fails");
        for (int n = 0; n < W.cap_n; ++n)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int j = 0; j <= n; ++j)
                    if (W.hface[n + 1][m][j][W.hdeg[n][m][j][e]] != e ||
                        W.hface[n + 1][m][j + 1][W.hdeg[n][m][j][e]] != e)
                        rep.violations.push_back("horizontal d s fails");
    }
    for (int n = 1; n <= W.cap_n; ++n)
        for (int m = 1; m <= W.cap_m; ++m)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= m; ++j)
                        if (W.vface[n - 1][m][j][W.hface[n][m][i][e]] !=
                            W.hface[n][m - 1][i][W.vface[n][m][j][e]])
                            rep.violations.push_back("h/v face commutation fails");
    for (int n = 0; n < W.cap_n; ++n)
        for (int m = 0; m < W.cap_m; ++m)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= m; ++j)
                        if (W.vdeg[n + 1][m][j][W.hdeg[n][m][i][e]] !=
                            W.hdeg[n][m + 1][i][W.vdeg[n][m][j][e]])
                            rep.violations.push_back(
                                "h/v degeneracy commutation fails");
    for (int n = 1; n <= W.cap_n; ++n)
        for (int m = 0; m < W.cap_m; ++m)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= m; ++j)
                        if (W.vdeg[n - 1][m][j][W.hface[n][m][i][e]] !=
                            W.hface[n][m + 1][i][W.vdeg[n][m][j][e]])
                            rep.violations.push_back("hface/vdeg commutation fails");
    for (int n = 0; n < W.cap_n; ++n)
        for (int m = 1; m <= W.cap_m; ++m)
            for (int e = 0; e < W.size(n, m); ++e)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= m; ++j)
                        if (W.vface[n + 1][m][j][W.hdeg[n][m][i][e]] !=
                            W.hdeg[n][m - 1][i][W.vface[n][m][j][e]])
                            rep.violations.push_back("hdeg/vface commutation fails");
    return rep;
}

TotalSimplicialSet column(const TruncatedBisimplicialSet& W, int n) {
    TotalSimplicialSet T;
    T.cap = W.cap_m;
    T.sizes.resize(W.cap_m + 1);
    T.face.resize(W.cap_m + 1);
    T.degen.resize(W.cap_m + 1);
    T.names.resize(W.cap_m + 1);
    for (int m = 0; m <= W.cap_m; ++m) {
        T.sizes[m] = W.size(n, m);
        if (!W.names.empty() && !W.names[n].empty()) T.names[m] = W.names[n][m];
        if (m >= 1) T.face[m] = W.vface[n][m];
        if (m < W.cap_m) T.degen[m] = W.vdeg[n][m];
    }
    return T;
}

TotalSimplicialSet row(const TruncatedBisimplicialSet& W, int m) {
    TotalSimplicialSet T;
    T.cap = W.cap_n;
    T.sizes.resize(W.cap_n + 1);
    T.face.resize(W.cap_n + 1);
    T.degen.resize(W.cap_n + 1);
    T.names.resize(W.cap_n + 1);
    for (int n = 0; n <= W.cap_n; ++n) {
        T.sizes[n] = W.size(n, m);
        if (!W.names.empty() && !W.names[n].empty()) T.names[n] = W.names[n][m];
        if (n >= 1) T.face[n] = W.hface[n][m];
        if (n < W.cap_n) T.degen[n] = W.hdeg[n][m];
    }
    return T;
}

// ---------------------------------------------------------------------------
// classifying diagram

namespace {

// Grid at level (n,m): the row-0 chain plus m tuples of vertical isos; the
// remaining rows are determined by conjugation.
struct Grid {
    int n = 0, m = 0;
    int obj0 = 0;                         // base object when n == 0
    std::vector<int> chain;               // n morphisms
    std::vector<std::vector<int>> tuples; // m tuples of n+1 isos

    std::vector<int> encode() const {
        std::vector<int> key;
        key.reserve(2 + chain.size() + tuples.size() * (n + 1));
        key.push_back(n == 0 ? obj0 : -1);
        for (int c : chain) key.push_back(c);
        for (const auto& t : tuples)
            for (int u : t) key.push_back(u);
        return key;
    }
};

int grid_row0_object(const FinCategory& C, const Grid& g, int col) {
    if (g.n == 0) return g.obj0;
    return col == 0 ? C.morphisms[g.chain[0]].src : C.morphisms[g.chain[col - 1]].tgt;
}

std::vector<int> grid_row_chain(const FinCategory& C,
                                const std::vector<std::optional<int>>& inv,
                                const Grid& g, int r) {
    std::vector<int> ch = g.chain;
    for (int j = 0; j < r; ++j) {
        const auto& t = g.tuples[j];
        std::vector<int> next(ch.size());
        for (size_t i = 0; i < ch.size(); ++i) {
            const int left = C.compose(t[i + 1], ch[i]);
            next[i] = C.compose(left, *inv[t[i]]);
        }
        ch = std::move(next);
    }
    return ch;
}

Grid grid_hface(const FinCategory& C, const Grid& g, int i) {
    Grid out;
    out.n = g.n - 1;
    out.m = g.m;
    if (g.n == 1) {
        out.obj0 = i == 0 ? C.morphisms[g.chain[0]].tgt : C.morphisms[g.chain[0]].src;
    } else {
        if (i == 0)
            out.chain.assign(g.chain.begin() + 1, g.chain.end());
        else if (i == g.n)
            out.chain.assign(g.chain.begin(), g.chain.end() - 1);
        else {
            out.chain = g.chain;
            out.chain[i - 1] = C.compose(g.chain[i], g.chain[i - 1]);
            out.chain.erase(out.chain.begin() + i);
        }
    }
    for (const auto& t : g.tuples) {
        std::vector<int> u = t;
        u.erase(u.begin() + i);
        out.tuples.push_back(std::move(u));
    }
    return out;
}

Grid grid_hdeg(const FinCategory& C, const Grid& g, int i) {
    Grid out;
    out.n = g.n + 1;
    out.m = g.m;
    out.chain = g.chain;
    const int obj_i = grid_row0_object(C, g, i);
    out.chain.insert(out.chain.begin() + i, C.identity[obj_i]);
    for (const auto& t : g.tuples) {
        std::vector<int> u = t;
        u.insert(u.begin() + i + 1, t[i]);
        out.tuples.push_back(std::move(u));
    }
    return out;
}

Grid grid_vface(const FinCategory& C, const std::vector<std::optional<int>>& inv,
                const Grid& g, int j) {
    Grid out;
    out.n = g.n;
    out.m = g.m - 1;
    if (j == 0) {
        if (g.n == 0)
            out.obj0 = C.morphisms[g.tuples[0][0]].tgt;
        else
            out.chain = grid_row_chain(C, inv, g, 1);
        out.tuples.assign(g.tuples.begin() + 1, g.tuples.end());
    } else if (j == g.m) {
        out.obj0 = g.obj0;
        out.chain = g.chain;
        out.tuples.assign(g.tuples.begin(), g.tuples.end() - 1);
    } else {
        out.obj0 = g.obj0;
        out.chain = g.chain;
        out.tuples = g.tuples;
        for (int i = 0; i <= g.n; ++i)
            out.tuples[j - 1][i] = C.compose(g.tuples[j][i], g.tuples[j - 1][i]);
        out.tuples.erase(out.tuples.begin() + j);
    }
    return out;
}

Grid grid_vdeg(const FinCategory& C, const std::vector<std::optional<int>>& inv,
               const Grid& g, int j) {
    Grid out = g;
    out.m = g.m + 1;
    std::vector<int> idt(g.n + 1);
    if (g.n == 0) {
        int o = g.obj0;
        for (int r = 0; r < j; ++r) o = C.morphisms[g.tuples[r][0]].tgt;
        idt[0] = C.identity[o];
    } else {
        const auto ch = grid_row_chain(C, inv, g, j);
        idt[0] = C.identity[C.morphisms[ch[0]].src];
        for (int i = 1; i <= g.n; ++i) idt[i] = C.identity[C.morphisms[ch[i - 1]].tgt];
    }
    out.tuples.insert(out.tuples.begin() + j, std::move(idt));
    return out;
}

} // namespace

ClassifyingDiagram classifying_diagram(const FinCategory& C, int cap_n, int cap_m,
                                       long long budget) {
    if (cap_n < 0 || cap_m < 0)
        throw InputError("classifying_diagram: caps must be >= 0");
    ClassifyingDiagram out;
    out.category = &C;
    auto& W = out.W;
    W.cap_n = cap_n;
    W.cap_m = cap_m;
    const int N = cap_n, M = cap_m;
    W.sizes.assign(N + 1, std::vector<int>(M + 1, 0));
    W.names.assign(N + 1, std::vector<std::vector<std::string>>(M + 1));
    W.hface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    W.hdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    W.vface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    W.vdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    out.index.assign(N + 1, std::vector<std::map<std::vector<int>, int>>(M + 1));
    out.grids.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));

    std::vector<std::optional<int>> inv(C.morphism_count());
    std::vector<std::vector<int>> isos_from(C.object_count());
    for (int m = 0; m < C.morphism_count(); ++m) {
        inv[m] = C.inverse(m);
        if (inv[m]) isos_from[C.morphisms[m].src].push_back(m);
    }

    std::vector<std::vector<std::vector<Grid>>> grids(N + 1);
    for (int n = 0; n <= N; ++n) grids[n].resize(M + 1);

    long long count = 0;
    for (int n = 0; n <= N; ++n) {
        if (n == 0) {
            for (int o = 0; o < C.object_count(); ++o) {
                Grid g;
                g.n = 0;
                g.obj0 = o;
                grids[0][0].push_back(g);
            }
        } else {
            for (const auto& ch : fincat::chains(C, n)) {
                Grid g;
                g.n = n;
                g.chain = ch;
                grids[n][0].push_back(g);
            }
        }
        count += static_cast<long long>(grids[n][0].size());
        if (count > budget) throw ResourceError("classifying diagram budget exceeded");
        for (int m = 1; m <= M; ++m) {
            for (const auto& g : grids[n][m - 1]) {
                std::vector<int> row_objs(n + 1);
                if (n == 0) {
                    int o = g.obj0;
                    for (int r = 0; r < g.m; ++r) o = C.morphisms[g.tuples[r][0]].tgt;
                    row_objs[0] = o;
                } else {
                    const auto ch = grid_row_chain(C, inv, g, g.m);
                    row_objs[0] = C.morphisms[ch[0]].src;
                    for (int i = 1; i <= n; ++i)
                        row_objs[i] = C.morphisms[ch[i - 1]].tgt;
                }
                std::vector<int> tup(n + 1, -1);
                auto rec = [&](auto&& self, int i) -> void {
                    if (i > n) {
                        Grid ng = g;
                        ng.m = g.m + 1;
                        ng.tuples.push_back(tup);
                        grids[n][m].push_back(std::move(ng));
                        if (++count > budget)
                            throw ResourceError("classifying diagram budget exceeded");
                        return;
                    }
                    for (int u : isos_from[row_objs[i]]) {
                        tup[i] = u;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);
            }
        }
    }

    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) {
            W.sizes[n][m] = static_cast<int>(grids[n][m].size());
            for (int e = 0; e < W.sizes[n][m]; ++e) {
                auto key = grids[n][m][e].encode();
                out.index[n][m][key] = e;
                out.grids[n][m].push_back(std::move(key));
            }
        }

    auto lookup = [&](int n, int m, const Grid& g) {
        return out.index[n][m].at(g.encode());
    };
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) {
            const int sz = W.sizes[n][m];
            if (n >= 1) {
                W.hface[n][m].assign(n + 1, std::vector<int>(sz));
                for (int e = 0; e < sz; ++e)
                    for (int i = 0; i <= n; ++i)
                        W.hface[n][m][i][e] =
                            lookup(n - 1, m, grid_hface(C, grids[n][m][e], i));
            }
            if (n < N) {
                W.hdeg[n][m].assign(n + 1, std::vector<int>(sz));
                for (int e = 0; e < sz; ++e)
                    for (int i = 0; i <= n; ++i)
                        W.hdeg[n][m][i][e] =
                            lookup(n + 1, m, grid_hdeg(C, grids[n][m][e], i));
            }
            if (m >= 1) {
                W.vface[n][m].assign(m + 1, std::vector<int>(sz));
                for (int e = 0; e < sz; ++e)
                    for (int j = 0; j <= m; ++j)
                        W.vface[n][m][j][e] =
                            lookup(n, m - 1, grid_vface(C, inv, grids[n][m][e], j));
            }
            if (m < M) {
                W.vdeg[n][m].assign(m + 1, std::vector<int>(sz));
                for (int e = 0; e < sz; ++e)
                    for (int j = 0; j <= m; ++j)
                        W.vdeg[n][m][j][e] =
                            lookup(n, m + 1, grid_vdeg(C, inv, grids[n][m][e], j));
            }
            for (int e = 0; e < sz; ++e) {
                const auto& g = grids[n][m][e];
                std::ostringstream os;
                if (n == 0)
                    os << C.objects[g.obj0];
                else
                    for (size_t i = 0; i < g.chain.size(); ++i)
                        os << (i ? "|" : "") << C.morphisms[g.chain[i]].name;
                for (const auto& t : g.tuples) {
                    os << "/";
                    for (size_t i = 0; i < t.size(); ++i)
                        os << (i ? "," : "") << C.morphisms[t[i]].name;
                }
                W.names[n][m].push_back(os.str());
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Segal comparison

namespace {

// iterated horizontal edge extraction: alpha^i pulls a level-k element to the
// edge spanning columns (i-1, i)
int h_edge(const TruncatedBisimplicialSet& W, int k, int m, int e, int i) {
    int cur = e;
    for (int l = k; l > i; --l) cur = W.hface[l][m][l][cur];
    for (int t = 0; t < i - 1; ++t) {
        const int level = i - t;
        cur = W.hface[level][m][0][cur];
    }
    return cur;
}

struct FiberPower {
    TotalSimplicialSet total;
    std::vector<std::map<std::vector<int>, int>> index; // per level
    std::vector<std::vector<std::vector<int>>> tuples;  // per level, per element
};

FiberPower fiber_power(const TruncatedBisimplicialSet& W, int k) {
    FiberPower F;
    F.total.cap = W.cap_m;
    F.total.sizes.resize(W.cap_m + 1);
    F.total.face.resize(W.cap_m + 1);
    F.total.degen.resize(W.cap_m + 1);
    F.total.names.resize(W.cap_m + 1);
    F.index.resize(W.cap_m + 1);
    F.tuples.resize(W.cap_m + 1);
    for (int m = 0; m <= W.cap_m; ++m) {
        // matching tuples (e_1..e_k): d^h_0(e_i) = d^h_1(e_{i+1})
        std::vector<int> cur(k);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                F.index[m][cur] = static_cast<int>(F.tuples[m].size());
                F.tuples[m].push_back(cur);
                return;
            }
            for (int e = 0; e < W.size(1, m); ++e) {
                if (i > 0 && W.hface[1][m][1][e] != W.hface[1][m][0][cur[i - 1]])
                    continue;
                cur[i] = e;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        F.total.sizes[m] = static_cast<int>(F.tuples[m].size());
    }
    for (int m = 1; m <= W.cap_m; ++m) {
        F.total.face[m].assign(m + 1, std::vector<int>(F.total.sizes[m]));
        for (int e = 0; e < F.total.sizes[m]; ++e)
            for (int j = 0; j <= m; ++j) {
                std::vector<int> img(k);
                for (int i = 0; i < k; ++i)
                    img[i] = W.vface[1][m][j][F.tuples[m][e][i]];
                F.total.face[m][j][e] = F.index[m - 1].at(img);
            }
    }
    for (int m = 0; m < W.cap_m; ++m) {
        F.total.degen[m].assign(m + 1, std::vector<int>(F.total.sizes[m]));
        for (int e = 0; e < F.total.sizes[m]; ++e)
            for (int j = 0; j <= m; ++j) {
                std::vector<int> img(k);
                for (int i = 0; i < k; ++i)
                    img[i] = W.vdeg[1][m][j][F.tuples[m][e][i]];
                F.total.degen[m][j][e] = F.index[m + 1].at(img);
            }
    }
    return F;
}

} // namespace

SegalReport segal_check(const TruncatedBisimplicialSet& W) {
    if (W.cap_n < 2) throw InputError("segal_check: cap_n must be >= 2");
    SegalReport rep;
    for (int k = 2; k <= W.cap_n; ++k) {
        SegalReport::Level lvl;
        lvl.k = k;
        const auto F = fiber_power(W, k);
        bool bijective = true;
        std::string witness;
        std::vector<std::vector<int>> map_at(W.cap_m + 1);
        for (int m = 0; m <= W.cap_m && bijective; ++m) {
            std::vector<bool> hit(F.total.sizes[m], false);
            map_at[m].resize(W.size(k, m));
            if (W.size(k, m) != F.total.sizes[m]) {
                bijective = false;
                witness = "bidegree (" + std::to_string(k) + "," + std::to_string(m) +
                          ") sizes " + std::to_string(W.size(k, m)) + " vs " +
                          std::to_string(F.total.sizes[m]);
            }
            for (int e = 0; e < W.size(k, m) && bijective; ++e) {
                std::vector<int> tup(k);
                for (int i = 1; i <= k; ++i) tup[i - 1] = h_edge(W, k, m, e, i);
                auto it = F.index[m].find(tup);
                if (it == F.index[m].end()) {
                    bijective = false;
                    witness = "segal image missing";
                    break;
                }
                map_at[m][e] = it->second;
                if (hit[it->second]) {
                    bijective = false;
                    witness = "segal map not injective at bidegree (" +
                              std::to_string(k) + "," + std::to_string(m) + ")";
                    break;
                }
                hit[it->second] = true;
            }
        }
        if (bijective) {
            lvl.verdict = SegalVerdict::Bijection;
            rep.levels.push_back(lvl);
            continue;
        }
        // battery: compare invariants of W_k and the fiber power, and the
        // induced map on components
        const auto wk = normalize(column(W, k));
        const auto fp = normalize(F.total);
        const auto cmp = simpset::compare_invariants(wk.ss, fp.ss);
        bool battery = cmp.pass();
        if (battery) {
            // induced pi0 map must be a bijection
            const auto p_w = simpset::pi0(wk.ss);
            const auto p_f = simpset::pi0(fp.ss);
            std::vector<int> img(p_w.count, -1);
            std::vector<bool> used(p_f.count, false);
            for (int e = 0; e < W.size(k, 0); ++e) {
                std::vector<int> tup(k);
                for (int i = 1; i <= k; ++i) tup[i - 1] = h_edge(W, k, 0, e, i);
                auto it = F.index[0].find(tup);
                if (it == F.index[0].end()) {
                    battery = false;
                    break;
                }
                const int cw = p_w.component[e];
                const int cf = p_f.component[it->second];
                if (img[cw] < 0) {
                    img[cw] = cf;
                    if (used[cf]) battery = false;
                    used[cf] = true;
                } else if (img[cw] != cf) {
                    battery = false;
                }
            }
            for (bool u : used) battery = battery && u;
        }
        if (battery) {
            lvl.verdict = SegalVerdict::Battery;
            lvl.witness = witness;
        } else {
            lvl.verdict = SegalVerdict::Fail;
            lvl.witness = witness.empty() ? cmp.detail : witness;
        }
        rep.levels.push_back(lvl);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// mapping spaces, homotopy category, heq, completeness

namespace {

// vertically constant elements over x at each level of column 0
std::vector<int> degenerate_tower(const TruncatedBisimplicialSet& W, int x) {
    std::vector<int> tower(W.cap_m + 1);
    tower[0] = x;
    for (int m = 0; m < W.cap_m; ++m) tower[m + 1] = W.vdeg[0][m][0][tower[m]];
    return tower;
}

} // namespace

MappingSpace mapping_space(const TruncatedBisimplicialSet& W, int x, int y) {
    if (x < 0 || x >= W.size(0, 0) || y < 0 || y >= W.size(0, 0))
        throw InputError("mapping_space: objects out of range");
    const auto tx = degenerate_tower(W, x);
    const auto ty = degenerate_tower(W, y);
    MappingSpace out;
    out.x = x;
    out.y = y;
    out.level_elements.resize(W.cap_m + 1);
    TotalSimplicialSet T;
    T.cap = W.cap_m;
    T.sizes.resize(W.cap_m + 1);
    T.face.resize(W.cap_m + 1);
    T.degen.resize(W.cap_m + 1);
    T.names.resize(W.cap_m + 1);
    std::vector<std::vector<int>> local(W.cap_m + 1); // W element -> local id
    for (int m = 0; m <= W.cap_m; ++m) {
        local[m].assign(W.size(1, m), -1);
        for (int e = 0; e < W.size(1, m); ++e)
            if (W.hface[1][m][1][e] == tx[m] && W.hface[1][m][0][e] == ty[m]) {
                local[m][e] = static_cast<int>(out.level_elements[m].size());
                out.level_elements[m].push_back(e);
                if (!W.names.empty() && !W.names[1].empty() &&
                    !W.names[1][m].empty())
                    T.names[m].push_back(W.names[1][m][e]);
            }
        T.sizes[m] = static_cast<int>(out.level_elements[m].size());
    }
    for (int m = 1; m <= W.cap_m; ++m) {
        T.face[m].assign(m + 1, std::vector<int>(T.sizes[m]));
        for (int le = 0; le < T.sizes[m]; ++le)
            for (int j = 0; j <= m; ++j) {
                const int img = W.vface[1][m][j][out.level_elements[m][le]];
                T.face[m][j][le] = local[m - 1][img];
            }
    }
    for (int m = 0; m < W.cap_m; ++m) {
        T.degen[m].assign(m + 1, std::vector<int>(T.sizes[m]));
        for (int le = 0; le < T.sizes[m]; ++le)
            for (int j = 0; j <= m; ++j) {
                const int img = W.vdeg[1][m][j][out.level_elements[m][le]];
                T.degen[m][j][le] = local[m + 1][img];
            }
    }
    out.carrier = normalize(T).ss;
    return out;
}

int HoCategory::morphism_of(int x, int y, int comp) const {
    for (int m = 0; m < static_cast<int>(mor_key.size()); ++m)
        if (mor_key[m][0] == x && mor_key[m][1] == y && mor_key[m][2] == comp)
            return m;
    return -1;
}

int HoCategory::morphism_of_element(const TruncatedBisimplicialSet& W, int e) const {
    const int x = W.hface[1][0][1][e];
    const int y = W.hface[1][0][0][e];
    const auto& elems = pair_vertex_element[x][y];
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == e)
            return morphism_of(x, y, pair_vertex_component[x][y][i]);
    return -1;
}

HoCategory homotopy_category(const TruncatedBisimplicialSet& W) {
    if (W.cap_n < 2) throw InputError("homotopy_category: cap_n must be >= 2");
    const auto seg = segal_check(W);
    if (!seg.pass())
        throw InputError("homotopy_category: Segal check failed, composition undefined");
    const int nobj = W.size(0, 0);
    HoCategory H;
    H.pair_vertex_component.assign(nobj, std::vector<std::vector<int>>(nobj));
    H.pair_vertex_element.assign(nobj, std::vector<std::vector<int>>(nobj));
    for (int x = 0; x < nobj; ++x) {
        const std::string xn = (!W.names.empty() && !W.names[0].empty() &&
                                !W.names[0][0].empty())
                                   ? W.names[0][0][x]
                                   : "o" + std::to_string(x);
        H.cat.objects.push_back(xn);
    }
    // hom-sets
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y) {
            const auto ms = mapping_space(W, x, y);
            const auto p = simpset::pi0(ms.carrier);
            H.pair_vertex_component[x][y] = p.component;
            H.pair_vertex_element[x][y] = ms.level_elements[0];
            for (int c = 0; c < p.count; ++c) {
                H.mor_key.push_back({x, y, c});
                H.cat.morphisms.push_back(
                    {H.cat.objects[x] + ">" + H.cat.objects[y] + "#" +
                         std::to_string(c),
                     x, y});
            }
        }
    // identities
    H.cat.identity.assign(nobj, -1);
    for (int x = 0; x < nobj; ++x) {
        const int idelem = W.hdeg[0][0][0][x];
        const int m = H.morphism_of_element(W, idelem);
        if (m < 0) throw InputError("homotopy_category: identity not in map(x,x)");
        H.cat.identity[x] = m;
    }
    // composition via Segal lifts in W_{2,0}; all lifts of all representative
    // pairs must agree
    const int nm = static_cast<int>(H.cat.morphisms.size());
    H.cat.table.assign(nm, std::vector<int>(nm, -1));
    std::map<std::pair<int, int>, std::vector<int>> lift_of;
    for (int k = 0; k < W.size(2, 0); ++k) {
        const int e1 = h_edge(W, 2, 0, k, 1);
        const int e2 = h_edge(W, 2, 0, k, 2);
        lift_of[{e1, e2}].push_back(k);
    }
    for (int gm = 0; gm < nm; ++gm)
        for (int fm = 0; fm < nm; ++fm) {
            if (!H.cat.composable(gm, fm)) continue;
            const auto [x, y0, cf] = std::array<int, 3>{
                H.mor_key[fm][0], H.mor_key[fm][1], H.mor_key[fm][2]};
            const auto [y1, z, cg] = std::array<int, 3>{
                H.mor_key[gm][0], H.mor_key[gm][1], H.mor_key[gm][2]};
            int result = -1;
            bool found = false;
            const auto& fverts = H.pair_vertex_element[x][y0];
            const auto& fcomps = H.pair_vertex_component[x][y0];
            const auto& gverts = H.pair_vertex_element[y1][z];
            const auto& gcomps = H.pair_vertex_component[y1][z];
            for (size_t fi = 0; fi < fverts.size(); ++fi) {
                if (fcomps[fi] != cf) continue;
                for (size_t gi = 0; gi < gverts.size(); ++gi) {
                    if (gcomps[gi] != cg) continue;
                    auto it = lift_of.find({fverts[fi], gverts[gi]});
                    if (it == lift_of.end()) continue;
                    for (int k : it->second) {
                        const int comp_elem = W.hface[2][0][1][k];
                        const int rm = H.morphism_of_element(W, comp_elem);
                        if (rm < 0)
                            throw InputError("homotopy_category: composite escapes "
                                             "its mapping space");
                        if (found && rm != result)
                            throw InputError(
                                "homotopy_category: composite depends on the lift");
                        result = rm;
                        found = true;
                    }
                }
            }
            if (!found)
                throw InputError("homotopy_category: no Segal lift for a "
                                 "composable pair, composition undefined");
            H.cat.table[gm][fm] = result;
        }
    const auto rep = fincat::verify_category(H.cat);
    if (!rep.ok())
        throw InputError("homotopy_category: " + rep.violations[0]);
    return H;
}

HeqResult heq(const TruncatedBisimplicialSet& W, const HoCategory& ho) {
    HeqResult out;
    const auto col1 = normalize(column(W, 1));
    out.w1_components = simpset::pi0(col1.ss);
    out.element_component.assign(W.size(1, 0), -1);
    for (int e = 0; e < W.size(1, 0); ++e)
        out.element_component[e] = out.w1_components.component[e];
    out.component_heq.assign(out.w1_components.count, true);
    out.uniform.assign(out.w1_components.count, true);
    std::vector<bool> seen(out.w1_components.count, false);
    std::vector<bool> first_val(out.w1_components.count, false);
    for (int e = 0; e < W.size(1, 0); ++e) {
        const int mor = ho.morphism_of_element(W, e);
        bool invertible = false;
        if (mor >= 0) invertible = ho.cat.inverse(mor).has_value();
        const int c = out.element_component[e];
        if (!seen[c]) {
            seen[c] = true;
            first_val[c] = invertible;
        } else if (first_val[c] != invertible) {
            out.uniform[c] = false;
        }
        if (!invertible) out.component_heq[c] = false;
    }
    return out;
}

HeqResult heq(const TruncatedBisimplicialSet& W) {
    return heq(W, homotopy_category(W));
}

namespace {

// sub-simplicial-set of column 1 spanned by the heq components
struct HeqPart {
    TotalSimplicialSet total;
    std::vector<std::vector<int>> level_elements; // local -> W[1][m] element
    std::vector<std::vector<int>> local;          // W element -> local or -1
};

HeqPart heq_part(const TruncatedBisimplicialSet& W, const HeqResult& hq) {
    HeqPart out;
    out.total.cap = W.cap_m;
    out.total.sizes.resize(W.cap_m + 1);
    out.total.face.resize(W.cap_m + 1);
    out.total.degen.resize(W.cap_m + 1);
    out.total.names.resize(W.cap_m + 1);
    out.level_elements.resize(W.cap_m + 1);
    out.local.resize(W.cap_m + 1);
    for (int m = 0; m <= W.cap_m; ++m) {
        out.local[m].assign(W.size(1, m), -1);
        for (int e = 0; e < W.size(1, m); ++e) {
            int v = e;
            for (int l = m; l >= 1; --l) v = W.vface[1][l][0][v];
            if (!hq.component_heq[hq.element_component[v]]) continue;
            out.local[m][e] = static_cast<int>(out.level_elements[m].size());
            out.level_elements[m].push_back(e);
            if (!W.names.empty() && !W.names[1].empty() && !W.names[1][m].empty())
                out.total.names[m].push_back(W.names[1][m][e]);
        }
        out.total.sizes[m] = static_cast<int>(out.level_elements[m].size());
    }
    for (int m = 1; m <= W.cap_m; ++m) {
        out.total.face[m].assign(m + 1, std::vector<int>(out.total.sizes[m]));
        for (int le = 0; le < out.total.sizes[m]; ++le)
            for (int j = 0; j <= m; ++j)
                out.total.face[m][j][le] =
                    out.local[m - 1][W.vface[1][m][j][out.level_elements[m][le]]];
    }
    for (int m = 0; m < W.cap_m; ++m) {
        out.total.degen[m].assign(m + 1, std::vector<int>(out.total.sizes[m]));
        for (int le = 0; le < out.total.sizes[m]; ++le)
            for (int j = 0; j <= m; ++j)
                out.total.degen[m][j][le] =
                    out.local[m + 1][W.vdeg[1][m][j][out.level_elements[m][le]]];
    }
    return out;
}

} // namespace

CompletenessResult completeness_check(const TruncatedBisimplicialSet& W) {
    CompletenessResult out;
    HoCategory ho;
    try {
        ho = homotopy_category(W);
    } catch (const InputError& e) {
        throw InputError(std::string("completeness_check: ") + e.what());
    }
    const auto hq = heq(W, ho);
    const int nobj = W.size(0, 0);
    // discrete-objects reading: components of W_0 must match objects up to
    // homotopy equivalence in Ho(W)
    std::vector<int> cls(nobj, -1);
    int nclasses = 0;
    for (int x = 0; x < nobj; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = nclasses;
        for (int y = x + 1; y < nobj; ++y) {
            if (cls[y] >= 0) continue;
            bool equiv = false;
            for (int m = 0; m < static_cast<int>(ho.mor_key.size()); ++m)
                if (ho.mor_key[m][0] == x && ho.mor_key[m][1] == y &&
                    ho.cat.inverse(m))
                    equiv = true;
            if (equiv) cls[y] = nclasses;
        }
        ++nclasses;
    }
    const auto w0 = normalize(column(W, 0));
    const auto p0 = simpset::pi0(w0.ss);
    if (p0.count != nclasses) {
        out.verdict = Completeness::Incomplete;
        out.witness = "W_0 has " + std::to_string(p0.count) +
                      " components but objects fall into " +
                      std::to_string(nclasses) + " equivalence classes";
        return out;
    }
    const auto hp = heq_part(W, hq);
    const auto wh = normalize(hp.total);
    const auto cmp = simpset::compare_invariants(w0.ss, wh.ss);
    if (!cmp.pass()) {
        out.verdict = Completeness::Incomplete;
        out.witness = "battery mismatch between W_0 and W_heq: " + cmp.detail;
        return out;
    }
    // exact certificate 1: s_0 a levelwise bijection onto the heq part
    bool bij = true;
    for (int m = 0; m <= W.cap_m && bij; ++m) {
        if (W.size(0, m) != hp.total.sizes[m]) bij = false;
        for (int e = 0; e < W.size(0, m) && bij; ++e) {
            const int img = W.hdeg[0][m][0][e];
            if (hp.local[m][img] < 0) bij = false;
        }
    }
    if (bij) {
        out.verdict = Completeness::Complete;
        out.witness = "s_0 is a levelwise bijection onto the heq part";
        return out;
    }
    // exact certificate 2: both sides are nerves of groupoids; decide by
    // equivalence along the s_0 functor
    const int d = std::min(3, W.cap_m);
    if (d >= 2 && lifting::is_nerve_of_groupoid(w0.ss, d) &&
        lifting::is_nerve_of_groupoid(wh.ss, d)) {
        const auto r0 = lifting::reconstruct_category(w0.ss, d);
        const auto rh = lifting::reconstruct_category(wh.ss, d);
        if (r0.ok && rh.ok) {
            fincat::Functor s0;
            s0.source = &r0.category;
            s0.target = &rh.category;
            s0.object_map.resize(r0.category.object_count());
            for (int x = 0; x < nobj; ++x) {
                const int img = W.hdeg[0][0][0][x];
                s0.object_map[x] = hp.local[0][img];
            }
            s0.morphism_map.assign(r0.category.morphism_count(), -1);
            for (int x = 0; x < nobj; ++x)
                s0.morphism_map[r0.category.identity[x]] =
                    rh.category.identity[s0.object_map[x]];
            // nondegenerate vertical edges of W_0 map by s_0^h
            for (int ec = 0; ec < w0.ss.cell_count(1); ++ec) {
                const int elem = w0.cell_elem[1][ec];
                const int img = W.hdeg[0][1][0][elem];
                const int li = hp.local[1][img];
                if (li < 0) { s0.morphism_map.clear(); break; }
                const auto ref = wh.elem_ref[1][li];
                const int mor = ref.degenerate()
                                    ? rh.category.identity[ref.base]
                                    : rh.edge_morphism[ref.base];
                const int src_mor = r0.edge_morphism[ec];
                s0.morphism_map[src_mor] = mor;
            }
            if (!s0.morphism_map.empty() && s0.verify().ok()) {
                if (fincat::check_equivalence(s0)) {
                    out.verdict = Completeness::Complete;
                    out.witness = "s_0 is an equivalence of reconstructed groupoids";
                } else {
                    out.verdict = Completeness::Incomplete;
                    out.witness = "s_0 is not an equivalence of groupoids";
                }
                return out;
            }
        }
    }
    out.verdict = Completeness::Unknown;
    out.witness = "battery passed but no exact certificate applies";
    return out;
}

// ---------------------------------------------------------------------------
// Segal precategories and discretization

bool is_segal_precategory(const TruncatedBisimplicialSet& X) {
    for (int m = 1; m <= X.cap_m; ++m) {
        if (X.size(0, m) != X.size(0, m - 1)) return false;
        for (int j = 0; j <= m; ++j) {
            std::vector<bool> hit(X.size(0, m - 1), false);
            for (int e = 0; e < X.size(0, m); ++e) {
                const int img = X.vface[0][m][j][e];
                if (hit[img]) return false;
                hit[img] = true;
            }
        }
    }
    return true;
}

TruncatedBisimplicialSet discretize(const TruncatedBisimplicialSet& W) {
    TruncatedBisimplicialSet R;
    R.cap_n = W.cap_n;
    R.cap_m = W.cap_m;
    const int N = W.cap_n, M = W.cap_m;
    // vertically constant towers in column 0
    std::vector<std::set<int>> constant(M + 1);
    for (int x = 0; x < W.size(0, 0); ++x) {
        const auto t = degenerate_tower(W, x);
        for (int m = 0; m <= M; ++m) constant[m].insert(t[m]);
    }
    // keep elements whose horizontal vertices are all constant
    std::vector<std::vector<std::vector<int>>> keep(N + 1),
        local(N + 1); // local index maps
    for (int n = 0; n <= N; ++n) {
        keep[n].resize(M + 1);
        local[n].resize(M + 1);
        for (int m = 0; m <= M; ++m) {
            local[n][m].assign(W.size(n, m), -1);
            for (int e = 0; e < W.size(n, m); ++e) {
                bool ok = true;
                for (int i = 0; i <= n && ok; ++i) {
                    int cur = e;
                    for (int l = n; l > i; --l) cur = W.hface[l][m][l][cur];
                    for (int l = i; l > 0; --l) cur = W.hface[l][m][0][cur];
                    if (!constant[m].count(cur)) ok = false;
                }
                if (ok) {
                    local[n][m][e] = static_cast<int>(keep[n][m].size());
                    keep[n][m].push_back(e);
                }
            }
        }
    }
    R.sizes.assign(N + 1, std::vector<int>(M + 1, 0));
    R.names.assign(N + 1, std::vector<std::vector<std::string>>(M + 1));
    R.hface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    R.hdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    R.vface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    R.vdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) {
            const int sz = static_cast<int>(keep[n][m].size());
            R.sizes[n][m] = sz;
            if (!W.names.empty() && !W.names[n].empty() && !W.names[n][m].empty())
                for (int le = 0; le < sz; ++le)
                    R.names[n][m].push_back(W.names[n][m][keep[n][m][le]]);
            auto remap = [&](int nn, int mm, int img, const char* what) {
                const int li = local[nn][mm][img];
                if (li < 0)
                    throw InputError(std::string("discretize: boundary escapes (") +
                                     what + ")");
                return li;
            };
            if (n >= 1) {
                R.hface[n][m].assign(n + 1, std::vector<int>(sz));
                for (int le = 0; le < sz; ++le)
                    for (int i = 0; i <= n; ++i)
                        R.hface[n][m][i][le] = remap(
                            n - 1, m, W.hface[n][m][i][keep[n][m][le]], "hface");
            }
            if (n < N) {
                R.hdeg[n][m].assign(n + 1, std::vector<int>(sz));
                for (int le = 0; le < sz; ++le)
                    for (int i = 0; i <= n; ++i)
                        R.hdeg[n][m][i][le] =
                            remap(n + 1, m, W.hdeg[n][m][i][keep[n][m][le]], "hdeg");
            }
            if (m >= 1) {
                R.vface[n][m].assign(m + 1, std::vector<int>(sz));
                for (int le = 0; le < sz; ++le)
                    for (int j = 0; j <= m; ++j)
                        R.vface[n][m][j][le] = remap(
                            n, m - 1, W.vface[n][m][j][keep[n][m][le]], "vface");
            }
            if (m < M) {
                R.vdeg[n][m].assign(m + 1, std::vector<int>(sz));
                for (int le = 0; le < sz; ++le)
                    for (int j = 0; j <= m; ++j)
                        R.vdeg[n][m][j][le] =
                            remap(n, m + 1, W.vdeg[n][m][j][keep[n][m][le]], "vdeg");
            }
        }
    return R;
}

// ---------------------------------------------------------------------------
// maps and the Dwyer-Kan check

Report BisimplicialMap::verify() const {
    Report rep;
    const auto& W = *source;
    const auto& Z = *target;
    if (W.cap_n != Z.cap_n || W.cap_m != Z.cap_m) {
        rep.violations.push_back("caps differ");
        return rep;
    }
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m) {
            if (static_cast<int>(assign[n][m].size()) != W.size(n, m)) {
                rep.violations.push_back("assignment size mismatch");
                return rep;
            }
            for (int e = 0; e < W.size(n, m); ++e)
                if (assign[n][m][e] < 0 || assign[n][m][e] >= Z.size(n, m))
                    rep.violations.push_back("assignment out of range");
        }
    if (!rep.ok()) return rep;
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m)
            for (int e = 0; e < W.size(n, m); ++e) {
                if (n >= 1)
                    for (int i = 0; i <= n; ++i)
                        if (assign[n - 1][m][W.hface[n][m][i][e]] !=
                            Z.hface[n][m][i][assign[n][m][e]])
                            rep.violations.push_back("hface naturality fails");
                if (n < W.cap_n)
                    for (int i = 0; i <= n; ++i)
                        if (assign[n + 1][m][W.hdeg[n][m][i][e]] !=
                            Z.hdeg[n][m][i][assign[n][m][e]])
                            rep.violations.push_back("hdeg naturality fails");
                if (m >= 1)
                    for (int j = 0; j <= m; ++j)
                        if (assign[n][m - 1][W.vface[n][m][j][e]] !=
                            Z.vface[n][m][j][assign[n][m][e]])
                            rep.violations.push_back("vface naturality fails");
                if (m < W.cap_m)
                    for (int j = 0; j <= m; ++j)
                        if (assign[n][m + 1][W.vdeg[n][m][j][e]] !=
                            Z.vdeg[n][m][j][assign[n][m][e]])
                            rep.violations.push_back("vdeg naturality fails");
            }
    return rep;
}

DkResult dk_check(const BisimplicialMap& f) {
    if (!f.verify().ok())
        throw InputError("dk_check: input is not a bisimplicial map");
    const auto& W = *f.source;
    const auto& Z = *f.target;
    DkResult out;
    const auto segW = segal_check(W);
    const auto segZ = segal_check(Z);
    if (!segW.pass() || !segZ.pass())
        throw InputError("dk_check: Segal precondition fails");
    HoCategory hw = homotopy_category(W);
    HoCategory hz = homotopy_category(Z);

    bool all_bijections = true;
    for (int x = 0; x < W.size(0, 0); ++x)
        for (int y = 0; y < W.size(0, 0); ++y) {
            const auto mw = mapping_space(W, x, y);
            const auto mz =
                mapping_space(Z, f.assign[0][0][x], f.assign[0][0][y]);
            // induced levelwise map
            bool bij = true;
            for (int m = 0; m <= W.cap_m; ++m) {
                if (mw.level_elements[m].size() != mz.level_elements[m].size())
                    bij = false;
                std::set<int> image;
                for (int we : mw.level_elements[m])
                    image.insert(f.assign[1][m][we]);
                if (image.size() != mw.level_elements[m].size()) bij = false;
                for (int ze : mz.level_elements[m])
                    if (!image.count(ze)) bij = false;
            }
            if (bij) continue;
            all_bijections = false;
            const auto cmp = simpset::compare_invariants(mw.carrier, mz.carrier);
            if (!cmp.pass()) {
                out.verdict = DkVerdict::NotEquivalent;
                out.detail = "mapping space (" + std::to_string(x) + "," +
                             std::to_string(y) + "): " + cmp.detail;
                return out;
            }
        }
    // homotopy category functor
    fincat::Functor hf;
    hf.source = &hw.cat;
    hf.target = &hz.cat;
    hf.object_map.resize(hw.cat.object_count());
    for (int x = 0; x < W.size(0, 0); ++x) hf.object_map[x] = f.assign[0][0][x];
    hf.morphism_map.resize(hw.cat.morphism_count());
    for (int m = 0; m < hw.cat.morphism_count(); ++m) {
        const auto [x, y, c] = hw.mor_key[m];
        // image of any representative vertex
        int rep = -1;
        const auto& verts = hw.pair_vertex_element[x][y];
        const auto& comps = hw.pair_vertex_component[x][y];
        for (size_t i = 0; i < verts.size(); ++i)
            if (comps[i] == c) {
                rep = verts[i];
                break;
            }
        const int img = f.assign[1][0][rep];
        const int zm = hz.morphism_of_element(Z, img);
        if (zm < 0) {
            out.verdict = DkVerdict::Unknown;
            out.detail = "image morphism escapes its mapping space";
            return out;
        }
        hf.morphism_map[m] = zm;
    }
    if (!hf.verify().ok()) {
        out.verdict = DkVerdict::Unknown;
        out.detail = "induced Ho functor is not well defined at this truncation";
        return out;
    }
    if (!fincat::check_equivalence(hf)) {
        out.verdict = DkVerdict::NotEquivalent;
        out.detail = "Ho(W) -> Ho(Z) is not an equivalence of categories";
        return out;
    }
    if (all_bijections) {
        out.verdict = DkVerdict::Equivalent;
        out.detail = "levelwise mapping-space bijections and Ho equivalence";
    } else {
        out.verdict = DkVerdict::Unknown;
        out.detail = "battery passed without an exact mapping-space witness";
    }
    return out;
}

BisimplicialMap classifying_diagram_map(const fincat::Functor& F,
                                        const ClassifyingDiagram& NC,
                                        const ClassifyingDiagram& ND) {
    if (!F.verify().ok())
        throw InputError("classifying_diagram_map: ill-formed functor");
    BisimplicialMap f;
    f.source = &NC.W;
    f.target = &ND.W;
    const int N = NC.W.cap_n, M = NC.W.cap_m;
    f.assign.assign(N + 1, std::vector<std::vector<int>>(M + 1));
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) {
            f.assign[n][m].resize(NC.W.size(n, m));
            for (int e = 0; e < NC.W.size(n, m); ++e) {
                // keys: [obj-or--1, chain..., tuples...]
                std::vector<int> key = NC.grids[n][m][e];
                if (n == 0) {
                    key[0] = F.object_map[key[0]];
                    for (size_t i = 1; i < key.size(); ++i)
                        key[i] = F.morphism_map[key[i]];
                } else {
                    for (size_t i = 1; i < key.size(); ++i)
                        key[i] = F.morphism_map[key[i]];
                }
                f.assign[n][m][e] = ND.index[n][m].at(key);
            }
        }
    return f;
}

BisimplicialMap identity_map(const TruncatedBisimplicialSet& W) {
    BisimplicialMap f;
    f.source = &W;
    f.target = &W;
    f.assign.assign(W.cap_n + 1, std::vector<std::vector<int>>(W.cap_m + 1));
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m) {
            f.assign[n][m].resize(W.size(n, m));
            std::iota(f.assign[n][m].begin(), f.assign[n][m].end(), 0);
        }
    return f;
}

} // namespace htt::sspace
