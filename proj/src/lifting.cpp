#include "htt/lifting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace htt::lifting {

using simpset::SimplexRef;
using simpset::TruncatedSimplicialSet;

namespace {

// Faces of every m-simplex (degenerate included), in n_simplices order.
struct FaceTable {
    std::vector<SimplexRef> simplices;
    std::vector<std::vector<SimplexRef>> faces;
};

FaceTable face_table(const TruncatedSimplicialSet& X, int m) {
    FaceTable t;
    t.simplices = n_simplices(X, m);
    t.faces.resize(t.simplices.size());
    if (m == 0) return t;
    for (size_t s = 0; s < t.simplices.size(); ++s) {
        t.faces[s].reserve(m + 1);
        for (int i = 0; i <= m; ++i)
            t.faces[s].push_back(X.face(t.simplices[s], i));
    }
    return t;
}

bool compatible(const TruncatedSimplicialSet& X, const HornProblem& p) {
    for (int j = 1; j <= p.n; ++j) {
        if (j == p.k) continue;
        for (int i = 0; i < j; ++i) {
            if (i == p.k) continue;
            if (X.face(p.faces[j], i) != X.face(p.faces[i], j - 1)) return false;
        }
    }
    return true;
}

} // namespace

std::vector<HornProblem> enumerate_horns_reference(const TruncatedSimplicialSet& X,
                                                   int n, int k) {
    if (n < 1 || n > X.dim_cap) throw InputError("enumerate_horns: n out of range");
    if (k < 0 || k > n) throw InputError("enumerate_horns: k out of range");
    const auto cands = n_simplices(X, n - 1);
    std::vector<HornProblem> out;
    std::vector<int> slot(n + 1, -1);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > n) {
            HornProblem p{n, k, {}};
            p.faces.resize(n + 1);
            for (int i = 0; i <= n; ++i)
                if (i != k) p.faces[i] = cands[slot[i]];
            if (compatible(X, p)) out.push_back(std::move(p));
            return;
        }
        if (j == k) {
            self(self, j + 1);
            return;
        }
        for (int c = 0; c < static_cast<int>(cands.size()); ++c) {
            slot[j] = c;
            self(self, j + 1);
        }
        slot[j] = -1;
    };
    rec(rec, 0);
    return out;
}

std::vector<HornProblem> enumerate_horns(const TruncatedSimplicialSet& X, int n,
                                         int k) {
    if (n < 1 || n > X.dim_cap) throw InputError("enumerate_horns: n out of range");
    if (k < 0 || k > n) throw InputError("enumerate_horns: k out of range");
    const auto t = face_table(X, n - 1);
    const int nc = static_cast<int>(t.simplices.size());

    std::vector<int> slots; // slot order: ascending, skipping k
    for (int i = 0; i <= n; ++i)
        if (i != k) slots.push_back(i);

    // Index candidates by their face at a fixed position, for the first
    // constraint a later slot must satisfy.
    // For slot j (not first), the constraint against the first chosen slot i0:
    //   d_{i0}(x_j) = d_{j-1}(x_{i0})        (i0 < j)
    const int i0 = slots[0];
    std::map<SimplexRef, std::vector<int>> by_face_i0;
    if (n >= 2)
        for (int c = 0; c < nc; ++c) by_face_i0[t.faces[c][i0]].push_back(c);

    std::vector<HornProblem> out;
    std::vector<int> chosen(n + 1, -1);
    auto rec = [&](auto&& self, size_t si) -> void {
        if (si == slots.size()) {
            HornProblem p{n, k, {}};
            p.faces.resize(n + 1);
            for (int i = 0; i <= n; ++i)
                if (i != k) p.faces[i] = t.simplices[chosen[i]];
            out.push_back(std::move(p));
            return;
        }
        const int j = slots[si];
        if (si == 0) {
            for (int c = 0; c < nc; ++c) {
                chosen[j] = c;
                self(self, si + 1);
            }
            chosen[j] = -1;
            return;
        }
        const SimplexRef want = t.faces[chosen[i0]][j - 1];
        auto it = by_face_i0.find(want);
        if (it == by_face_i0.end()) return;
        for (int c : it->second) {
            bool ok = true;
            for (size_t pi = 1; pi < si && ok; ++pi) {
                const int i = slots[pi];
                if (t.faces[c][i] != t.faces[chosen[i]][j - 1]) ok = false;
            }
            if (!ok) continue;
            chosen[j] = c;
            self(self, si + 1);
        }
        chosen[j] = -1;
    };
    rec(rec, 0);
    return out;
}

std::vector<SimplexRef> fillers(const TruncatedSimplicialSet& X,
                                const HornProblem& p) {
    std::vector<SimplexRef> out;
    for (const auto& z : n_simplices(X, p.n)) {
        bool ok = true;
        for (int i = 0; i <= p.n && ok; ++i) {
            if (i == p.k) continue;
            if (X.face(z, i) != p.faces[i]) ok = false;
        }
        if (ok) out.push_back(z);
    }
    return out;
}

LiftReport analyze(const TruncatedSimplicialSet& X, int d, Exec exec) {
    if (d < 1 || d > X.dim_cap) throw InputError("analyze: d out of range");
    LiftReport rep;
    rep.d = d;
    for (int n = 1; n <= d; ++n) {
        // filler lookup: key the faces-except-k tuple of every n-simplex
        const auto ft = face_table(X, n);
        for (int k = 0; k <= n; ++k) {
            auto problems = enumerate_horns(X, n, k);
            std::map<std::vector<SimplexRef>, long long> filler_count;
            for (const auto& fs : ft.faces) {
                std::vector<SimplexRef> key;
                key.reserve(n);
                for (int i = 0; i <= n; ++i)
                    if (i != k) key.push_back(fs[i]);
                ++filler_count[key];
            }
            LiftLine line{n, k, static_cast<long long>(problems.size()), 0, 0};
            std::vector<long long> counts(problems.size(), 0);
            const int np = static_cast<int>(problems.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
            for (int pi = 0; pi < np; ++pi) {
                std::vector<SimplexRef> key;
                key.reserve(n);
                for (int i = 0; i <= n; ++i)
                    if (i != k) key.push_back(problems[pi].faces[i]);
                auto it = filler_count.find(key);
                counts[pi] = it == filler_count.end() ? 0 : it->second;
            }
            const bool inner = k > 0 && k < n;
            for (int pi = 0; pi < np; ++pi) {
                if (counts[pi] == 0) {
                    ++line.unfilled;
                    if (!rep.kan_witness) rep.kan_witness = problems[pi];
                }
                if (counts[pi] > 1) ++line.multifilled;
                if (inner && n >= 2 && counts[pi] != 1 && !rep.inner_witness)
                    rep.inner_witness = problems[pi];
            }
            if (line.unfilled > 0) {
                rep.kan = false;
                if (inner) rep.quasicategory = false;
            }
            if (n >= 2 && (line.unfilled > 0 || line.multifilled > 0)) {
                rep.all_unique = false;
                if (inner) rep.inner_unique = false;
            }
            rep.lines.push_back(line);
        }
    }
    (void)exec;
    return rep;
}

LiftReport is_kan(const TruncatedSimplicialSet& X, int d) { return analyze(X, d); }
LiftReport is_quasicategory(const TruncatedSimplicialSet& X, int d) {
    return analyze(X, d);
}
bool is_nerve_of_groupoid(const TruncatedSimplicialSet& X, int d) {
    const auto rep = analyze(X, d);
    return rep.nerve_of_groupoid();
}
bool is_nerve_of_category(const TruncatedSimplicialSet& X, int d) {
    const auto rep = analyze(X, d);
    return rep.nerve_of_category();
}

Reconstruction reconstruct_category(const TruncatedSimplicialSet& X, int d) {
    Reconstruction out;
    if (d < 2 || d > X.dim_cap) {
        out.detail = "reconstruction needs 2 <= d <= dim_cap";
        return out;
    }
    const auto rep = analyze(X, d);
    if (!rep.nerve_of_category()) {
        out.detail = "inner horns not uniquely filled";
        return out;
    }
    auto& C = out.category;
    for (int v = 0; v < X.cell_count(0); ++v) C.objects.push_back(X.cells[0][v].name);
    // morphisms: identities (one per vertex), then nondegenerate edges
    C.identity.resize(C.objects.size());
    for (int v = 0; v < X.cell_count(0); ++v) {
        C.identity[v] = static_cast<int>(C.morphisms.size());
        C.morphisms.push_back({"id_" + C.objects[v], v, v});
    }
    out.edge_morphism.resize(X.cell_count(1));
    for (int e = 0; e < X.cell_count(1); ++e) {
        const auto& ed = X.cells[1][e];
        out.edge_morphism[e] = static_cast<int>(C.morphisms.size());
        C.morphisms.push_back({ed.name, ed.faces[1].base, ed.faces[0].base});
    }
    auto edge_ref = [&](int m) -> SimplexRef {
        // morphism index -> 1-simplex of X
        const int nv = X.cell_count(0);
        if (m < nv) return simpset::apply_degeneracy(SimplexRef{0, m, {}}, 0);
        return SimplexRef{1, m - nv, {}};
    };
    auto ref_morphism = [&](const SimplexRef& r) -> int {
        if (r.degenerate()) return C.identity[r.base];
        return out.edge_morphism[r.base];
    };
    const int nm = static_cast<int>(C.morphisms.size());
    C.table.assign(nm, std::vector<int>(nm, -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (!C.composable(g, f)) continue;
            HornProblem p{2, 1, {}};
            p.faces.resize(3);
            p.faces[0] = edge_ref(g);
            p.faces[2] = edge_ref(f);
            const auto zs = fillers(X, p);
            if (zs.size() != 1) {
                out.detail = "composite filler not unique for " +
                             C.morphisms[g].name + "∘" + C.morphisms[f].name;
                return out;
            }
            C.table[g][f] = ref_morphism(X.face(zs[0], 1));
        }
    const auto vr = fincat::verify_category(C);
    if (!vr.ok()) {
        out.detail = "reconstructed table fails category laws: " + vr.violations[0];
        return out;
    }
    // round-trip: build the explicit map nerve(C) -> X by iterated unique
    // filling and require it to be an isomorphism up to d
    const auto N = fincat::nerve(C, d);
    simpset::SimplicialMap iso;
    iso.source = &N;
    iso.target = &X;
    iso.assignment.resize(d + 1);
    for (int v = 0; v < X.cell_count(0); ++v)
        iso.assignment[0].push_back(SimplexRef{0, v, {}});
    if (d >= 1) {
        // nerve edge order follows chains(C, 1) filtered to non-identities
        std::vector<int> edge_to_mor;
        for (const auto& ch : fincat::chains(C, 1))
            if (!C.is_identity(ch[0])) edge_to_mor.push_back(ch[0]);
        for (int e = 0; e < N.cell_count(1); ++e)
            iso.assignment[1].push_back(edge_ref(edge_to_mor[e]));
    }
    for (int n = 2; n <= d; ++n) {
        for (int c = 0; c < N.cell_count(n); ++c) {
            const SimplexRef r{n, c, {}};
            HornProblem p{n, 1, {}};
            p.faces.resize(n + 1);
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                if (i == 1) continue;
                const auto fr = N.face(r, i);
                if (fr.base_dim >= static_cast<int>(iso.assignment.size()) ||
                    iso.assignment[fr.base_dim].empty())
                    ok = false;
                else
                    p.faces[i] = iso.apply(fr);
            }
            if (!ok) {
                out.detail = "round-trip: missing lower image";
                return out;
            }
            const auto zs = fillers(X, p);
            if (zs.size() != 1) {
                out.detail = "round-trip: filler not unique for " + N.cells[n][c].name;
                return out;
            }
            if (X.face(zs[0], 1) != iso.apply(N.face(r, 1))) {
                out.detail = "round-trip: d_1 face mismatch for " + N.cells[n][c].name;
                return out;
            }
            iso.assignment[n].push_back(zs[0]);
        }
        // images at this dimension must be nondegenerate and distinct
        std::vector<SimplexRef> imgs = iso.assignment[n];
        std::sort(imgs.begin(), imgs.end());
        for (const auto& im : imgs)
            if (im.degenerate()) {
                out.detail = "round-trip: degenerate image at dim " + std::to_string(n);
                return out;
            }
        if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) {
            out.detail = "round-trip: images not injective at dim " + std::to_string(n);
            return out;
        }
    }
    for (int n = 0; n <= d; ++n)
        if (N.cell_count(n) != X.cell_count(n)) {
            out.detail = "nerve round-trip cell count mismatch at dim " +
                         std::to_string(n);
            return out;
        }
    if (!iso.verify().ok()) {
        out.detail = "round-trip map does not commute with faces";
        return out;
    }
    out.ok = true;
    return out;
}

std::string format_report(const LiftReport& rep) {
    std::ostringstream os;
    for (const auto& l : rep.lines)
        os << l.n << " " << l.k << " " << l.total << " " << l.unfilled << " "
           << l.multifilled << "\n";
    return os.str();
}

} // namespace htt::lifting
