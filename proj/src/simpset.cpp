#include "htt/simpset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "htt/smith.hpp"

namespace htt::simpset {

SimplexRef apply_degeneracy(const SimplexRef& r, int j) {
    if (j < 0 || j > r.dim())
        throw InputError("degeneracy index out of range");
    SimplexRef out{r.base_dim, r.base, {}};
    out.word.reserve(r.word.size() + 1);
    size_t t = 0;
    int jj = j;
    // s_j s_i = s_{i+1} s_j for j <= i: bubble j past larger-or-equal entries.
    while (t < r.word.size() && jj <= r.word[t]) {
        out.word.push_back(r.word[t] + 1);
        ++t;
    }
    out.word.push_back(jj);
    for (; t < r.word.size(); ++t) out.word.push_back(r.word[t]);
    return out;
}

SimplexRef TruncatedSimplicialSet::face(const SimplexRef& r, int i) const {
    if (i < 0 || i > r.dim() || r.dim() < 1)
        throw InputError("face index out of range");
    std::vector<int> prefix; // surviving outer degeneracies, outermost first
    int ii = i;
    size_t t = 0;
    for (; t < r.word.size(); ++t) {
        const int j = r.word[t];
        if (ii == j || ii == j + 1) {
            // d_i s_j = id
            SimplexRef out{r.base_dim, r.base,
                           DegeneracyWord(r.word.begin() + t + 1, r.word.end())};
            for (auto p = prefix.rbegin(); p != prefix.rend(); ++p)
                out = apply_degeneracy(out, *p);
            return out;
        }
        if (ii < j) {
            prefix.push_back(j - 1); // d_i s_j = s_{j-1} d_i
        } else {
            prefix.push_back(j); // d_i s_j = s_j d_{i-1}
            --ii;
        }
    }
    SimplexRef out = cells[r.base_dim][r.base].faces[ii];
    for (auto p = prefix.rbegin(); p != prefix.rend(); ++p)
        out = apply_degeneracy(out, *p);
    return out;
}

std::vector<SimplexRef> n_simplices(const TruncatedSimplicialSet& X, int n) {
    if (n < 0 || n > X.dim_cap)
        throw InputError("n_simplices: dimension exceeds dim_cap");
    std::vector<SimplexRef> out;
    for (int m = n; m >= 0; --m) {
        if (X.cells[m].empty()) continue;
        const int k = n - m; // word length
        // strictly decreasing k-subsets of {0..n-1}, lexicographic
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int next_max) -> void {
            if (static_cast<int>(cur.size()) == k) {
                words.push_back(cur);
                return;
            }
            for (int v = next_max; v >= k - 1 - static_cast<int>(cur.size()); --v) {
                cur.push_back(v);
                self(self, v - 1);
                cur.pop_back();
            }
        };
        rec(rec, n - 1);
        for (int c = 0; c < static_cast<int>(X.cells[m].size()); ++c)
            for (const auto& w : words) out.push_back(SimplexRef{m, c, w});
    }
    return out;
}

std::string ref_name(const TruncatedSimplicialSet& X, const SimplexRef& r) {
    std::ostringstream os;
    os << X.cells[r.base_dim][r.base].name;
    if (!r.word.empty()) {
        os << "[";
        for (size_t i = 0; i < r.word.size(); ++i)
            os << (i ? "," : "") << r.word[i];
        os << "]";
    }
    return os.str();
}

namespace {

std::string subset_name(const std::vector<int>& vs) {
    std::ostringstream os;
    bool wide = false;
    for (int v : vs)
        if (v > 9) wide = true;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (wide && i) os << "_";
        os << vs[i];
    }
    return os.str();
}

// Builds the subcomplex of Delta[n] spanned by the given vertex subsets.
TruncatedSimplicialSet from_subsets(int n, int dim_cap,
                                    const std::vector<std::vector<int>>& subsets) {
    int top = 0;
    for (const auto& s : subsets) top = std::max<int>(top, static_cast<int>(s.size()) - 1);
    const int cap = dim_cap < 0 ? top : dim_cap;
    if (cap < top) throw InputError("dim_cap below top simplex dimension");
    TruncatedSimplicialSet X(cap);
    std::map<std::vector<int>, int> index;
    auto bydim = std::vector<std::vector<std::vector<int>>>(top + 1);
    for (const auto& s : subsets) bydim[s.size() - 1].push_back(s);
    for (auto& v : bydim) std::sort(v.begin(), v.end());
    for (int d = 0; d <= top; ++d) {
        for (const auto& s : bydim[d]) {
            Simplex sx;
            sx.name = subset_name(s);
            if (d >= 1) {
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> f = s;
                    f.erase(f.begin() + i);
                    auto it = index.find(f);
                    if (it == index.end())
                        throw InputError("face subset missing from complex");
                    sx.faces.push_back(SimplexRef{d - 1, it->second, {}});
                }
            }
            index[s] = static_cast<int>(X.cells[d].size());
            X.cells[d].push_back(std::move(sx));
        }
    }
    (void)n;
    return X;
}

void all_subsets(int n, int max_size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (!cur.empty() && static_cast<int>(cur.size()) <= max_size)
            out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (int v = from; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

TruncatedSimplicialSet standard_simplex(int n, int dim_cap) {
    if (n < 0) throw InputError("standard_simplex: n must be >= 0");
    std::vector<std::vector<int>> subsets;
    all_subsets(n, n + 1, subsets);
    return from_subsets(n, dim_cap < 0 ? n : dim_cap, subsets);
}

TruncatedSimplicialSet boundary(int n, int dim_cap) {
    if (n < 0) throw InputError("boundary: n must be >= 0");
    if (n == 0) {
        // the empty simplicial set, a first-class value
        return TruncatedSimplicialSet(std::max(0, dim_cap));
    }
    std::vector<std::vector<int>> subsets;
    all_subsets(n, n, subsets); // everything except the top cell
    return from_subsets(n, dim_cap < 0 ? n - 1 : dim_cap, subsets);
}

TruncatedSimplicialSet horn(int n, int k, int dim_cap) {
    if (n < 1) throw InputError("horn: n must be >= 1");
    if (k < 0 || k > n) throw InputError("horn: k out of range");
    std::vector<std::vector<int>> all;
    all_subsets(n, n, all);
    std::vector<std::vector<int>> kept;
    for (const auto& s : all) {
        // keep S iff it misses some vertex other than k
        bool ok = false;
        for (int v = 0; v <= n && !ok; ++v)
            if (v != k && !std::binary_search(s.begin(), s.end(), v)) ok = true;
        if (ok) kept.push_back(s);
    }
    return from_subsets(n, dim_cap < 0 ? n - 1 : dim_cap, kept);
}

TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a,
                                      const TruncatedSimplicialSet& b) {
    TruncatedSimplicialSet X(std::max(a.dim_cap, b.dim_cap));
    for (int d = 0; d <= a.dim_cap; ++d)
        for (const auto& s : a.cells[d]) {
            Simplex t = s;
            t.name = "l." + t.name;
            X.cells[d].push_back(std::move(t));
        }
    for (int d = 0; d <= b.dim_cap; ++d)
        for (const auto& s : b.cells[d]) {
            Simplex t = s;
            t.name = "r." + t.name;
            for (auto& f : t.faces) f.base += a.cell_count(f.base_dim);
            X.cells[d].push_back(std::move(t));
        }
    return X;
}

Report verify_identities(const TruncatedSimplicialSet& X) {
    Report rep;
    if (static_cast<int>(X.cells.size()) != X.dim_cap + 1) {
        rep.violations.push_back("cells vector does not match dim_cap");
        return rep;
    }
    for (int d = 0; d <= X.dim_cap; ++d) {
        for (int c = 0; c < static_cast<int>(X.cells[d].size()); ++c) {
            const auto& sx = X.cells[d][c];
            if (d >= 1 && static_cast<int>(sx.faces.size()) != d + 1) {
                rep.violations.push_back("cell " + sx.name + " has wrong face count");
                continue;
            }
            for (const auto& f : sx.faces) {
                if (f.dim() != d - 1 || f.base_dim < 0 || f.base_dim > X.dim_cap ||
                    f.base < 0 || f.base >= X.cell_count(f.base_dim)) {
                    rep.violations.push_back("cell " + sx.name + " has dangling face");
                    continue;
                }
                for (size_t i = 1; i < f.word.size(); ++i)
                    if (f.word[i - 1] <= f.word[i])
                        rep.violations.push_back("cell " + sx.name +
                                                 " face word not strictly decreasing");
            }
        }
    }
    if (!rep.ok()) return rep;
    for (int n = 2; n <= X.dim_cap; ++n) {
        for (const auto& r : n_simplices(X, n)) {
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    const auto a = X.face(X.face(r, j), i);
                    const auto b = X.face(X.face(r, i), j - 1);
                    if (a != b) {
                        std::ostringstream os;
                        os << "d_" << i << " d_" << j << " != d_" << (j - 1) << " d_"
                           << i << " on " << ref_name(X, r);
                        rep.violations.push_back(os.str());
                    }
                }
        }
    }
    return rep;
}

Pi0 pi0(const TruncatedSimplicialSet& X) {
    const int n0 = X.cell_count(0);
    std::vector<int> parent(n0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    if (X.dim_cap >= 1) {
        for (const auto& e : X.cells[1]) {
            const int u = e.faces[0].base;
            const int v = e.faces[1].base;
            parent[find(u)] = find(v);
        }
    }
    Pi0 out;
    out.component.assign(n0, -1);
    for (int v = 0; v < n0; ++v) {
        const int r = find(v);
        if (out.component[r] < 0) out.component[r] = out.count++;
        out.component[v] = out.component[r];
    }
    return out;
}

namespace {

smith::Matrix boundary_matrix(const TruncatedSimplicialSet& X, int n) {
    // rows: (n-1)-cells, cols: n-cells
    const int rows = X.cell_count(n - 1);
    const int cols = X.cell_count(n);
    smith::Matrix m(rows, std::vector<smith::Int>(cols, 0));
    for (int c = 0; c < cols; ++c) {
        const auto& sx = X.cells[n][c];
        for (int i = 0; i <= n; ++i) {
            const auto& f = sx.faces[i];
            if (f.degenerate()) continue;
            m[f.base][c] += (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

} // namespace

HomologyReport homology(const TruncatedSimplicialSet& X, int up_to) {
    if (up_to > X.dim_cap - 1)
        throw InputError("homology: up_to exceeds validity bound dim_cap - 1");
    if (up_to < 0) throw InputError("homology: up_to must be >= 0");
    HomologyReport rep;
    rep.validity_bound = X.dim_cap - 1;
    std::vector<smith::Diagonal> snf(up_to + 2);
    for (int n = 1; n <= up_to + 1; ++n)
        snf[n] = smith::smith_normal_form(boundary_matrix(X, n));
    for (int n = 0; n <= up_to; ++n) {
        HomologyGroup g;
        const int rank_in = n == 0 ? 0 : snf[n].rank();
        g.betti = X.cell_count(n) - rank_in - snf[n + 1].rank();
        for (const auto& d : snf[n + 1].divisors)
            if (d > 1) g.torsion.push_back(static_cast<long long>(d));
        std::sort(g.torsion.begin(), g.torsion.end());
        rep.groups.push_back(std::move(g));
    }
    return rep;
}

long long euler_characteristic(const TruncatedSimplicialSet& X) {
    long long chi = 0;
    for (int n = 0; n <= X.dim_cap; ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(X.cell_count(n));
    return chi;
}

SimplexRef SimplicialMap::apply(const SimplexRef& r) const {
    SimplexRef out = assignment[r.base_dim][r.base];
    for (auto it = r.word.rbegin(); it != r.word.rend(); ++it)
        out = apply_degeneracy(out, *it);
    return out;
}

Report SimplicialMap::verify() const {
    Report rep;
    const int cap = std::min(source->dim_cap, target->dim_cap);
    for (int d = 0; d <= cap; ++d) {
        if (static_cast<int>(assignment.size()) <= d ||
            static_cast<int>(assignment[d].size()) != source->cell_count(d)) {
            rep.violations.push_back("assignment missing at dimension " +
                                     std::to_string(d));
            return rep;
        }
        for (int c = 0; c < source->cell_count(d); ++c) {
            if (assignment[d][c].dim() != d)
                rep.violations.push_back("image of " + source->cells[d][c].name +
                                         " has wrong dimension");
        }
    }
    for (int d = 1; d <= cap; ++d)
        for (int c = 0; c < source->cell_count(d); ++c) {
            const SimplexRef r{d, c, {}};
            for (int i = 0; i <= d; ++i) {
                const auto lhs = apply(source->face(r, i));
                const auto rhs = target->face(apply(r), i);
                if (lhs != rhs)
                    rep.violations.push_back(
                        "map does not commute with d_" + std::to_string(i) + " on " +
                        source->cells[d][c].name);
            }
        }
    return rep;
}

bool SimplicialMap::is_isomorphism() const {
    if (!verify().ok()) return false;
    if (source->dim_cap != target->dim_cap) return false;
    for (int d = 0; d <= source->dim_cap; ++d) {
        if (source->cell_count(d) != target->cell_count(d)) return false;
        std::vector<bool> hit(target->cell_count(d), false);
        for (int c = 0; c < source->cell_count(d); ++c) {
            const auto& img = assignment[d][c];
            if (img.degenerate()) return false;
            if (hit[img.base]) return false;
            hit[img.base] = true;
        }
    }
    return true;
}

InvariantComparison compare_invariants(const TruncatedSimplicialSet& a,
                                       const TruncatedSimplicialSet& b) {
    InvariantComparison cmp;
    cmp.pi0_equal = pi0(a).count == pi0(b).count;
    if (!cmp.pi0_equal) {
        cmp.detail = "pi0 count " + std::to_string(pi0(a).count) + " vs " +
                     std::to_string(pi0(b).count);
        return cmp;
    }
    const int bound = std::min(a.dim_cap, b.dim_cap) - 1;
    if (bound < 0) {
        cmp.homology_equal = true; // nothing comparable beyond pi0
        return cmp;
    }
    const auto ha = homology(a, bound);
    const auto hb = homology(b, bound);
    cmp.homology_equal = ha.groups == hb.groups;
    if (!cmp.homology_equal) cmp.detail = "homology mismatch within degrees 0.." +
                                          std::to_string(bound);
    return cmp;
}

} // namespace htt::simpset
