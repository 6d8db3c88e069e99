#include "htt/formats.hpp"

#include <fstream>
#include <sstream>

namespace htt::formats {

using simpset::SimplexRef;
using simpset::TruncatedSimplicialSet;

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

[[noreturn]] void fail(size_t lineno, const std::string& what) {
    throw InputError("line " + std::to_string(lineno + 1) + ": " + what);
}

int to_int(const std::string& s, size_t lineno) {
    try {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) fail(lineno, "not an integer: " + s);
        return v;
    } catch (const std::exception&) {
        fail(lineno, "not an integer: " + s);
    }
}

// "name" or "name[2,0]"
std::pair<std::string, std::vector<int>> split_ref(const std::string& tok,
                                                   size_t lineno) {
    const auto br = tok.find('[');
    if (br == std::string::npos) return {tok, {}};
    if (tok.back() != ']') fail(lineno, "malformed reference: " + tok);
    std::vector<int> word;
    std::string inner = tok.substr(br + 1, tok.size() - br - 2);
    std::istringstream is(inner);
    std::string part;
    while (std::getline(is, part, ',')) word.push_back(to_int(part, lineno));
    return {tok.substr(0, br), word};
}

std::string ref_token(const TruncatedSimplicialSet& X, const SimplexRef& r) {
    return simpset::ref_name(X, r);
}

} // namespace

std::string print_sset(const TruncatedSimplicialSet& X) {
    std::ostringstream os;
    os << "sset\n";
    os << "dimcap " << X.dim_cap << "\n";
    for (int d = 0; d <= X.dim_cap; ++d)
        for (int c = 0; c < X.cell_count(d); ++c) {
            os << "simplex " << d << " " << X.cells[d][c].name;
            if (d >= 1) {
                os << " :";
                for (const auto& f : X.cells[d][c].faces) os << " " << ref_token(X, f);
            }
            os << "\n";
        }
    os << "end\n";
    return os.str();
}

TruncatedSimplicialSet parse_sset(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0][0] != "sset")
        throw InputError("sset: missing header");
    TruncatedSimplicialSet X;
    std::vector<std::map<std::string, int>> names;
    bool have_cap = false;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t[0] == "dimcap") {
            if (t.size() != 2) fail(ln, "dimcap needs one argument");
            const int cap = to_int(t[1], ln);
            if (cap < 0) fail(ln, "dimcap must be >= 0");
            X = TruncatedSimplicialSet(cap);
            names.assign(cap + 1, {});
            have_cap = true;
            continue;
        }
        if (t[0] == "simplex") {
            if (!have_cap) fail(ln, "dimcap must come before simplices");
            if (t.size() < 3) fail(ln, "simplex needs dimension and name");
            const int d = to_int(t[1], ln);
            if (d < 0 || d > X.dim_cap) fail(ln, "simplex dimension out of range");
            simpset::Simplex sx;
            sx.name = t[2];
            if (names[d].count(sx.name)) fail(ln, "duplicate name " + sx.name);
            if (d >= 1) {
                if (t.size() != static_cast<size_t>(4 + d + 1) || t[3] != ":")
                    fail(ln, "expected ':' and " + std::to_string(d + 1) + " faces");
                for (int i = 0; i <= d; ++i) {
                    const auto [base, word] = split_ref(t[4 + i], ln);
                    const int base_dim = d - 1 - static_cast<int>(word.size());
                    if (base_dim < 0) fail(ln, "degeneracy word too long");
                    auto it = names[base_dim].find(base);
                    if (it == names[base_dim].end())
                        fail(ln, "unknown face " + base + " in dimension " +
                                     std::to_string(base_dim));
                    for (size_t w = 1; w < word.size(); ++w)
                        if (word[w - 1] <= word[w])
                            fail(ln, "degeneracy word must strictly decrease");
                    sx.faces.push_back(SimplexRef{base_dim, it->second, word});
                }
            } else if (t.size() != 3) {
                fail(ln, "0-simplex takes no faces");
            }
            names[d][sx.name] = static_cast<int>(X.cells[d].size());
            X.cells[d].push_back(std::move(sx));
            continue;
        }
        fail(ln, "unknown directive " + t[0]);
    }
    if (!have_cap) throw InputError("sset: missing dimcap");
    const auto rep = simpset::verify_identities(X);
    if (!rep.ok()) throw InputError("sset: " + rep.violations[0]);
    return X;
}

std::string print_category(const fincat::FinCategory& C) {
    std::ostringstream os;
    os << "category\n";
    for (const auto& o : C.objects) os << "object " << o << "\n";
    for (const auto& m : C.morphisms)
        os << "morphism " << m.name << " : " << C.objects[m.src] << " -> "
           << C.objects[m.tgt] << "\n";
    for (int o = 0; o < C.object_count(); ++o)
        os << "identity " << C.objects[o] << " " << C.morphisms[C.identity[o]].name
           << "\n";
    for (int g = 0; g < C.morphism_count(); ++g)
        for (int f = 0; f < C.morphism_count(); ++f)
            if (C.table[g][f] >= 0)
                os << "compose " << C.morphisms[g].name << " "
                   << C.morphisms[f].name << " " << C.morphisms[C.table[g][f]].name
                   << "\n";
    os << "end\n";
    return os.str();
}

fincat::FinCategory parse_category(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0][0] != "category")
        throw InputError("category: missing header");
    fincat::FinCategory C;
    std::map<std::string, int> oidx, midx;
    struct Comp {
        std::string g, f, gf;
        size_t ln;
    };
    std::vector<Comp> comps;
    std::vector<std::pair<std::string, std::string>> identities;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t[0] == "object") {
            if (t.size() != 2) fail(ln, "object needs a name");
            if (oidx.count(t[1])) fail(ln, "duplicate object " + t[1]);
            oidx[t[1]] = C.object_count();
            C.objects.push_back(t[1]);
        } else if (t[0] == "morphism") {
            if (t.size() != 6 || t[2] != ":" || t[4] != "->")
                fail(ln, "expected: morphism name : src -> tgt");
            if (midx.count(t[1])) fail(ln, "duplicate morphism " + t[1]);
            if (!oidx.count(t[3]) || !oidx.count(t[5]))
                fail(ln, "unknown endpoint object");
            midx[t[1]] = C.morphism_count();
            C.morphisms.push_back({t[1], oidx[t[3]], oidx[t[5]]});
        } else if (t[0] == "identity") {
            if (t.size() != 3) fail(ln, "expected: identity object morphism");
            identities.push_back({t[1], t[2]});
        } else if (t[0] == "compose") {
            if (t.size() != 4) fail(ln, "expected: compose g f gf");
            comps.push_back({t[1], t[2], t[3], ln});
        } else {
            fail(ln, "unknown directive " + t[0]);
        }
    }
    C.identity.assign(C.object_count(), -1);
    for (const auto& [on, mn] : identities) {
        if (!oidx.count(on) || !midx.count(mn))
            throw InputError("category: identity names unknown");
        C.identity[oidx[on]] = midx[mn];
    }
    for (int o = 0; o < C.object_count(); ++o)
        if (C.identity[o] < 0)
            throw InputError("category: missing identity for " + C.objects[o]);
    const int nm = C.morphism_count();
    C.table.assign(nm, std::vector<int>(nm, -1));
    // identity composites are implied
    for (int f = 0; f < nm; ++f) {
        C.table[C.identity[C.morphisms[f].tgt]][f] = f;
        C.table[f][C.identity[C.morphisms[f].src]] = f;
    }
    for (const auto& c : comps) {
        if (!midx.count(c.g) || !midx.count(c.f) || !midx.count(c.gf))
            fail(c.ln, "unknown morphism in compose line");
        const int g = midx[c.g], f = midx[c.f], gf = midx[c.gf];
        if (!C.composable(g, f)) fail(c.ln, "pair not composable");
        if (C.table[g][f] >= 0 && C.table[g][f] != gf)
            fail(c.ln, "contradictory composite");
        C.table[g][f] = gf;
    }
    const auto rep = fincat::verify_category(C);
    if (!rep.ok()) throw InputError("category: " + rep.violations[0]);
    return C;
}

std::string print_bisimplicial(const sspace::TruncatedBisimplicialSet& W) {
    std::ostringstream os;
    os << "bisimplicial\n";
    os << "caps " << W.cap_n << " " << W.cap_m << "\n";
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m) {
            os << "level " << n << " " << m << " :";
            for (int e = 0; e < W.size(n, m); ++e) {
                const std::string nm =
                    (!W.names.empty() && !W.names[n].empty() &&
                     static_cast<int>(W.names[n][m].size()) > e)
                        ? W.names[n][m][e]
                        : ("e" + std::to_string(e));
                os << " " << nm;
            }
            os << "\n";
        }
    auto table = [&](const char* kind, int n, int m, int i,
                     const std::vector<int>& row) {
        os << kind << " " << n << " " << m << " " << i << " :";
        for (int v : row) os << " " << v;
        os << "\n";
    };
    for (int n = 1; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m)
            for (int i = 0; i <= n; ++i) table("hface", n, m, i, W.hface[n][m][i]);
    for (int n = 0; n < W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m)
            for (int i = 0; i <= n; ++i) table("hdeg", n, m, i, W.hdeg[n][m][i]);
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 1; m <= W.cap_m; ++m)
            for (int j = 0; j <= m; ++j) table("vface", n, m, j, W.vface[n][m][j]);
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m < W.cap_m; ++m)
            for (int j = 0; j <= m; ++j) table("vdeg", n, m, j, W.vdeg[n][m][j]);
    os << "end\n";
    return os.str();
}

sspace::TruncatedBisimplicialSet parse_bisimplicial(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0][0] != "bisimplicial")
        throw InputError("bisimplicial: missing header");
    sspace::TruncatedBisimplicialSet W;
    bool have_caps = false;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t[0] == "caps") {
            if (t.size() != 3) fail(ln, "caps needs two arguments");
            W.cap_n = to_int(t[1], ln);
            W.cap_m = to_int(t[2], ln);
            if (W.cap_n < 0 || W.cap_m < 0) fail(ln, "caps must be >= 0");
            const int N = W.cap_n, M = W.cap_m;
            W.sizes.assign(N + 1, std::vector<int>(M + 1, 0));
            W.names.assign(N + 1, std::vector<std::vector<std::string>>(M + 1));
            W.hface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
            W.hdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
            W.vface.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
            W.vdeg.assign(N + 1, std::vector<std::vector<std::vector<int>>>(M + 1));
            have_caps = true;
            continue;
        }
        if (!have_caps) fail(ln, "caps must come first");
        if (t[0] == "level") {
            if (t.size() < 4 || t[3] != ":") fail(ln, "expected: level n m : names");
            const int n = to_int(t[1], ln), m = to_int(t[2], ln);
            if (n < 0 || n > W.cap_n || m < 0 || m > W.cap_m)
                fail(ln, "level out of range");
            W.sizes[n][m] = static_cast<int>(t.size()) - 4;
            for (size_t i = 4; i < t.size(); ++i) W.names[n][m].push_back(t[i]);
            continue;
        }
        if (t[0] == "hface" || t[0] == "hdeg" || t[0] == "vface" || t[0] == "vdeg") {
            if (t.size() < 5 || t[4] != ":")
                fail(ln, "expected: " + t[0] + " n m i : images");
            const int n = to_int(t[1], ln), m = to_int(t[2], ln),
                      i = to_int(t[3], ln);
            std::vector<int> row;
            for (size_t k = 5; k < t.size(); ++k) row.push_back(to_int(t[k], ln));
            if (static_cast<int>(row.size()) != W.sizes[n][m])
                fail(ln, "operator row length mismatch");
            auto place = [&](auto& tbl, int slots) {
                if (i < 0 || i >= slots) fail(ln, "operator index out of range");
                if (tbl[n][m].empty()) tbl[n][m].assign(slots, {});
                tbl[n][m][i] = row;
            };
            if (t[0] == "hface") {
                if (n < 1) fail(ln, "hface needs n >= 1");
                place(W.hface, n + 1);
            } else if (t[0] == "hdeg") {
                if (n >= W.cap_n) fail(ln, "hdeg needs n < cap_n");
                place(W.hdeg, n + 1);
            } else if (t[0] == "vface") {
                if (m < 1) fail(ln, "vface needs m >= 1");
                place(W.vface, m + 1);
            } else {
                if (m >= W.cap_m) fail(ln, "vdeg needs m < cap_m");
                place(W.vdeg, m + 1);
            }
            continue;
        }
        fail(ln, "unknown directive " + t[0]);
    }
    if (!have_caps) throw InputError("bisimplicial: missing caps");
    // structural completeness before the identity check
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m) {
            auto need = [&](const auto& tbl, int slots, const char* what) {
                if (static_cast<int>(tbl[n][m].size()) != slots)
                    throw InputError(std::string("bisimplicial: missing ") + what +
                                     " rows at level " + std::to_string(n) + " " +
                                     std::to_string(m));
                for (const auto& row : tbl[n][m]) {
                    if (static_cast<int>(row.size()) != W.sizes[n][m])
                        throw InputError(std::string("bisimplicial: short ") +
                                         what + " row");
                    for (int v : row)
                        if (v < 0)
                            throw InputError(std::string("bisimplicial: negative ") +
                                             what + " image");
                }
            };
            if (n >= 1) need(W.hface, n + 1, "hface");
            if (n < W.cap_n) need(W.hdeg, n + 1, "hdeg");
            if (m >= 1) need(W.vface, m + 1, "vface");
            if (m < W.cap_m) need(W.vdeg, m + 1, "vdeg");
        }
    for (int n = 0; n <= W.cap_n; ++n)
        for (int m = 0; m <= W.cap_m; ++m) {
            auto in_range = [&](const auto& tbl, int nn, int mm) {
                for (const auto& row : tbl[n][m])
                    for (int v : row)
                        if (v >= W.sizes[nn][mm])
                            throw InputError("bisimplicial: operator image out "
                                             "of range");
            };
            if (n >= 1) in_range(W.hface, n - 1, m);
            if (n < W.cap_n) in_range(W.hdeg, n + 1, m);
            if (m >= 1) in_range(W.vface, n, m - 1);
            if (m < W.cap_m) in_range(W.vdeg, n, m + 1);
        }
    const auto rep = sspace::verify_bisimplicial(W);
    if (!rep.ok()) throw InputError("bisimplicial: " + rep.violations[0]);
    return W;
}

std::string print_quiver(const QuiverFile& qf) {
    std::ostringstream os;
    os << "quiver\n";
    for (const auto& v : qf.quiver.vertices) os << "vertex " << v << "\n";
    for (const auto& a : qf.quiver.arrows)
        os << "arrow " << a.name << " : " << qf.quiver.vertices[a.src] << " -> "
           << qf.quiver.vertices[a.tgt] << "\n";
    for (const auto& [name, rep] : qf.reps) {
        os << "rep " << name << " q " << rep.q << " dims";
        for (int d : rep.dims) os << " " << d;
        os << "\n";
        for (int a = 0; a < qf.quiver.arrow_count(); ++a) {
            os << "matrix " << name << " " << qf.quiver.arrows[a].name << " :";
            for (int e : rep.matrices[a].a) os << " " << e;
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

QuiverFile parse_quiver(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0][0] != "quiver")
        throw InputError("quiver: missing header");
    QuiverFile qf;
    std::map<std::string, int> vidx, aidx, ridx;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t[0] == "vertex") {
            if (t.size() != 2) fail(ln, "vertex needs a name");
            if (vidx.count(t[1])) fail(ln, "duplicate vertex " + t[1]);
            vidx[t[1]] = qf.quiver.vertex_count();
            qf.quiver.vertices.push_back(t[1]);
        } else if (t[0] == "arrow") {
            if (t.size() != 6 || t[2] != ":" || t[4] != "->")
                fail(ln, "expected: arrow name : src -> tgt");
            if (!vidx.count(t[3]) || !vidx.count(t[5]))
                fail(ln, "unknown endpoint vertex");
            aidx[t[1]] = qf.quiver.arrow_count();
            qf.quiver.arrows.push_back({t[1], vidx[t[3]], vidx[t[5]]});
        } else if (t[0] == "rep") {
            if (t.size() < 4 || t[2] != "q")
                fail(ln, "expected: rep name q <q> dims d...");
            hall::Rep r;
            r.q = to_int(t[3], ln);
            size_t at = 4;
            if (at >= t.size() || t[at] != "dims") fail(ln, "expected dims");
            ++at;
            for (; at < t.size(); ++at) r.dims.push_back(to_int(t[at], ln));
            if (static_cast<int>(r.dims.size()) != qf.quiver.vertex_count())
                fail(ln, "dims arity mismatch");
            for (const auto& a : qf.quiver.arrows)
                r.matrices.push_back(hall::Mat(r.dims[a.tgt], r.dims[a.src]));
            ridx[t[1]] = static_cast<int>(qf.reps.size());
            qf.reps.push_back({t[1], std::move(r)});
        } else if (t[0] == "matrix") {
            if (t.size() < 4 || t[3] != ":")
                fail(ln, "expected: matrix rep arrow : entries");
            if (!ridx.count(t[1])) fail(ln, "unknown rep " + t[1]);
            if (!aidx.count(t[2])) fail(ln, "unknown arrow " + t[2]);
            auto& rep = qf.reps[ridx[t[1]]].second;
            auto& m = rep.matrices[aidx[t[2]]];
            if (t.size() - 4 != m.a.size()) fail(ln, "matrix entry count mismatch");
            for (size_t i = 4; i < t.size(); ++i) {
                const int v = to_int(t[i], ln);
                if (v < 0 || v >= rep.q) fail(ln, "entry not reduced mod q");
                m.a[i - 4] = v;
            }
        } else {
            fail(ln, "unknown directive " + t[0]);
        }
    }
    return qf;
}

std::string print_scat(const enriched::FinSimplicialCategory& C) {
    std::ostringstream os;
    os << "scat\n";
    os << "cap " << C.cap << "\n";
    for (const auto& o : C.objects) os << "object " << o << "\n";
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b) {
            os << "map " << C.objects[a] << " " << C.objects[b] << " {\n";
            std::istringstream body(print_sset(C.map_space[a][b]));
            std::string line;
            while (std::getline(body, line)) os << "  " << line << "\n";
            os << "}\n";
        }
    for (int a = 0; a < C.object_count(); ++a)
        os << "id " << C.objects[a] << " = "
           << C.map_space[a][a].cells[0][C.identity_vertex[a]].name << "\n";
    for (int a = 0; a < C.object_count(); ++a)
        for (int b = 0; b < C.object_count(); ++b)
            for (int c = 0; c < C.object_count(); ++c)
                for (int k = 0; k <= C.cap; ++k) {
                    const int G = C.total_count(b, c, k);
                    const int F = C.total_count(a, b, k);
                    for (int gi = 0; gi < G; ++gi)
                        for (int fi = 0; fi < F; ++fi) {
                            const auto r = C.compose(a, b, c, k,
                                                     C.simplices[b][c][k][gi],
                                                     C.simplices[a][b][k][fi]);
                            os << "comp " << C.objects[a] << " " << C.objects[b]
                               << " " << C.objects[c] << " " << k << " : "
                               << ref_token(C.map_space[b][c],
                                            C.simplices[b][c][k][gi])
                               << " "
                               << ref_token(C.map_space[a][b],
                                            C.simplices[a][b][k][fi])
                               << " " << ref_token(C.map_space[a][c], r) << "\n";
                        }
                }
    os << "end\n";
    return os.str();
}

namespace {

SimplexRef parse_total_ref(const TruncatedSimplicialSet& X, const std::string& tok,
                           size_t ln) {
    const auto [base, word] = split_ref(tok, ln);
    for (int d = 0; d <= X.dim_cap; ++d)
        for (int c = 0; c < X.cell_count(d); ++c)
            if (X.cells[d][c].name == base)
                return SimplexRef{d, c, word};
    fail(ln, "unknown simplex " + base);
}

} // namespace

enriched::FinSimplicialCategory parse_scat(const std::string& text) {
    // split by map-blocks first, then tokenize the rest
    enriched::FinSimplicialCategory C;
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> rest;
    std::map<std::pair<std::string, std::string>, std::string> bodies;
    std::string cur_a, cur_b, body;
    bool in_body = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string t0;
        ls >> t0;
        if (!in_body && t0 == "map") {
            std::string a, b, brace;
            ls >> a >> b >> brace;
            if (brace != "{") throw InputError("scat: expected '{' after map");
            cur_a = a;
            cur_b = b;
            body.clear();
            in_body = true;
            continue;
        }
        if (in_body) {
            if (t0 == "}") {
                bodies[{cur_a, cur_b}] = body;
                in_body = false;
            } else {
                body += line + "\n";
            }
            continue;
        }
        rest.push_back(line);
    }
    if (in_body) throw InputError("scat: unterminated map block");
    std::string rest_text;
    for (const auto& l : rest) rest_text += l + "\n";
    const auto lines = tokenize(rest_text);
    if (lines.empty() || lines[0][0] != "scat")
        throw InputError("scat: missing header");
    std::map<std::string, int> oidx;
    bool have_cap = false;
    struct CompLine {
        std::string a, b, c;
        int k;
        std::string g, f, r;
        size_t ln;
    };
    std::vector<CompLine> comps;
    std::vector<std::pair<std::string, std::string>> ids;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t[0] == "cap") {
            C.cap = to_int(t[1], ln);
            have_cap = true;
        } else if (t[0] == "object") {
            oidx[t[1]] = C.object_count();
            C.objects.push_back(t[1]);
        } else if (t[0] == "id") {
            if (t.size() != 4 || t[2] != "=") fail(ln, "expected: id obj = vertex");
            ids.push_back({t[1], t[3]});
        } else if (t[0] == "comp") {
            if (t.size() != 9 || t[5] != ":")
                fail(ln, "expected: comp a b c k : g f r");
            comps.push_back(
                {t[1], t[2], t[3], to_int(t[4], ln), t[6], t[7], t[8], ln});
        } else {
            fail(ln, "unknown directive " + t[0]);
        }
    }
    if (!have_cap) throw InputError("scat: missing cap");
    const int no = C.object_count();
    C.map_space.assign(no, std::vector<TruncatedSimplicialSet>(no));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            auto it = bodies.find({C.objects[a], C.objects[b]});
            if (it == bodies.end())
                throw InputError("scat: missing map block " + C.objects[a] + " " +
                                 C.objects[b]);
            C.map_space[a][b] = parse_sset(it->second);
            if (C.map_space[a][b].dim_cap != C.cap)
                throw InputError("scat: map block cap mismatch");
        }
    C.identity_vertex.assign(no, -1);
    for (const auto& [on, vn] : ids) {
        if (!oidx.count(on)) throw InputError("scat: unknown object " + on);
        const int a = oidx[on];
        for (int c = 0; c < C.map_space[a][a].cell_count(0); ++c)
            if (C.map_space[a][a].cells[0][c].name == vn) C.identity_vertex[a] = c;
        if (C.identity_vertex[a] < 0)
            throw InputError("scat: unknown identity vertex " + vn);
    }
    for (int a = 0; a < no; ++a)
        if (C.identity_vertex[a] < 0)
            throw InputError("scat: missing identity for " + C.objects[a]);
    C.build_caches();
    C.comp.assign(no, {});
    for (int a = 0; a < no; ++a) {
        C.comp[a].assign(no, {});
        for (int b = 0; b < no; ++b) {
            C.comp[a][b].assign(no, {});
            for (int c = 0; c < no; ++c) {
                C.comp[a][b][c].resize(C.cap + 1);
                for (int k = 0; k <= C.cap; ++k)
                    C.comp[a][b][c][k].assign(
                        C.total_count(b, c, k) * C.total_count(a, b, k), -1);
            }
        }
    }
    for (const auto& cl : comps) {
        if (!oidx.count(cl.a) || !oidx.count(cl.b) || !oidx.count(cl.c))
            fail(cl.ln, "unknown object in comp line");
        const int a = oidx[cl.a], b = oidx[cl.b], c = oidx[cl.c];
        if (cl.k < 0 || cl.k > C.cap) fail(cl.ln, "comp level out of range");
        const auto g = parse_total_ref(C.map_space[b][c], cl.g, cl.ln);
        const auto f = parse_total_ref(C.map_space[a][b], cl.f, cl.ln);
        const auto r = parse_total_ref(C.map_space[a][c], cl.r, cl.ln);
        const int gi = static_cast<int>(C.simplex_index[b][c][cl.k].at(g));
        const int fi = static_cast<int>(C.simplex_index[a][b][cl.k].at(f));
        C.comp[a][b][c][cl.k][gi * C.total_count(a, b, cl.k) + fi] =
            C.simplex_index[a][c][cl.k].at(r);
    }
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                for (int k = 0; k <= C.cap; ++k)
                    for (int v : C.comp[a][b][c][k])
                        if (v < 0)
                            throw InputError("scat: composition table incomplete");
    const auto rep = C.verify();
    if (!rep.ok()) throw InputError("scat: " + rep.violations[0]);
    return C;
}

fincat::Functor parse_functor(const std::string& text,
                              const fincat::FinCategory& source,
                              const fincat::FinCategory& target) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0][0] != "functor")
        throw InputError("functor: missing header");
    fincat::Functor F;
    F.source = &source;
    F.target = &target;
    F.object_map.assign(source.object_count(), -1);
    F.morphism_map.assign(source.morphism_count(), -1);
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        const auto& t = lines[ln];
        if (t[0] == "end") break;
        if (t.size() != 4 || t[2] != "->")
            fail(ln, "expected: object|morphism name -> name");
        if (t[0] == "object") {
            F.object_map[source.object_index(t[1])] = target.object_index(t[3]);
        } else if (t[0] == "morphism") {
            F.morphism_map[source.morphism_index(t[1])] =
                target.morphism_index(t[3]);
        } else {
            fail(ln, "unknown directive " + t[0]);
        }
    }
    for (int o = 0; o < source.object_count(); ++o)
        if (F.object_map[o] < 0)
            throw InputError("functor: missing object image for " +
                             source.objects[o]);
    // identity images default along the object map
    for (int m = 0; m < source.morphism_count(); ++m)
        if (F.morphism_map[m] < 0) {
            if (source.is_identity(m))
                F.morphism_map[m] =
                    target.identity[F.object_map[source.morphisms[m].src]];
            else
                throw InputError("functor: missing morphism image for " +
                                 source.morphisms[m].name);
        }
    const auto rep = F.verify();
    if (!rep.ok()) throw InputError("functor: " + rep.violations[0]);
    return F;
}

std::string print_functor(const fincat::Functor& F) {
    std::ostringstream os;
    os << "functor\n";
    for (int o = 0; o < F.source->object_count(); ++o)
        os << "object " << F.source->objects[o] << " -> "
           << F.target->objects[F.object_map[o]] << "\n";
    for (int m = 0; m < F.source->morphism_count(); ++m)
        os << "morphism " << F.source->morphisms[m].name << " -> "
           << F.target->morphisms[F.morphism_map[m]].name << "\n";
    os << "end\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace htt::formats
