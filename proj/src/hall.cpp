#include "htt/hall.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace htt::hall {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// mixed-radix indexing of arrow-matrix tuples
struct TupleSpace {
    const Quiver* Q;
    GF F;
    DimVec dims;
    std::vector<long long> radix; // per arrow: q^(entries)
    long long total = 1;

    TupleSpace(const Quiver& q_, int q, const DimVec& d)
        : Q(&q_), F(q), dims(d) {
        for (const auto& a : Q->arrows) {
            const long long r = ipow(q, dims[a.tgt] * dims[a.src]);
            radix.push_back(r);
            total *= r;
        }
    }
    std::vector<Mat> decode(long long id) const {
        std::vector<Mat> ms;
        for (int a = 0; a < Q->arrow_count(); ++a) {
            const auto& ar = Q->arrows[a];
            Mat m(dims[ar.tgt], dims[ar.src]);
            long long v = id % radix[a];
            id /= radix[a];
            for (auto& e : m.a) {
                e = static_cast<int>(v % F.q());
                v /= F.q();
            }
            ms.push_back(std::move(m));
        }
        return ms;
    }
    long long encode(const std::vector<Mat>& ms) const {
        long long id = 0;
        for (int a = Q->arrow_count() - 1; a >= 0; --a) {
            long long v = 0;
            for (auto it = ms[a].a.rbegin(); it != ms[a].a.rend(); ++it)
                v = v * F.q() + *it;
            id = id * radix[a] + v;
        }
        return id;
    }
};

// the acting group: tuples of invertible matrices per vertex
struct GroupSpace {
    std::vector<const std::vector<Mat>*> gl; // per vertex
    std::vector<long long> radix;
    long long order = 1;

    GroupSpace(const GF& F, const DimVec& dims) {
        for (int d : dims) {
            gl.push_back(&general_linear_group(F, d));
            radix.push_back(static_cast<long long>(gl.back()->size()));
            order *= radix.back();
        }
    }
    std::vector<int> decode(long long id) const {
        std::vector<int> g(gl.size());
        for (size_t v = 0; v < gl.size(); ++v) {
            g[v] = static_cast<int>(id % radix[v]);
            id /= radix[v];
        }
        return g;
    }
};

std::vector<Mat> act(const TupleSpace& T, const GroupSpace& G,
                     const std::vector<std::vector<Mat>>& inverses,
                     const std::vector<int>& g, const std::vector<Mat>& ms) {
    std::vector<Mat> out;
    out.reserve(ms.size());
    for (int a = 0; a < T.Q->arrow_count(); ++a) {
        const auto& ar = T.Q->arrows[a];
        out.push_back(mat_mul(T.F, mat_mul(T.F, (*G.gl[ar.tgt])[g[ar.tgt]], ms[a]),
                              inverses[ar.src][g[ar.src]]));
    }
    return out;
}

} // namespace

std::vector<RepClass> enumerate_reps(const Quiver& Q, int q, const DimVec& dims,
                                     long long budget, Exec exec) {
    if (static_cast<int>(dims.size()) != Q.vertex_count())
        throw InputError("enumerate_reps: dimension vector size mismatch");
    TupleSpace T(Q, q, dims);
    GroupSpace G(T.F, dims);
    if (T.total * std::max<long long>(G.order, 1) > budget)
        throw ResourceError("enumerate_reps: orbit enumeration budget exceeded");
    std::vector<std::vector<Mat>> inverses(Q.vertex_count());
    for (int v = 0; v < Q.vertex_count(); ++v)
        for (const auto& m : *G.gl[v]) inverses[v].push_back(mat_inverse(T.F, m));

    std::vector<RepClass> out;
    if (exec == Exec::Parallel) {
        // canonicalize every tuple independently, then group
        std::vector<long long> canon(T.total);
        const long long total = T.total;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long long id = 0; id < total; ++id) {
            const auto ms = T.decode(id);
            long long best = id;
            for (long long gi = 0; gi < G.order; ++gi) {
                const auto img = act(T, G, inverses, G.decode(gi), ms);
                best = std::min(best, T.encode(img));
            }
            canon[id] = best;
        }
        std::map<long long, long long> orbit_size;
        for (long long id = 0; id < total; ++id) ++orbit_size[canon[id]];
        for (const auto& [rep_id, size] : orbit_size) {
            RepClass c;
            c.representative = Rep{q, dims, T.decode(rep_id)};
            c.aut_order = G.order / size;
            out.push_back(std::move(c));
        }
    } else {
        // walk orbits, computing stabilizer orders directly
        std::vector<bool> visited(T.total, false);
        for (long long id = 0; id < T.total; ++id) {
            if (visited[id]) continue;
            const auto ms = T.decode(id);
            long long best = id;
            long long stab = 0;
            std::vector<long long> orbit;
            for (long long gi = 0; gi < G.order; ++gi) {
                const auto img = act(T, G, inverses, G.decode(gi), ms);
                const long long eid = T.encode(img);
                orbit.push_back(eid);
                if (eid == id) ++stab;
                best = std::min(best, eid);
            }
            for (long long eid : orbit) visited[eid] = true;
            RepClass c;
            c.representative = Rep{q, dims, T.decode(best)};
            c.aut_order = stab;
            out.push_back(std::move(c));
        }
        std::sort(out.begin(), out.end(), [&](const RepClass& a, const RepClass& b) {
            return T.encode(a.representative.matrices) <
                   T.encode(b.representative.matrices);
        });
    }
    return out;
}

const std::vector<RepClass>& IsoClassTable::at(const DimVec& d) const {
    auto it = classes.find(d);
    if (it == classes.end()) {
        std::ostringstream os;
        os << "class table does not cover dimension vector (";
        for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << ")";
        throw InputError(os.str());
    }
    return it->second;
}

IsoClassTable build_class_table(const Quiver& Q, int q, const DimVec& bound,
                                long long budget, Exec exec) {
    IsoClassTable t;
    t.quiver = &Q;
    t.q = q;
    t.bound = bound;
    DimVec d(Q.vertex_count(), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == Q.vertex_count()) {
            t.classes[d] = enumerate_reps(Q, q, d, budget, exec);
            return;
        }
        for (int k = 0; k <= bound[v]; ++k) {
            d[v] = k;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return t;
}

long long aut_order(const Quiver& Q, const Rep& X) {
    GF F(X.q);
    GroupSpace G(F, X.dims);
    std::vector<std::vector<Mat>> inverses(Q.vertex_count());
    for (int v = 0; v < Q.vertex_count(); ++v)
        for (const auto& m : *G.gl[v]) inverses[v].push_back(mat_inverse(F, m));
    TupleSpace T(Q, X.q, X.dims);
    long long stab = 0;
    for (long long gi = 0; gi < G.order; ++gi)
        if (act(T, G, inverses, G.decode(gi), X.matrices) == X.matrices) ++stab;
    return stab;
}

namespace {

// all intertwiners X -> Z: per-vertex matrices commuting with the arrows
std::vector<std::vector<Mat>> hom_reps(const Quiver& Q, const Rep& X,
                                       const Rep& Z) {
    GF F(X.q);
    long long total = 1;
    for (int v = 0; v < Q.vertex_count(); ++v)
        total *= ipow(X.q, Z.dims[v] * X.dims[v]);
    std::vector<std::vector<Mat>> out;
    for (long long id = 0; id < total; ++id) {
        std::vector<Mat> phi;
        long long t = id;
        for (int v = 0; v < Q.vertex_count(); ++v) {
            Mat m(Z.dims[v], X.dims[v]);
            for (auto& e : m.a) {
                e = static_cast<int>(t % X.q);
                t /= X.q;
            }
            phi.push_back(std::move(m));
        }
        bool ok = true;
        for (int a = 0; a < Q.arrow_count() && ok; ++a) {
            const auto& ar = Q.arrows[a];
            if (mat_mul(F, Z.matrices[a], phi[ar.src]) !=
                mat_mul(F, phi[ar.tgt], X.matrices[a]))
                ok = false;
        }
        if (ok) out.push_back(std::move(phi));
    }
    return out;
}

bool vertexwise_injective(const GF& F, const std::vector<Mat>& phi) {
    for (const auto& m : phi)
        if (mat_rank(F, m) != m.cols) return false;
    return true;
}

bool vertexwise_surjective(const GF& F, const std::vector<Mat>& phi) {
    for (const auto& m : phi)
        if (mat_rank(F, m) != m.rows) return false;
    return true;
}

bool zero_composite(const GF& F, const std::vector<Mat>& p,
                    const std::vector<Mat>& i) {
    for (size_t v = 0; v < p.size(); ++v) {
        const auto c = mat_mul(F, p[v], i[v]);
        for (int e : c.a)
            if (e != 0) return false;
    }
    return true;
}

} // namespace

bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

Rational hall_number(const Quiver& Q, const Rep& X, const Rep& Y, const Rep& Z,
                     Exec exec) {
    if (X.q != Y.q || Y.q != Z.q)
        throw InputError("hall_number: field mismatch between arguments");
    for (int v = 0; v < Q.vertex_count(); ++v)
        if (X.dims[v] + Y.dims[v] != Z.dims[v]) return Rational(0);
    GF F(X.q);
    const auto monos = hom_reps(Q, X, Z);
    const auto epis = hom_reps(Q, Z, Y);
    std::vector<const std::vector<Mat>*> mono_list, epi_list;
    for (const auto& i : monos)
        if (vertexwise_injective(F, i)) mono_list.push_back(&i);
    for (const auto& p : epis)
        if (vertexwise_surjective(F, p)) epi_list.push_back(&p);
    long long pairs = 0;
    const int nm = static_cast<int>(mono_list.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : pairs) \
    if (exec == Exec::Parallel)
#endif
    for (int mi = 0; mi < nm; ++mi) {
        long long local = 0;
        for (const auto* p : epi_list)
            if (zero_composite(F, *p, *mono_list[mi])) ++local;
        pairs += local;
    }
    (void)exec;
    // exactness: since i is injective and p surjective with dims adding up,
    // p∘i = 0 already forces im(i) = ker(p)
    const Rational denom =
        Rational(aut_order(Q, X)) * Rational(aut_order(Q, Y));
    return Rational(pairs) / denom;
}


HallProduct hall_product(const Quiver& Q, const Rep& X, const Rep& Y,
                         const IsoClassTable& table) {
    if (X.q != table.q || Y.q != table.q)
        throw InputError("hall_product: field mismatch");
    DimVec sum(Q.vertex_count());
    for (int v = 0; v < Q.vertex_count(); ++v) sum[v] = X.dims[v] + Y.dims[v];
    HallProduct out;
    const auto& zs = table.at(sum);
    for (int c = 0; c < static_cast<int>(zs.size()); ++c) {
        const auto g = hall_number(Q, X, Y, zs[c].representative);
        if (g != 0) out.terms.push_back({{sum, c}, g});
    }
    return out;
}

AssocReport hall_associativity(const Quiver& Q, const IsoClassTable& table) {
    AssocReport rep;
    // all class triples whose dimension sum is covered by the table
    std::vector<std::pair<DimVec, int>> all;
    for (const auto& [d, cs] : table.classes)
        for (int c = 0; c < static_cast<int>(cs.size()); ++c)
            all.push_back({d, c});
    auto covered = [&](const DimVec& d) {
        for (int v = 0; v < Q.vertex_count(); ++v)
            if (d[v] > table.bound[v]) return false;
        return true;
    };
    auto add_scaled = [](std::map<std::pair<DimVec, int>, Rational>& acc,
                         const HallProduct& p, const Rational& scale) {
        for (const auto& [key, coeff] : p.terms) acc[key] += scale * coeff;
    };
    for (const auto& [dx, cx] : all)
        for (const auto& [dy, cy] : all)
            for (const auto& [dz, cz] : all) {
                DimVec total(Q.vertex_count());
                for (int v = 0; v < Q.vertex_count(); ++v)
                    total[v] = dx[v] + dy[v] + dz[v];
                if (!covered(total)) continue;
                const auto& X = table.at(dx)[cx].representative;
                const auto& Y = table.at(dy)[cy].representative;
                const auto& Z = table.at(dz)[cz].representative;
                std::map<std::pair<DimVec, int>, Rational> lhs, rhs;
                const auto xy = hall_product(Q, X, Y, table);
                for (const auto& [key, coeff] : xy.terms) {
                    if (!is_integer(coeff))
                        rep.violations.push_back("non-integer Hall number");
                    const auto& U = table.at(key.first)[key.second].representative;
                    add_scaled(lhs, hall_product(Q, U, Z, table), coeff);
                }
                const auto yz = hall_product(Q, Y, Z, table);
                for (const auto& [key, coeff] : yz.terms) {
                    const auto& V = table.at(key.first)[key.second].representative;
                    add_scaled(rhs, hall_product(Q, X, V, table), coeff);
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails for a triple with dims (";
                    for (size_t i = 0; i < dx.size(); ++i) os << dx[i] << " ";
                    os << "| ";
                    for (size_t i = 0; i < dy.size(); ++i) os << dy[i] << " ";
                    os << "| ";
                    for (size_t i = 0; i < dz.size(); ++i) os << dz[i] << " ";
                    os << ")";
                    rep.violations.push_back(os.str());
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------
// derived Hall algebra

int GradedVect::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

GradedVect GradedVect::trimmed() const {
    GradedVect out;
    out.q = q;
    int a = 0, b = static_cast<int>(dims.size()) - 1;
    while (a <= b && dims[a] == 0) ++a;
    while (b >= a && dims[b] == 0) --b;
    out.lo = lo + a;
    out.dims.assign(dims.begin() + a, dims.begin() + b + 1);
    if (out.dims.empty()) out.lo = 0;
    return out;
}

std::pair<int, std::vector<int>> GradedVect::trimmed_key() const {
    const auto t = trimmed();
    return {t.lo, t.dims};
}

GradedVect shift(const GradedVect& x, int i) {
    // shift(x, i)_k = x_{k+i}: the window moves down by i
    GradedVect out = x;
    out.lo = x.lo - i;
    return out;
}

long long hom_count(const GradedVect& x, const GradedVect& z) {
    if (x.q != z.q) throw InputError("hom_count: field mismatch");
    long long e = 0;
    for (int k = std::min(x.lo, z.lo); k <= std::max(x.hi(), z.hi()); ++k)
        e += static_cast<long long>(x.dim_at(k)) * z.dim_at(k);
    if (e > 62 / (x.q > 2 ? 2 : 1))
        throw ResourceError("hom_count: profile too large for exact counting");
    return ipow(x.q, static_cast<int>(e));
}

namespace {

using Int = boost::multiprecision::cpp_int;

// number of r-dimensional subspaces of F_q^n
Int q_binomial(int q, int n, int r) {
    if (r < 0 || r > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= Int(ipow(q, n - i)) - 1;
        den *= Int(ipow(q, i + 1)) - 1;
    }
    return num / den;
}

// rank distribution of rows x cols matrices over F_q: choose the row space,
// then a surjection onto it
std::vector<long long> rank_counts(int q, int rows, int cols) {
    if (rows > 18 || cols > 18)
        throw ResourceError("rank_counts: profile too large for exact counting");
    std::vector<long long> counts(std::min(rows, cols) + 1, 0);
    for (int r = 0; r <= std::min(rows, cols); ++r) {
        Int c = q_binomial(q, cols, r);
        for (int i = 0; i < r; ++i) c *= Int(ipow(q, rows)) - Int(ipow(q, i));
        if (c > Int(std::numeric_limits<long long>::max()))
            throw ResourceError("rank_counts: count exceeds 64 bits");
        counts[r] = static_cast<long long>(c);
    }
    return counts;
}

} // namespace

std::vector<long long> matrix_rank_counts(int q, int rows, int cols) {
    return rank_counts(q, rows, cols);
}

long long hom_count_with_cone(const GradedVect& x, const GradedVect& z,
                              const GradedVect& y) {
    if (x.q != z.q || z.q != y.q)
        throw InputError("hom_count_with_cone: field mismatch");
    const int lo = std::min({x.lo, z.lo, y.lo}) - 1;
    const int hi = std::max({x.hi(), z.hi(), y.hi()}) + 1;
    // profile sum over rank tuples: cone_k = (z_k - r_k) + (x_{k+1} - r_{k+1})
    // must equal y_k for every k; count matrices per degree by rank
    std::vector<std::vector<long long>> cnt(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) cnt[k - lo] = rank_counts(x.q, z.dim_at(k),
                                                             x.dim_at(k));
    // dp over degrees from high to low; state: rank at degree k+1
    std::map<int, long long> state;
    state[0] = 1; // rank above the top is forced to 0
    for (int k = hi; k >= lo; --k) {
        std::map<int, long long> next;
        for (const auto& [r_above, ways] : state)
            for (int r = 0; r < static_cast<int>(cnt[k - lo].size()); ++r) {
                if (cnt[k - lo][r] == 0) continue;
                const int cone_k = (z.dim_at(k) - r) + (x.dim_at(k + 1) - r_above);
                if (cone_k != y.dim_at(k)) continue;
                next[r] += ways * cnt[k - lo][r];
            }
        state = std::move(next);
    }
    long long total = 0;
    for (const auto& [r, ways] : state) {
        if (r != 0) continue; // rank below the bottom degree must vanish
        total += ways;
    }
    return total;
}

long long aut_order_graded(const GradedVect& x) {
    long long r = 1;
    for (int k = x.lo; k <= x.hi(); ++k) {
        if (x.dim_at(k) > 12)
            throw ResourceError("aut_order_graded: dimension too large");
        r *= gl_order(x.q, x.dim_at(k));
    }
    return r;
}

Rational derived_hall_number(const GradedVect& x, const GradedVect& y,
                             const GradedVect& z) {
    if (x.q != y.q || y.q != z.q)
        throw InputError("derived_hall_number: field mismatch");
    Rational num(hom_count_with_cone(x, z, y));
    Rational den(aut_order_graded(x));
    // alternating shift factors; beyond the windows every factor is 1
    const int span = (x.hi() - x.lo) + (z.hi() - z.lo) +
                     std::abs(x.lo - z.lo) + 2;
    for (int i = 1; i <= span; ++i) {
        const Rational zf(hom_count(x, shift(z, -i)));
        const Rational xf(hom_count(x, shift(x, -i)));
        if (i % 2 == 1) {
            num /= zf;
            den /= xf;
        } else {
            num *= zf;
            den *= xf;
        }
    }
    return num / den;
}

std::vector<GradedVect> graded_classes(int q, int lo, int hi, int bound) {
    std::vector<GradedVect> out;
    GradedVect cur;
    cur.q = q;
    cur.lo = lo;
    cur.dims.assign(hi - lo + 1, 0);
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k > hi) {
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            cur.dims[k - lo] = d;
            self(self, k + 1, remaining - d);
        }
        cur.dims[k - lo] = 0;
    };
    rec(rec, lo, bound);
    return out;
}

std::vector<DerivedTerm> derived_hall_product(const GradedVect& x,
                                              const GradedVect& y) {
    if (x.q != y.q) throw InputError("derived_hall_product: field mismatch");
    // support bound: z_k <= x_k + x_{k+1} + y_k, window spans both inputs
    const int lo = std::min(x.lo, y.lo);
    const int hi = std::max(x.hi(), y.hi());
    std::vector<DerivedTerm> out;
    GradedVect z;
    z.q = x.q;
    z.lo = lo;
    z.dims.assign(hi - lo + 1, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k > hi) {
            const auto g = derived_hall_number(x, y, z);
            if (g != 0) out.push_back({z.trimmed(), g});
            return;
        }
        const int cap = x.dim_at(k) + x.dim_at(k + 1) + y.dim_at(k);
        for (int d = 0; d <= cap; ++d) {
            z.dims[k - lo] = d;
            self(self, k + 1);
        }
        z.dims[k - lo] = 0;
    };
    rec(rec, lo);
    return out;
}

AssocReport derived_associativity(int q, int lo, int hi, int bound, Exec exec) {
    AssocReport rep;
    const auto classes = graded_classes(q, lo, hi, bound);
    const int n = static_cast<int>(classes.size());
    std::vector<std::string> local_violations(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
#endif
    for (int xi = 0; xi < n; ++xi) {
        std::ostringstream viol;
        for (int yi = 0; yi < n; ++yi)
            for (int zi = 0; zi < n; ++zi) {
                const auto& x = classes[xi];
                const auto& y = classes[yi];
                const auto& z = classes[zi];
                std::map<std::pair<int, std::vector<int>>, Rational> lhs, rhs;
                for (const auto& t : derived_hall_product(x, y))
                    for (const auto& t2 : derived_hall_product(t.cls, z))
                        lhs[t2.cls.trimmed_key()] += t.coeff * t2.coeff;
                for (const auto& t : derived_hall_product(y, z))
                    for (const auto& t2 : derived_hall_product(x, t.cls))
                        rhs[t2.cls.trimmed_key()] += t.coeff * t2.coeff;
                if (lhs != rhs)
                    viol << "associativity fails at triple (" << xi << "," << yi
                         << "," << zi << ")\n";
            }
        local_violations[xi] = viol.str();
    }
    (void)exec;
    for (const auto& v : local_violations)
        if (!v.empty()) rep.violations.push_back(v);
    return rep;
}

} // namespace htt::hall
