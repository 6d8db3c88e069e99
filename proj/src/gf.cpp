#include "htt/gf.hpp"

#include <map>
#include <mutex>

namespace htt::hall {

namespace {

// polynomial helpers over F_p for building extension-field tables
using Poly = std::vector<int>; // coefficients, low degree first

Poly poly_mod(Poly a, const Poly& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > dm) {
        const int lead = a.back();
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        if (lead != 0)
            for (int i = 0; i <= dm; ++i) {
                int& c = a[i + shift];
                c = ((c - lead * m[i]) % p + p * p) % p;
            }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

int encode(const Poly& a, int p, int e) {
    int v = 0;
    for (int i = e - 1; i >= 0; --i)
        v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return v;
}

Poly decode(int v, int p, int e) {
    Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// irreducibility by trial evaluation of all lower-degree monic factors
bool irreducible(const Poly& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    for (int fd = 1; fd <= deg / 2; ++fd) {
        int count = 1;
        for (int i = 0; i < fd; ++i) count *= p;
        for (int mask = 0; mask < count; ++mask) {
            Poly f = decode(mask, p, fd);
            f.push_back(1); // monic of degree fd
            // does f divide m? long division
            Poly r = m;
            while (static_cast<int>(r.size()) >= static_cast<int>(f.size())) {
                while (!r.empty() && r.back() == 0) r.pop_back();
                if (static_cast<int>(r.size()) < static_cast<int>(f.size())) break;
                const int lead = r.back();
                const int shift =
                    static_cast<int>(r.size()) - static_cast<int>(f.size());
                for (size_t i = 0; i < f.size(); ++i) {
                    int& c = r[i + shift];
                    c = ((c - lead * f[i]) % p + p * p) % p;
                }
                while (!r.empty() && r.back() == 0) r.pop_back();
            }
            bool zero = true;
            for (int c : r)
                if (c != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

GF::GF(int q) : q_(q) {
    if (q < 2) throw InputError("GF: q must be a prime power >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    if (!is_prime(p)) throw InputError("GF: q must be a prime power");
    int e = 0;
    int t = q;
    while (t > 1) {
        if (t % p != 0) throw InputError("GF: q must be a prime power");
        t /= p;
        ++e;
    }
    p_ = p;
    e_ = e;
    Poly modulus;
    if (e == 1) {
        modulus = {0, 1};
    } else {
        // find a monic irreducible of degree e over F_p
        int count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (int mask = 0; mask < count && !found; ++mask) {
            Poly m = decode(mask, p, e);
            m.push_back(1);
            if (irreducible(m, p)) {
                modulus = m;
                found = true;
            }
        }
        if (!found) throw InputError("GF: no irreducible polynomial found");
    }
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        const Poly pa = decode(a, p, e);
        Poly na(e);
        for (int i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
        neg_[a] = encode(na, p, e);
        for (int b = 0; b < q; ++b) {
            const Poly pb = decode(b, p, e);
            Poly s(e);
            for (int i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
            add_[a * q + b] = encode(s, p, e);
            Poly m = e == 1 ? Poly{(pa[0] * pb[0]) % p}
                            : poly_mod(poly_mul(pa, pb, p), modulus, p);
            mul_[a * q + b] = encode(m, p, e);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = b;
}

Mat mat_mul(const GF& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw InputError("mat_mul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const int xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(xv, y.at(k, j)));
        }
    return r;
}

Mat mat_identity(int n) {
    Mat r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

int mat_rank(const GF& F, Mat m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.a[rank * m.cols + j],
                                                   m.a[piv * m.cols + j]);
        const int ipiv = F.inv(m.at(rank, col));
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), ipiv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            const int c = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool mat_invertible(const GF& F, const Mat& m) {
    return m.rows == m.cols && mat_rank(F, m) == m.rows;
}

Mat mat_inverse(const GF& F, Mat m) {
    if (m.rows != m.cols) throw InputError("mat_inverse: not square");
    const int n = m.rows;
    Mat inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw InputError("mat_inverse: singular");
        for (int j = 0; j < n; ++j) {
            std::swap(m.a[col * n + j], m.a[piv * n + j]);
            std::swap(inv.a[col * n + j], inv.a[piv * n + j]);
        }
        const int ip = F.inv(m.at(col, col));
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = F.mul(m.at(col, j), ip);
            inv.at(col, j) = F.mul(inv.at(col, j), ip);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            const int c = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(col, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::vector<Mat> all_matrices(const GF& F, int r, int c) {
    std::vector<Mat> out;
    const long long total = [&] {
        long long t = 1;
        for (int i = 0; i < r * c; ++i) t *= F.q();
        return t;
    }();
    out.reserve(total);
    Mat m(r, c);
    for (long long v = 0; v < total; ++v) {
        long long t = v;
        for (int i = 0; i < r * c; ++i) {
            m.a[i] = static_cast<int>(t % F.q());
            t /= F.q();
        }
        out.push_back(m);
    }
    return out;
}

const std::vector<Mat>& general_linear_group(const GF& F, int n) {
    static std::map<std::pair<int, int>, std::vector<Mat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F.q(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Mat> gl;
    for (const auto& m : all_matrices(F, n, n))
        if (mat_invertible(F, m)) gl.push_back(m);
    return cache.emplace(key, std::move(gl)).first->second;
}

long long gl_order(int q, int n) {
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long long order = 1;
    long long qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= (qn - qi);
        qi *= q;
    }
    return order;
}

} // namespace htt::hall
