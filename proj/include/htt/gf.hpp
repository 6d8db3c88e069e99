#pragma once

#include <vector>

#include "htt/base.hpp"

namespace htt::hall {

/// Arithmetic of the finite field F_q for a prime power q, elements encoded
/// as 0..q-1 (base-p digit vectors of polynomial coefficients). Tables are
/// precomputed; instances are immutable and cheap to copy by reference.
class GF {
public:
    explicit GF(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const {
        if (a == 0) throw InputError("GF: inverse of zero");
        return inv_[a];
    }

private:
    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Dense matrix over F_q, row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r * c, 0) {}
    int& at(int i, int j) { return a[i * cols + j]; }
    int at(int i, int j) const { return a[i * cols + j]; }
    friend bool operator==(const Mat&, const Mat&) = default;
    friend auto operator<=>(const Mat&, const Mat&) = default;
};

Mat mat_mul(const GF& F, const Mat& x, const Mat& y);
Mat mat_identity(int n);
int mat_rank(const GF& F, Mat m);
bool mat_invertible(const GF& F, const Mat& m);
Mat mat_inverse(const GF& F, Mat m);

/// All r x c matrices in lexicographic entry order.
std::vector<Mat> all_matrices(const GF& F, int r, int c);
/// GL(n, F_q), cached per (n, q).
const std::vector<Mat>& general_linear_group(const GF& F, int n);
long long gl_order(int q, int n);

} // namespace htt::hall
