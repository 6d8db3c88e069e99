#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace htt::smith {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>; // row-major, rectangular

struct Diagonal {
    std::vector<Int> divisors; // nonzero elementary divisors, d_i | d_{i+1}, all positive
    int rank() const { return static_cast<int>(divisors.size()); }
};

/// Smith normal form over Z. The input matrix is consumed.
Diagonal smith_normal_form(Matrix m);

} // namespace htt::smith
