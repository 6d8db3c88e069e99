#include "htt/smith.hpp"

#include <cstdlib>

namespace htt::smith {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

Diagonal smith_normal_form(Matrix m) {
    Diagonal out;
    if (m.empty() || m[0].empty()) return out;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());

    int t = 0;
    while (t < rows && t < cols) {
        // Pick the nonzero entry of smallest absolute value in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || int_abs(m[i][j]) < int_abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // trailing block is zero

        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    // remainder strictly smaller: promote it to pivot and restart
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the whole trailing block.
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int c = t; c < cols; ++c) m[t][c] += m[i][c];
                        clean = false;
                    }
        }
        out.divisors.push_back(int_abs(m[t][t]));
        ++t;
    }
    return out;
}

} // namespace htt::smith
