#pragma once

// Independent brute-force oracles used to freeze expected values in tests.
// Everything here is deliberately naive and shares no code with the library
// paths it checks.

#include <cstdint>
#include <vector>

namespace htt::oracles {

long long binomial(int n, int k);

/// Order-preserving maps [n] -> [m], counted by enumeration.
long long count_monotone_maps(int n, int m);

/// Order-preserving surjections [n] -> [m], counted by enumeration.
long long count_monotone_surjections(int n, int m);

/// Elementary divisors of an integer matrix via gcds of k x k minors
/// (determinantal divisors). Exponential; inputs must be tiny.
std::vector<long long> minor_gcd_divisors(const std::vector<std::vector<long long>>& m);

/// Number of k-dimensional subspaces of F_q^n for prime q, by enumerating row
/// spans of all k-tuples of vectors.
long long count_subspaces(int q, int n, int k);

} // namespace htt::oracles
