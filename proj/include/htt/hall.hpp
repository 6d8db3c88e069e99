#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "htt/base.hpp"
#include "htt/gf.hpp"

namespace htt::hall {

using Rational = boost::multiprecision::cpp_rational;

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;
    };
    std::vector<Arrow> arrows;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }
};

using DimVec = std::vector<int>;

/// F_q-representation: a matrix of shape dims[tgt] x dims[src] per arrow.
struct Rep {
    int q = 2;
    DimVec dims;
    std::vector<Mat> matrices;

    friend bool operator==(const Rep&, const Rep&) = default;
};

struct RepClass {
    Rep representative; // lexicographically minimal in its orbit
    long long aut_order = 1;
};

/// Exhaustive orbit classification of all arrow-matrix tuples under the
/// product of general linear groups. The parallel kernel canonicalizes each
/// tuple independently; the serial reference walks orbits directly. Both
/// agree exactly.
std::vector<RepClass> enumerate_reps(const Quiver& Q, int q, const DimVec& dims,
                                     long long budget = 30000000,
                                     Exec exec = Exec::Parallel);

struct IsoClassTable {
    const Quiver* quiver = nullptr;
    int q = 2;
    DimVec bound;
    std::map<DimVec, std::vector<RepClass>> classes;

    const std::vector<RepClass>& at(const DimVec& d) const;
};

/// Tables for every dimension vector componentwise below the bound.
IsoClassTable build_class_table(const Quiver& Q, int q, const DimVec& bound,
                                long long budget = 30000000,
                                Exec exec = Exec::Parallel);

long long aut_order(const Quiver& Q, const Rep& X);

/// Number of subobject occurrences: pairs (mono X -> Z, epi Z -> Y) with
/// exact matching, divided by |Aut X| |Aut Y|. Exact rational; integrality is
/// checked by callers via the is_integer helper.
Rational hall_number(const Quiver& Q, const Rep& X, const Rep& Y, const Rep& Z,
                     Exec exec = Exec::Parallel);

bool is_integer(const Rational& r);

/// Formal rational combination of classes of the table, keyed by
/// (dimension vector, class index).
struct HallProduct {
    std::vector<std::pair<std::pair<DimVec, int>, Rational>> terms;
};

HallProduct hall_product(const Quiver& Q, const Rep& X, const Rep& Y,
                         const IsoClassTable& table);

struct AssocReport {
    std::vector<std::string> violations; // associativity or integrality
    bool ok() const { return violations.empty(); }
};

/// Coefficientwise comparison of ([X][Y])[Z] against [X]([Y][Z]) for all
/// class triples whose dimension sum stays within the table bound.
AssocReport hall_associativity(const Quiver& Q, const IsoClassTable& table);

// ---------------------------------------------------------------------------
// derived Hall algebra over bounded graded F_q vector spaces

/// Bounded Z-graded vector space, identified with its dimension profile
/// (the semisimple case: iso class = dimensions).
struct GradedVect {
    int q = 2;
    int lo = 0;            // lowest degree of the window
    std::vector<int> dims; // dims[k - lo]

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim_at(int k) const {
        if (k < lo || k > hi()) return 0;
        return dims[k - lo];
    }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    GradedVect trimmed() const; // canonical form: support-tight window

    friend bool operator==(const GradedVect& a, const GradedVect& b) {
        return a.q == b.q && a.trimmed_key() == b.trimmed_key();
    }
    std::pair<int, std::vector<int>> trimmed_key() const;
};

/// shift(x, i)_k = x_{k+i}
GradedVect shift(const GradedVect& x, int i);

/// |Hom| in the homotopy category of complexes with zero differentials:
/// q^(sum_k x_k z_k).
long long hom_count(const GradedVect& x, const GradedVect& z);

/// Maps x -> z whose cone coker(f) + ker(f)[1] has the dimensions of y.
long long hom_count_with_cone(const GradedVect& x, const GradedVect& z,
                              const GradedVect& y);

/// Rank distribution of rows x cols matrices over F_q (q-binomial counting).
std::vector<long long> matrix_rank_counts(int q, int rows, int cols);

long long aut_order_graded(const GradedVect& x);

Rational derived_hall_number(const GradedVect& x, const GradedVect& y,
                             const GradedVect& z);

struct DerivedTerm {
    GradedVect cls;
    Rational coeff;
};

/// [x]·[y] with exact support (cone constraints bound the profiles).
std::vector<DerivedTerm> derived_hall_product(const GradedVect& x,
                                              const GradedVect& y);

/// All classes in the window with total dimension <= bound.
std::vector<GradedVect> graded_classes(int q, int lo, int hi, int bound);

/// Coefficientwise associativity over all class triples in the window with
/// total dimension of each factor <= bound.
AssocReport derived_associativity(int q, int lo, int hi, int bound,
                                  Exec exec = Exec::Parallel);

} // namespace htt::hall
