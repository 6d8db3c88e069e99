#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "htt/simpset.hpp"
#include "htt/smith.hpp"
#include "support/oracles.hpp"

using namespace htt;
using namespace htt::simpset;

TEST_CASE("standard simplices") {
    const auto pt = standard_simplex(0);
    CHECK(pt.cell_count(0) == 1);
    CHECK(pt.top_nondegenerate_dim() == 0);

    const auto d2 = standard_simplex(2);
    CHECK(d2.cell_count(0) == 3);
    CHECK(d2.cell_count(1) == 3);
    CHECK(d2.cell_count(2) == 1);
    CHECK(verify_identities(d2).ok());

    // nondegenerate m-simplex counts are binomial(n+1, m+1)
    for (int n = 0; n <= 4; ++n) {
        const auto dn = standard_simplex(n);
        for (int m = 0; m <= n; ++m)
            CHECK(dn.cell_count(m) == oracles::binomial(n + 1, m + 1));
        CHECK(verify_identities(dn).ok());
    }
}

TEST_CASE("boundary and horn shapes") {
    const auto b1 = boundary(1);
    CHECK(b1.cell_count(0) == 2);
    CHECK(b1.cell_count(1) == 0);

    const auto b2 = boundary(2);
    CHECK(b2.cell_count(0) == 3);
    CHECK(b2.cell_count(1) == 3);
    CHECK(b2.dim_cap == 1);
    CHECK(pi0(b2).count == 1);

    const auto b0 = boundary(0);
    CHECK(b0.is_empty());

    const auto h20 = horn(2, 0);
    CHECK(h20.cell_count(1) == 2); // edges 01 and 02
    CHECK(h20.cells[1][0].name == "01");
    CHECK(h20.cells[1][1].name == "02");

    const auto h21 = horn(2, 1);
    CHECK(h21.cell_count(1) == 2); // edges 01 and 12
    CHECK(h21.cells[1][0].name == "01");
    CHECK(h21.cells[1][1].name == "12");

    const auto h10 = horn(1, 0);
    CHECK(h10.cell_count(0) == 1);
    CHECK(h10.cells[0][0].name == "0");

    CHECK_THROWS_AS(horn(2, 3), InputError);
}

TEST_CASE("normal form algebra") {
    // s_0 s_0 = s_1 s_0
    const SimplexRef v{0, 0, {}};
    const auto s0v = apply_degeneracy(v, 0);
    CHECK(apply_degeneracy(s0v, 0).word == DegeneracyWord{1, 0});
    CHECK(apply_degeneracy(s0v, 1).word == DegeneracyWord{1, 0});

    const auto d1 = standard_simplex(1, 3);
    const SimplexRef e{1, 0, {}};
    // d_i s_j identities on a sample of refs, via renormalization idempotence
    for (int j = 0; j <= 1; ++j) {
        const auto se = apply_degeneracy(e, j);
        CHECK(d1.face(se, j) == e);
        CHECK(d1.face(se, j + 1) == e);
    }
    // applying a face to a normal form yields a normal form (word decreasing)
    const auto ss = apply_degeneracy(apply_degeneracy(e, 1), 0);
    for (int i = 0; i <= 3; ++i) {
        const auto f = d1.face(ss, i);
        for (size_t t = 1; t < f.word.size(); ++t)
            CHECK(f.word[t - 1] > f.word[t]);
    }
}

TEST_CASE("counting total simplices") {
    CHECK(n_simplices(standard_simplex(0, 2), 2).size() == 1);
    CHECK(n_simplices(standard_simplex(1), 1).size() == 3);
    // surjection-count oracle: 3 edges * 2 + 3 vertices * 1 = 9, all degenerate
    const auto b2 = boundary(2, 2);
    const auto two = n_simplices(b2, 2);
    CHECK(two.size() == 9);
    for (const auto& r : two) CHECK(r.degenerate());
    int edge_based = 0;
    for (const auto& r : two)
        if (r.base_dim == 1) ++edge_based;
    CHECK(edge_based == 6);

    // |n_simplices(Delta[m], n)| equals the number of monotone maps [n] -> [m]
    for (int m = 0; m <= 3; ++m) {
        const auto dm = standard_simplex(m, 4);
        for (int n = 0; n <= 4; ++n)
            CHECK(n_simplices(dm, n).size() ==
                  static_cast<size_t>(oracles::count_monotone_maps(n, m)));
    }
    // counts split by base dimension match monotone surjection counts
    for (int m = 0; m <= 3; ++m) {
        const auto dm = standard_simplex(m, 3);
        for (int n = 0; n <= 3; ++n) {
            long long expected = 0;
            for (int b = 0; b <= n; ++b)
                expected += dm.cell_count(b) * oracles::count_monotone_surjections(n, b);
            CHECK(static_cast<long long>(n_simplices(dm, n).size()) == expected);
        }
    }
}

TEST_CASE("normal forms are unique and face application renormalizes") {
    const auto shapes = {standard_simplex(3, 4), boundary(3, 4), horn(3, 1, 3)};
    for (const auto& X : shapes) {
        for (int n = 1; n <= X.dim_cap; ++n) {
            auto refs = n_simplices(X, n);
            auto sorted = refs;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) ==
                  sorted.end()); // exactly one representation each
            for (const auto& r : refs) {
                CHECK(r.dim() == n);
                for (int i = 0; i <= n; ++i) {
                    const auto f = X.face(r, i);
                    CHECK(f.dim() == n - 1);
                    // the result is itself a normal form: strictly decreasing
                    // word over an existing base
                    for (size_t t = 1; t < f.word.size(); ++t)
                        CHECK(f.word[t - 1] > f.word[t]);
                    CHECK(f.base < X.cell_count(f.base_dim));
                    // and s_j d_j recovers r when r was degenerate at j
                    if (!r.word.empty()) {
                        const int j = r.word.front();
                        CHECK(apply_degeneracy(X.face(r, j), j) == r);
                    }
                }
            }
        }
    }
}

TEST_CASE("verify_identities flags a broken complex") {
    auto X = standard_simplex(2);
    // reroute one face of the triangle to a wrong edge
    X.cells[2][0].faces[0] = SimplexRef{1, 1, {}};
    const auto rep = verify_identities(X);
    CHECK(!rep.ok());
}

TEST_CASE("pi0") {
    const auto two_points = disjoint_union(standard_simplex(0), standard_simplex(0));
    CHECK(pi0(two_points).count == 2);
    CHECK(pi0(boundary(2)).count == 1);
    CHECK(pi0(boundary(1)).count == 2);
}

TEST_CASE("smith normal form") {
    const auto dd = smith::smith_normal_form({{2, 0}, {0, 3}});
    REQUIRE(dd.rank() == 2);
    CHECK(dd.divisors[0] == 1);
    CHECK(dd.divisors[1] == 6);

    // d1 = 2, d2 = 4, det = 624: invariant factors 2 | 2 | 156
    smith::Matrix m = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    const auto d = smith::smith_normal_form(m);
    REQUIRE(d.rank() == 3);
    CHECK(d.divisors[0] == 2);
    CHECK(d.divisors[1] == 2);
    CHECK(d.divisors[2] == 156);
    // independent determinantal-divisor oracle agrees
    const auto md = oracles::minor_gcd_divisors({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    REQUIRE(md.size() == 3);
    CHECK(md[0] == 2);
    CHECK(md[1] == 2);
    CHECK(md[2] == 156);

    // rectangular with a zero row
    const auto r = smith::smith_normal_form({{0, 0, 0}, {4, 6, 10}});
    REQUIRE(r.rank() == 1);
    CHECK(r.divisors[0] == 2);
}

TEST_CASE("homology of spheres and disks") {
    const auto d5 = standard_simplex(5);
    const auto h = homology(d5, 3);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
    CHECK(h.groups[2].betti == 0);
    CHECK(h.groups[3].betti == 0);
    for (const auto& g : h.groups) CHECK(g.torsion.empty());

    // boundary(3) defaults to cap 2, so only degrees 0..1 are certified there
    const auto b3 = boundary(3);
    CHECK(b3.dim_cap == 2);
    CHECK(homology(b3, 1).validity_bound == 1);
    CHECK_THROWS_AS(homology(b3, 2), InputError);
}

TEST_CASE("homology of the 2-sphere boundary(3)") {
    // boundary(3) has top cells in dimension 2; cap there is 2, so degrees
    // 0..1 are certified; raise the cap to certify degree 2.
    const auto b3 = boundary(3, 3);
    const auto h = homology(b3, 2);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
    CHECK(h.groups[2].betti == 1);
    CHECK(h.groups[0].torsion.empty());
    CHECK(h.groups[1].torsion.empty());
    CHECK(h.groups[2].torsion.empty());
    CHECK_THROWS_AS(homology(b3, 3), InputError);
}

TEST_CASE("euler characteristic equals alternating betti sum") {
    for (int n = 1; n <= 4; ++n) {
        const auto dn = standard_simplex(n, n + 1);
        const auto h = homology(dn, n);
        long long chi_h = 0;
        for (int i = 0; i <= n; ++i)
            chi_h += (i % 2 == 0 ? 1 : -1) * h.groups[i].betti;
        CHECK(euler_characteristic(dn) == chi_h);
    }
    const auto b3 = boundary(3, 3);
    const auto h = homology(b3, 2);
    CHECK(euler_characteristic(b3) == h.groups[0].betti - h.groups[1].betti +
                                          h.groups[2].betti);
}

TEST_CASE("pi0 count matches degree-0 betti") {
    const auto shapes = {boundary(2, 2), boundary(3, 3), standard_simplex(2, 3),
                         disjoint_union(boundary(2, 2), standard_simplex(0, 2))};
    for (const auto& X : shapes)
        CHECK(pi0(X).count == homology(X, 0).groups[0].betti);
}
