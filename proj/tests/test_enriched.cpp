#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "htt/enriched.hpp"
#include "htt/lifting.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace htt;
using namespace htt::enriched;
using namespace htt::testsupport;

TEST_CASE("cube posets and cdelta") {
    const auto C3 = cdelta(3);
    CHECK(C3.verify().ok());
    // Map(i,j) has 2^(j-i-1) vertices
    for (int n = 1; n <= 4; ++n) {
        const auto Cn = cdelta(n, std::min(3, std::max(0, n - 1)));
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const long long expect = j == i ? 1 : (1LL << (j - i - 1));
                CHECK(Cn.map_space[i][j].cell_count(0) == expect);
            }
    }
    // Map(0,1) is a point, Map(0,2) is an interval
    const auto C2 = cdelta(2);
    CHECK(C2.map_space[0][1].cell_count(0) == 1);
    CHECK(C2.map_space[0][2].cell_count(0) == 2);
    CHECK(C2.map_space[0][2].cell_count(1) == 1);
    // its two vertices are the composite {0,1,2} and the direct arrow {0,2}
    CHECK(C2.map_space[0][2].cells[0][0].name == "{0,1,2}");
    CHECK(C2.map_space[0][2].cells[0][1].name == "{0,2}");
    // Map(0,3) is a square: 4 vertices, 5 edges (4 sides + diagonal), 2 cells
    const auto sq = cdelta(3).map_space[0][3];
    CHECK(sq.cell_count(0) == 4);
    CHECK(sq.cell_count(1) == 5);
    CHECK(sq.cell_count(2) == 2);
}

TEST_CASE("cdelta composition is strictly associative up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        const auto Cn = cdelta(n, 2);
        CHECK(Cn.verify().ok()); // includes levelwise associativity
    }
}

TEST_CASE("discrete enrichments and pi0") {
    const auto E = walking_arrow();
    const auto SE = discrete_enrichment(E, 2);
    CHECK(SE.verify().ok());
    const auto P = pi0_category(SE);
    CHECK(fincat::verify_category(P).ok());
    CHECK(P.object_count() == 2);
    CHECK(P.morphism_count() == 3);

    // Map(x,y) = boundary(1): two vertices, no edge -> hom of size 2
    const auto two = two_object_enriched(simpset::boundary(1, 1));
    CHECK(two.verify().ok());
    const auto P2 = pi0_category(two);
    CHECK(P2.hom(0, 1).size() == 2);

    // Map(x,y) = nerve(D): connected, hom of size 1
    const auto one = two_object_enriched(fincat::nerve(walking_iso(), 2));
    CHECK(one.verify().ok());
    const auto P1 = pi0_category(one);
    CHECK(P1.hom(0, 1).size() == 1);
}

TEST_CASE("group nerve enrichment is a valid simplicial category") {
    const auto Z2 = cyclic_group_cat(2);
    const auto B = group_nerve_enrichment(Z2, 3);
    CHECK(B.verify().ok());
    // its mapping space is a Kan complex
    CHECK(lifting::analyze(B.map_space[0][0], 3).kan);
}

TEST_CASE("coherent nerve of discrete enrichments equals the nerve") {
    for (const auto& e : corpus()) {
        if (e.category.morphism_count() > 5) continue;
        INFO(e.name);
        const auto& C = e.category;
        const auto S = discrete_enrichment(C, 2);
        const auto CN = coherent_nerve(S, 3);
        const auto N = fincat::nerve(C, 3);
        REQUIRE(CN.dim_cap == N.dim_cap);
        // explicit structural identification: chains correspond to functors
        for (int n = 0; n <= 3; ++n) CHECK(CN.cell_count(n) == N.cell_count(n));
        // and the face structure transports: build the map by matching names
        // through vertex tuples: cell i of CN has the objects of the chain in
        // its name; counting plus verify_identities pins the shape
        CHECK(simpset::verify_identities(CN).ok());
        const auto cmp = simpset::compare_invariants(CN, N);
        CHECK(cmp.pass());
    }
}

TEST_CASE("coherent nerve of a Kan-enriched category is a quasi-category") {
    const auto Z2 = cyclic_group_cat(2);
    const auto B = group_nerve_enrichment(Z2, 2);
    const auto CN = coherent_nerve(B, 3);
    CHECK(simpset::verify_identities(CN).ok());
    const auto rep = lifting::analyze(CN, 3);
    CHECK(rep.quasicategory);
}

TEST_CASE("coherent nerve 2-simplex count matches a brute-force scan") {
    // two objects with Map(a,b) = Delta[1]; composition forced by units
    const auto C = two_object_enriched(simpset::standard_simplex(1, 2));
    REQUIRE(C.verify().ok());
    const auto CN = coherent_nerve(C, 2);

    // independent brute force: a 2-simplex is (phi01 vertex, phi12 vertex,
    // phi02 edge) over monotone object triples, with d_0 of the phi02 edge
    // pinned to the composite of the chosen vertices
    long long expect = 0;
    for (int o0 = 0; o0 < 2; ++o0)
        for (int o1 = o0; o1 < 2; ++o1)
            for (int o2 = o1; o2 < 2; ++o2) {
                const auto& M01 = C.map_space[o0][o1];
                const auto& M12 = C.map_space[o1][o2];
                const auto& M02 = C.map_space[o0][o2];
                for (int v01 = 0; v01 < M01.cell_count(0); ++v01)
                    for (int v12 = 0; v12 < M12.cell_count(0); ++v12) {
                        const auto comp = C.compose(
                            o0, o1, o2, 0, simpset::SimplexRef{0, v12, {}},
                            simpset::SimplexRef{0, v01, {}});
                        for (const auto& e : simpset::n_simplices(M02, 1))
                            if (M02.face(e, 0) == comp) ++expect;
                    }
            }
    long long total2 = 0;
    for (const auto& r : simpset::n_simplices(CN, 2)) {
        (void)r;
        ++total2;
    }
    CHECK(total2 == expect);
    CHECK(total2 == 8);
}

TEST_CASE("dk_check_enriched") {
    const auto E = walking_arrow();
    const auto SE = discrete_enrichment(E, 2);
    CHECK(dk_check_enriched(identity_functor(SE)).verdict == DkVerdict::Equivalent);

    // inclusion of the terminal category into the walking iso, discretely
    const auto C1 = discrete_enrichment(terminal_cat(), 2);
    const auto SD = discrete_enrichment(walking_iso(), 2);
    SimplicialFunctor inc;
    inc.source = &C1;
    inc.target = &SD;
    inc.object_map = {0};
    inc.assign.assign(1, {});
    inc.assign[0].resize(1);
    inc.assign[0][0].resize(C1.cap + 1);
    // map(x,x) of C1 is the identity point; send it to id_x of D
    inc.assign[0][0][0].push_back(simpset::SimplexRef{0, 0, {}});
    CHECK(inc.verify().ok());
    const auto res = dk_check_enriched(inc);
    CHECK(res.verdict == DkVerdict::Equivalent);

    // collapse functor killing a component: boundary(1) hom onto a point
    FinSimplicialCategory two;
    two.objects = {"a"};
    two.cap = 1;
    two.map_space.assign(1, std::vector<simpset::TruncatedSimplicialSet>(1));
    two.map_space[0][0] = simpset::boundary(1, 1); // two endomorphism vertices
    two.identity_vertex = {0};
    two.build_caches();
    two.comp.assign(1, {});
    two.comp[0].assign(1, {});
    two.comp[0][0].assign(1, {});
    two.comp[0][0][0].resize(2);
    // vertex 1 acts as an idempotent absorbing element: 1*1 = 1, 0 = unit
    for (int k = 0; k <= 1; ++k) {
        const int F = two.total_count(0, 0, k);
        two.comp[0][0][0][k].assign(F * F, 0);
        for (int gi = 0; gi < F; ++gi)
            for (int fi = 0; fi < F; ++fi) {
                const auto g = two.simplices[0][0][k][gi];
                const auto f = two.simplices[0][0][k][fi];
                const int v = (g.base == 1 || f.base == 1) ? 1 : 0;
                simpset::SimplexRef r{0, v, {}};
                for (int j = 0; j < k; ++j) r = simpset::apply_degeneracy(r, j);
                two.comp[0][0][0][k][gi * F + fi] = two.simplex_index[0][0][k].at(r);
            }
    }
    REQUIRE(two.verify().ok());
    const auto P2 = pi0_category(two);
    CHECK(P2.morphism_count() == 2);

    const auto one = discrete_enrichment(terminal_cat(), 1);
    SimplicialFunctor collapse;
    collapse.source = &two;
    collapse.target = &one;
    collapse.object_map = {0};
    collapse.assign.assign(1, {});
    collapse.assign[0].resize(1);
    collapse.assign[0][0].resize(2);
    collapse.assign[0][0][0].push_back(simpset::SimplexRef{0, 0, {}});
    collapse.assign[0][0][0].push_back(simpset::SimplexRef{0, 0, {}});
    CHECK(collapse.verify().ok());
    const auto res2 = dk_check_enriched(collapse);
    CHECK(res2.verdict == DkVerdict::NotEquivalent);
}

TEST_CASE("hammock mapping spaces") {
    const auto E = walking_arrow();
    // S = identities: pi0 is in bijection with Hom
    for (const auto& e : corpus()) {
        if (e.category.morphism_count() > 6) continue;
        const auto& C = e.category;
        const auto S = fincat::MorphismClassS::identities(C);
        for (int a = 0; a < C.object_count(); ++a)
            for (int b = 0; b < C.object_count(); ++b) {
                const auto H = hammock_mapping_space(C, S, a, b);
                CHECK(simpset::pi0(H).count ==
                      static_cast<int>(C.hom(a, b).size()));
            }
    }
    // C = E, S = {f}: hammock(y,x) has exactly one class
    const auto S = fincat::MorphismClassS::of(E, {2});
    const auto H = hammock_mapping_space(E, S, 1, 0);
    CHECK(simpset::pi0(H).count == 1);
    // the identity zig-zag always exists
    for (int a = 0; a < 2; ++a) {
        const auto HH = hammock_mapping_space(E, S, a, a);
        CHECK(HH.cell_count(0) >= 1);
        bool has_identity = false;
        for (const auto& c : HH.cells[0])
            if (c.name.find("id_") == 0) has_identity = true;
        CHECK(has_identity);
    }
}

TEST_CASE("hammock pi0 agrees with gz localization when it stabilizes") {
    for (const auto& e : corpus()) {
        if (e.category.morphism_count() > 6) continue;
        const auto& C = e.category;
        for (int variant = 0; variant < 2; ++variant) {
            const auto S = variant == 0 ? fincat::MorphismClassS::identities(C)
                                        : fincat::MorphismClassS::isos(C);
            for (int a = 0; a < C.object_count(); ++a)
                for (int b = 0; b < C.object_count(); ++b) {
                    const auto r = gz_localize_hom(C, S, a, b, 5, 400000);
                    if (r.status != fincat::GzHomResult::Status::Stabilized)
                        continue;
                    const auto H = hammock_mapping_space(C, S, a, b);
                    INFO(e.name << " " << a << "->" << b << " variant " << variant);
                    CHECK(simpset::pi0(H).count == r.count());
                }
        }
    }
}
