#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "htt/lifting.hpp"
#include "support/corpus.hpp"

using namespace htt;
using namespace htt::lifting;
using namespace htt::testsupport;
using simpset::SimplexRef;

TEST_CASE("horn enumeration on nerves") {
    const auto NE = fincat::nerve(walking_arrow(), 3);
    const auto h21 = enumerate_horns(NE, 2, 1);
    CHECK(h21.size() == 4); // composable pairs, degenerate edges included

    const auto pt = simpset::standard_simplex(0, 2);
    CHECK(enumerate_horns(pt, 2, 0).size() == 1);

    const auto b2 = simpset::boundary(2, 2);
    const auto probs = enumerate_horns(b2, 2, 1);
    bool found = false;
    for (const auto& p : probs) {
        // the problem whose faces are the two nondegenerate edges 12 and 01
        if (!p.faces[0].degenerate() && !p.faces[2].degenerate() &&
            b2.cells[1][p.faces[0].base].name == "12" &&
            b2.cells[1][p.faces[2].base].name == "01")
            found = true;
    }
    CHECK(found);
}

TEST_CASE("indexed enumeration agrees with the exhaustive scan") {
    for (const auto& e : corpus()) {
        if (e.category.morphism_count() > 6) continue;
        const auto N = fincat::nerve(e.category, 3);
        for (int n = 2; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                auto a = enumerate_horns(N, n, k);
                auto b = enumerate_horns_reference(N, n, k);
                auto key = [](const HornProblem& p) { return p.faces; };
                std::sort(a.begin(), a.end(),
                          [&](auto& x, auto& y) { return key(x) < key(y); });
                std::sort(b.begin(), b.end(),
                          [&](auto& x, auto& y) { return key(x) < key(y); });
                REQUIRE(a.size() == b.size());
                for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
            }
    }
}

TEST_CASE("fillers") {
    const auto E = walking_arrow();
    const auto NE = fincat::nerve(E, 3);
    // inner horn (f, then id_y): unique composite filler
    HornProblem p{2, 1, {}};
    p.faces.resize(3);
    p.faces[0] = simpset::apply_degeneracy(SimplexRef{0, 1, {}}, 0); // id_y edge
    p.faces[2] = SimplexRef{1, 0, {}};                               // f
    CHECK(fillers(NE, p).size() == 1);

    const auto b2 = simpset::boundary(2, 2);
    HornProblem q{2, 1, {}};
    q.faces.resize(3);
    q.faces[0] = SimplexRef{1, 2, {}}; // edge 12
    q.faces[2] = SimplexRef{1, 0, {}}; // edge 01
    CHECK(fillers(b2, q).empty());

    const auto ND = fincat::nerve(walking_iso(), 3);
    for (const auto& prob : enumerate_horns(ND, 2, 0))
        CHECK(!fillers(ND, prob).empty());
}

TEST_CASE("kan and quasi-category classification of nerves") {
    const auto ND = fincat::nerve(walking_iso(), 4);
    const auto repD = analyze(ND, 3);
    CHECK(repD.kan);
    CHECK(repD.nerve_of_groupoid());

    const auto NE = fincat::nerve(walking_arrow(), 3);
    const auto repE = analyze(NE, 3);
    CHECK(repE.quasicategory);
    CHECK(repE.inner_unique);
    CHECK(!repE.kan);
    REQUIRE(repE.kan_witness.has_value());
    CHECK(repE.kan_witness->n == 2);
    CHECK((repE.kan_witness->k == 0 || repE.kan_witness->k == 2));

    const auto b2 = simpset::boundary(2, 2);
    CHECK(!analyze(b2, 2).quasicategory);
}

TEST_CASE("serial and parallel analyze agree") {
    for (const auto& e : corpus()) {
        if (e.category.morphism_count() > 8) continue;
        const auto N = fincat::nerve(e.category, 3);
        const auto a = analyze(N, 3, Exec::Serial);
        const auto b = analyze(N, 3, Exec::Parallel);
        REQUIRE(a.lines.size() == b.lines.size());
        for (size_t i = 0; i < a.lines.size(); ++i) {
            CHECK(a.lines[i].total == b.lines[i].total);
            CHECK(a.lines[i].unfilled == b.lines[i].unfilled);
            CHECK(a.lines[i].multifilled == b.lines[i].multifilled);
        }
    }
}

TEST_CASE("nerve classification corpus-wide with reconstruction") {
    int groupoids = 0, nongroupoids = 0;
    for (const auto& e : corpus()) {
        INFO(e.name);
        const auto N = fincat::nerve(e.category, 3);
        const auto rep = analyze(N, 3);
        CHECK(rep.nerve_of_category());
        if (fincat::is_groupoid(e.category)) {
            ++groupoids;
            CHECK(rep.kan);
            CHECK(rep.nerve_of_groupoid());
        } else {
            ++nongroupoids;
            CHECK(!rep.kan);
            REQUIRE(rep.kan_witness.has_value());
            CHECK(rep.kan_witness->n == 2);
            CHECK((rep.kan_witness->k == 0 || rep.kan_witness->k == 2));
        }
        const auto rec = reconstruct_category(N, 3);
        REQUIRE_MESSAGE(rec.ok, rec.detail);
        CHECK(fincat::verify_category(rec.category).ok());
        CHECK(rec.category.morphism_count() == e.category.morphism_count());
    }
    CHECK(groupoids >= 8);
    CHECK(nongroupoids >= 30);
}

TEST_CASE("non-nerve complexes are rejected") {
    // the 2-sphere boundary(3) fills nothing at dimension 3
    const auto b3 = simpset::boundary(3, 3);
    const auto rep = analyze(b3, 3);
    CHECK(!rep.quasicategory);
    CHECK(!reconstruct_category(b3, 3).ok);
}

TEST_CASE("report format lines") {
    const auto NE = fincat::nerve(walking_arrow(), 2);
    const auto rep = analyze(NE, 2);
    const auto text = format_report(rep);
    CHECK(text.find("2 1 4 0 0") != std::string::npos);
}
