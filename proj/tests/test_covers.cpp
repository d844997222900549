#include "doctest.h"

#include <map>
#include <stdexcept>

#include "curvebound/covers.hpp"

using namespace curvebound;

namespace {

const CoveringCase* find(const std::vector<CoveringCase>& cases, SplittingProfile p) {
    for (const auto& c : cases)
        if (c.profile == p) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("galois splitting") {
    CHECK(different_degree(4, 1) == 6);
    auto g = galois_split_feasible(25, 10, 4, 1);
    REQUIRE(g.size() == 1);
    CHECK(g[0].s == 8);
    CHECK(g[0].r == 1);
    CHECK(g[0].i == 1);
    CHECK(g[0].residual == 4);
    CHECK(g[0].residual_places == std::vector<std::vector<unsigned>>{{2}});

    auto h = galois_split_feasible(24, 10, 4, 1);
    bool has_802 = false;
    for (const auto& x : h) has_802 = has_802 || (x.s == 8 && x.r == 0 && x.i == 2 && x.residual == 6);
    CHECK(has_802);

    auto k = galois_split_feasible(30, 10, 4, 1);
    REQUIRE(k.size() == 1);
    CHECK((k[0].s == 10 && k[0].r == 0 && k[0].i == 0 && k[0].residual == 6));
    CHECK_THROWS_AS(galois_split_feasible(25, 10, 4, 1, 9), std::invalid_argument);
}

TEST_CASE("non-galois profiles reproduce the five cases") {
    auto cases = nongalois_profiles(25, 10, 4, 1, 1u);
    std::vector<const CoveringCase*> kept;
    for (const auto& c : cases)
        if (!c.excluded) kept.push_back(&c);
    REQUIRE(kept.size() == 5);
    const std::vector<SplittingProfile> expected{{8, 0, 1, 0, 1}, {8, 0, 0, 1, 1}, {7, 2, 0, 0, 1}, {7, 1, 1, 1, 0}, {6, 3, 1, 0, 0}};
    const std::vector<unsigned> nbar{48, 50, 48, 47, 45};
    const std::vector<std::set<int>> expected_genera{{10}, {7, 9}, {8, 10}, {9}, {10}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(kept[i]->profile == expected[i]);
        CHECK(kept[i]->label == roman(i + 1));
        CHECK(kept[i]->N_bar == nbar[i]);
        auto gs = kept[i]->genus_set();
        for (int g : expected_genera[i]) CHECK(gs.count(g) == 1);
    }
    // Case I also admits a single C-type place of degree 3.
    CHECK(kept[0]->genus_set() == std::set<int>{7, 10});
    CHECK(kept[1]->genus_set() == std::set<int>{7, 9});
    CHECK(kept[2]->genus_set() == std::set<int>{8, 10});
    CHECK(kept[3]->genus_set() == std::set<int>{9});
    CHECK(kept[4]->genus_set() == std::set<int>{10});

    auto* extra = find(cases, {7, 1, 2, 0, 0});
    REQUIRE(extra != nullptr);
    CHECK(extra->excluded);
    CHECK(cases.size() == 6);
}

TEST_CASE("invariants of every emitted case") {
    for (std::optional<unsigned> a2 : {std::optional<unsigned>{}, std::optional<unsigned>{1}}) {
        for (unsigned NX : {22u, 24u, 25u, 27u}) {
            for (const auto& c : nongalois_profiles(NX, 10, 4, 1, a2)) {
                const auto& p = c.profile;
                CHECK(3 * p.a + 2 * p.b + p.bp + p.c == NX);
                CHECK(p.a + p.b + p.bp + p.c + p.cp == 10);
                CHECK(c.N_bar == 6 * p.a + 3 * p.b + 2 * p.c);
                for (const auto& pat : c.patterns) {
                    unsigned sum = p.b + 2 * p.c;
                    for (const auto& part : pat.parts) sum += part.different_contribution();
                    CHECK(sum == 6);
                    CHECK(pat.deg_Dbar % 2 == 0);
                    CHECK(pat.g_bar == static_cast<int>(pat.deg_Dbar / 2 + 1));
                    CHECK(pat.g_bar >= 1);
                    if (!a2) CHECK_FALSE(pat.excluded);
                }
            }
        }
    }
    // The filter only removes items.
    auto all = nongalois_profiles(25, 10, 4, 1, std::nullopt);
    auto filtered = nongalois_profiles(25, 10, 4, 1, 1u);
    CHECK(all.size() == filtered.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].profile == filtered[i].profile);
        CHECK(all[i].patterns.size() == filtered[i].patterns.size());
    }
    CHECK_THROWS_AS(nongalois_profiles(25, 10, 4, 1, 1u, 5), std::invalid_argument);
}

TEST_CASE("residual pattern labels") {
    CHECK(to_string(ResidualPart{PartType::C, 3}) == "C3");
    CHECK(to_string(std::vector<ResidualPart>{{PartType::B, 2}, {PartType::C, 2}}) == "{B2,C2}");
    CHECK(to_string(SplittingProfile{6, 3, 1, 0, 0}) == "(6,3,1,0,0)");
    CHECK(roman(4) == "IV");
    CHECK(roman(9) == "IX");
}
