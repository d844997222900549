#include "doctest.h"

#include "curvebound/json_io.hpp"
#include "curvebound/replay.hpp"

using namespace curvebound;

namespace {

std::string roundtrip(const Json& j) { return dump(Json::parse(dump(j))); }

}  // namespace

TEST_CASE("json integers and fractions") {
    CHECK(to_json(Integer(7)).dump() == "7");
    Integer big("123456789012345678901234567890");
    CHECK(to_json(big).dump() == "\"123456789012345678901234567890\"");
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(integer_from_json(Json(-5)) == -5);
    CHECK(to_json(Rational(3, 6)).dump() == "\"1/2\"");
    CHECK(rational_from_json(Json("6/8")) == Rational(3, 4));
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("weil data and counts round trip") {
    auto wd = weil_data_from_h(7, 4, IntPolynomial{125, 200, 90, 16, 1});
    Json j = to_json(wd);
    CHECK(j.dump().rfind("{\"q\":7,\"g\":4,\"L\":", 0) == 0);
    auto back = weil_data_from_json(j);
    CHECK(back.L == wd.L);
    CHECK(back.h == wd.h);
    CHECK(back.N == wd.N);
    CHECK(back.a == wd.a);
    CHECK(roundtrip(j) == dump(j));

    PointCountVector v{7, {13, 39}};
    CHECK(to_json(v).dump() == "{\"q\":7,\"N\":[13,39]}");
    CHECK(counts_from_json(to_json(v)).counts == v.counts);
}

TEST_CASE("factorizations and certificates round trip") {
    Factorization f{{IntPolynomial{3, 1}, 3}, {IntPolynomial{4, 1}, 7}};
    CHECK(to_json(f).dump() == "[[[3,1],3],[[4,1],7]]");
    CHECK(factorization_from_json(to_json(f)) == f);

    auto c = optimize_u(7, 4, 3);
    Json j = to_json(c);
    CHECK(roundtrip(j) == dump(j));
    auto back = certificate_from_json(j);
    CHECK(back.u == c.u);
    CHECK(back.floor == 25);
    j["floor"] = 24;
    CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
}

TEST_CASE("replay with forward verification") {
    ReplayOptions o;
    o.genus10_search = SearchMode::ForwardOnly;
    auto r = replay_theorem(o);
    REQUIRE(r.steps.size() == 9);
    CHECK(r.count(StepStatus::External) == 1);
    CHECK(r.count(StepStatus::Failed) == 0);
    CHECK(r.steps[4].status == StepStatus::External);
    CHECK(r.steps[7].status == StepStatus::Flagged);
    CHECK(r.verdict == "FLAGGED");
    // The extra case-I pattern is flagged and then killed by the bound at genus 7.
    bool flagged_c3 = false;
    for (const auto& f : r.steps[5].flags) flagged_c3 = flagged_c3 || f.find("{C3} (g_bar=7, N_bar=48)") != std::string::npos;
    CHECK(flagged_c3);
    CHECK(r.steps[5].status == StepStatus::Verified);
    CHECK(r.steps[6].status == StepStatus::Verified);

    auto j = to_json(r);
    CHECK(roundtrip(j) == dump(j));
    CHECK(dump(to_json(replay_theorem(o))) == dump(j));

    o.skip_external = true;
    auto s = replay_theorem(o);
    CHECK(s.steps[4].status == StepStatus::External);
    CHECK(s.steps[4].outputs.empty());
    for (std::size_t i = 0; i < s.steps.size(); ++i) CHECK(s.steps[i].status == r.steps[i].status);
}

TEST_CASE("replay without the a2 filter") {
    ReplayOptions o;
    o.a2_filter = false;
    o.genus10_search = SearchMode::ForwardOnly;
    auto r = replay_theorem(o);
    CHECK(r.verdict == "FLAGGED");
    CHECK(r.steps[5].status == StepStatus::Flagged);
    CHECK(r.steps[6].status == StepStatus::Flagged);
    bool mentions = false;
    for (const auto& f : r.steps[6].flags) mentions = mentions || f.find("(7,1,2,0,0)@10") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("search and covers json round trip") {
    SearchConstraints c;
    c.q = 7;
    c.g = 4;
    c.N = 25;
    Json s = to_json(enumerate_real_weil(c));
    CHECK(roundtrip(s) == dump(s));
    CHECK(s["candidates"].size() == 1);
    CHECK(s["excluded"].size() == 3);
    Json cv = to_json(nongalois_profiles(25, 10, 4, 1, 1u));
    CHECK(roundtrip(cv) == dump(cv));
    CHECK(cv[0]["g_bar"].dump() == "[7,10]");
}
