#include "curvebound/json_io.hpp"

#include <stdexcept>

namespace curvebound {

Json to_json(const Integer& x) {
    if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Json to_json(const Rational& x) {
    Rational r = x;
    r.canonicalize();
    return Json(r.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (!j.is_string()) throw std::invalid_argument("expected a fraction string, got " + j.dump());
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
}

Json to_json(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

std::vector<Integer> integers_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array");
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

Json to_json(const IntPolynomial& p) { return to_json(p.coeffs()); }

IntPolynomial polynomial_from_json(const Json& j) { return IntPolynomial(integers_from_json(j)); }

Json to_json(const PointCountVector& v) {
    Json j;
    j["q"] = to_json(v.q);
    j["N"] = to_json(v.counts);
    return j;
}

PointCountVector counts_from_json(const Json& j) { return {integer_from_json(j.at("q")), integers_from_json(j.at("N"))}; }

Json to_json(const WeilData& wd) {
    Json j;
    j["q"] = to_json(wd.q);
    j["g"] = wd.g;
    j["L"] = to_json(wd.L);
    j["h"] = to_json(wd.h);
    j["N"] = to_json(wd.N);
    j["a"] = to_json(wd.a);
    return j;
}

WeilData weil_data_from_json(const Json& j) {
    WeilData wd;
    wd.q = integer_from_json(j.at("q"));
    wd.g = j.at("g").get<int>();
    wd.L = polynomial_from_json(j.at("L"));
    wd.h = polynomial_from_json(j.at("h"));
    wd.N = integers_from_json(j.at("N"));
    wd.a = integers_from_json(j.at("a"));
    return wd;
}

Json to_json(const Factorization& f) {
    Json a = Json::array();
    for (const auto& [p, m] : f) a.push_back(Json::array({to_json(p), m}));
    return a;
}

Factorization factorization_from_json(const Json& j) {
    Factorization f;
    for (const auto& e : j) f.emplace_back(polynomial_from_json(e.at(0)), e.at(1).get<int>());
    return f;
}

Json to_json(const ExclusionVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.status == ExclusionStatus::Excluded) {
        j["h1"] = to_json(v.h1);
        j["h2"] = to_json(v.h2);
        j["resultant"] = to_json(v.resultant);
    } else if (v.status == ExclusionStatus::EllipticMap) {
        j["mu"] = to_json(v.mu);
        j["r"] = to_json(v.r);
    }
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

namespace {

Json candidate_json(const WeilCandidate& c) {
    Json j;
    j["h"] = to_json(c.h);
    j["factors"] = to_json(c.factors);
    j["factored"] = format_factorization(c.factors);
    j["a"] = to_json(c.a);
    return j;
}

}  // namespace

Json to_json(const SearchResult& r) {
    Json j;
    j["candidates"] = Json::array();
    for (const auto& c : r.candidates) j["candidates"].push_back(candidate_json(c));
    j["excluded"] = Json::array();
    for (const auto& e : r.excluded) {
        Json x = candidate_json(e.candidate);
        x["verdict"] = to_json(e.verdict);
        j["excluded"].push_back(std::move(x));
    }
    Json sizes = Json::array();
    for (std::size_t d = 1; d < r.stats.table_sizes.size(); ++d) sizes.push_back(r.stats.table_sizes[d]);
    j["factor_table_sizes"] = sizes;
    j["nodes"] = r.stats.nodes;
    return j;
}

Json to_json(const GaloisSplit& s) {
    Json j;
    j["s"] = s.s;
    j["r"] = s.r;
    j["i"] = s.i;
    j["residual_degree"] = s.residual;
    j["residual_places"] = s.residual_places;
    return j;
}

Json to_json(const CoveringCase& c) {
    Json j;
    j["label"] = c.label;
    j["a"] = c.profile.a;
    j["b"] = c.profile.b;
    j["b'"] = c.profile.bp;
    j["c"] = c.profile.c;
    j["c'"] = c.profile.cp;
    j["N_bar"] = c.N_bar;
    auto gs = c.genus_set();
    j["g_bar"] = Json(std::vector<int>(gs.begin(), gs.end()));
    j["excluded"] = c.excluded;
    if (c.excluded) j["reason"] = c.reason;
    Json pats = Json::array();
    for (const auto& p : c.patterns) {
        Json x;
        x["parts"] = to_string(p.parts);
        x["deg_D_bar"] = p.deg_Dbar;
        x["g_bar"] = p.g_bar;
        x["degree2_places"] = p.degree2_places;
        x["excluded"] = p.excluded;
        if (p.excluded) x["reason"] = p.reason;
        pats.push_back(std::move(x));
    }
    j["patterns"] = pats;
    return j;
}

Json to_json(const std::vector<CoveringCase>& cases) {
    Json a = Json::array();
    for (const auto& c : cases) a.push_back(to_json(c));
    return a;
}

Json to_json(const BoundCertificate& c) {
    Json j;
    j["q"] = to_json(c.q);
    j["g"] = c.g;
    Json u = Json::array();
    for (const auto& x : c.u) u.push_back(to_json(x));
    j["u"] = u;
    j["bound"] = {{"rational", to_json(c.bound.c)}, {"sqrt_q_coefficient", to_json(c.bound.d)}};
    j["floor"] = to_json(c.floor);
    Json w;
    w["P"] = to_json(c.witness.P);
    Json fs = Json::array();
    for (std::size_t i = 0; i < c.witness.factors.size(); ++i)
        fs.push_back({{"factor", to_json(c.witness.factors[i].first)}, {"multiplicity", c.witness.factors[i].second}, {"roots_in_open_interval", c.witness.interior_roots[i]}});
    w["squarefree_factors"] = fs;
    w["positive_at"] = to_json(c.witness.sample_point);
    j["nonnegativity"] = w;
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    std::vector<Rational> u;
    for (const auto& x : j.at("u")) u.push_back(rational_from_json(x));
    auto c = bound_from_u(integer_from_json(j.at("q")), j.at("g").get<int>(), u);
    SqrtQValue stored{rational_from_json(j.at("bound").at("rational")), rational_from_json(j.at("bound").at("sqrt_q_coefficient")), c.q};
    if ((stored - c.bound).sign() != 0 || integer_from_json(j.at("floor")) != c.floor) throw std::invalid_argument("certificate does not match its trial function");
    return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvebound
