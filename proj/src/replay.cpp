#include "curvebound/replay.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace curvebound {

const char* to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Verified:
            return "VERIFIED";
        case StepStatus::External:
            return "EXTERNAL";
        case StepStatus::Flagged:
            return "FLAGGED";
        case StepStatus::Failed:
            return "FAILED";
    }
    return "?";
}

std::size_t ProofReport::count(StepStatus s) const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [s](const ReportStep& x) { return x.status == s; }));
}

namespace {

const Integer kQ = 7;

IntPolynomial lin(long c) { return IntPolynomial{c, 1}; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string set_string(const std::set<int>& s) {
    std::vector<std::string> xs;
    for (int x : s) xs.push_back(std::to_string(x));
    return "{" + join(xs, ",") + "}";
}

std::string u_string(const std::vector<Rational>& u) {
    std::vector<std::string> xs;
    for (const auto& x : u) xs.push_back(x.get_str());
    return "[" + join(xs, ", ") + "]";
}

/// Thrown inside a step to record a failing witness.
struct StepFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw StepFailure(what);
}

struct ExpectedRow {
    SplittingProfile profile;
    unsigned N_bar;
    std::set<int> g_bar;
};

const std::vector<ExpectedRow>& table_rows() {
    static const std::vector<ExpectedRow> rows{
        {{8, 0, 1, 0, 1}, 48, {10}},
        {{8, 0, 0, 1, 1}, 50, {7, 9}},
        {{7, 2, 0, 0, 1}, 48, {8, 10}},
        {{7, 1, 1, 1, 0}, 47, {9}},
        {{6, 3, 1, 0, 0}, 45, {10}},
    };
    return rows;
}

class Replayer {
   public:
    explicit Replayer(const ReplayOptions& o) : opts_(o) {}

    ProofReport run() {
        add(&Replayer::step_upper_bound);
        add(&Replayer::step_search_genus4);
        add(&Replayer::step_elliptic_map);
        add(&Replayer::step_galois_split);
        add(&Replayer::step_ray_class_field);
        add(&Replayer::step_nongalois_table);
        add(&Replayer::step_closure_bounds);
        add(&Replayer::step_search_genus10);
        add(&Replayer::step_curve_C);

        bool failed = report_.count(StepStatus::Failed) > 0;
        bool flagged = report_.count(StepStatus::Flagged) > 0;
        report_.verdict = failed ? "FAILED" : flagged ? "FLAGGED" : "VERIFIED";
        report_.conclusion = failed    ? "replay aborted; see the failing step"
                             : flagged ? "N_7(4) = 24 subject to the flagged steps"
                                       : "N_7(4) = 24: every genus-4 curve over F_7 has at most 24 rational points and curve C attains 24";
        return std::move(report_);
    }

   private:
    using StepFn = void (Replayer::*)(ReportStep&);

    void add(StepFn fn) {
        if (aborted_) return;
        ReportStep s;
        s.index = static_cast<int>(report_.steps.size()) + 1;
        s.witness = Json::object();
        try {
            (this->*fn)(s);
        } catch (const std::exception& e) {
            s.status = StepStatus::Failed;
            s.outputs.emplace_back("failure", e.what());
            s.witness["failure"] = e.what();
            aborted_ = true;
        }
        report_.steps.push_back(std::move(s));
    }

    const BoundCertificate& cert(int g) {
        auto it = certs_.find(g);
        if (it == certs_.end()) it = certs_.emplace(g, optimize_u(kQ, g, opts_.bound_degree)).first;
        return it->second;
    }

    void step_upper_bound(ReportStep& s) {
        s.title = "Explicit-formula upper bound";
        s.claim = "A genus-4 curve over F_7 has at most 25 rational points.";
        s.operation = "optimize_u(q=7, g=4, D=" + std::to_string(opts_.bound_degree) + "), ihara_bound(7, 4)";
        s.inputs = {{"q", "7"}, {"g", "4"}};
        const auto& c = cert(4);
        require(verify_certificate(c), "certificate does not re-verify");
        require(c.floor == 25, "certified floor is " + c.floor.get_str() + ", expected 25");
        Integer ih = ihara_bound(kQ, 4);
        s.outputs = {{"u", u_string(c.u)}, {"bound", c.bound.to_string()}, {"floor", c.floor.get_str()}, {"ihara", ih.get_str()}};
        require(ih == 25, "Ihara bound gives " + ih.get_str());
        s.witness["certificate"] = to_json(c);
        s.witness["ihara"] = to_json(ih);
    }

    void step_search_genus4(ReportStep& s) {
        s.title = "Real Weil polynomials for 25 points";
        s.claim = "The only admissible real Weil polynomial of a genus-4 curve over F_7 with 25 points is (t + 2)*(t + 5)^3.";
        s.operation = "enumerate_real_weil(q=7, g=4, N=25) with the resultant filter";
        s.inputs = {{"q", "7"}, {"g", "4"}, {"N", "25"}};
        SearchConstraints c;
        c.q = kQ;
        c.g = 4;
        c.N = 25;
        auto r = enumerate_real_weil(c);
        require(r.candidates.size() == 1, std::to_string(r.candidates.size()) + " candidates survive");
        const auto& cand = r.candidates[0];
        std::string f = format_factorization(cand.factors);
        require(f == "(t + 2)*(t + 5)^3", "unexpected survivor " + f);
        require(std::vector<Integer>(cand.a.begin(), cand.a.begin() + 4) == std::vector<Integer>{25, 1, 115, 576}, "a-vector " + format_prefix(cand.a));
        std::vector<std::string> killed;
        for (const auto& e : r.excluded) {
            const auto& v = e.verdict;
            require(v.h1 * v.h2 == e.candidate.h && resultant(v.h1, v.h2) == v.resultant && abs(v.resultant) == 1, "bad resultant witness for " + format_factorization(e.candidate.factors));
            killed.push_back(format_factorization(e.candidate.factors) + " (Res = " + v.resultant.get_str() + ")");
        }
        s.outputs = {{"survivor", f}, {"a", format_prefix(cand.a)}, {"removed by resultant +-1", join(killed, "; ")}};
        s.witness["search"] = to_json(r);
        h4_ = cand.h;
    }

    void step_elliptic_map(ReportStep& s) {
        s.title = "Map to an elliptic curve";
        s.claim = "A curve with real Weil polynomial (t + 2)*(t + 5)^3 maps with degree 3 onto an elliptic curve with 10 rational points.";
        s.operation = "howe_lauter_test(h, mu=-2), a_from_h(7, 1, t + 2)";
        s.inputs = {{"h", h4_.to_string()}, {"mu", "-2"}};
        auto v = howe_lauter_test(h4_, -2);
        require(v.status == ExclusionStatus::EllipticMap && v.r == 3, "r = " + v.r.get_str());
        require(resultant(lin(2), lin(5)) == 3, "Res(t + 2, t + 5) != 3");
        auto aE = a_from_h(kQ, 1, lin(2), 1);
        require(aE[0] == 10, "elliptic factor has " + aE[0].get_str() + " points");
        s.outputs = {{"r", v.r.get_str()}, {"Res(t + 2, t + 5)", "3"}, {"N(E)", "10"}, {"degree", "3 (degree 1 is impossible for genus 4)"}};
        s.witness["verdict"] = to_json(v);
        s.witness["N_E"] = 10;
    }

    void step_galois_split(ReportStep& s) {
        s.title = "Galois covering splitting";
        s.claim = "If the degree-3 covering is Galois, 8 rational places of E split, 1 ramifies, 1 is inert, and one degree-2 place ramifies.";
        s.operation = "galois_split_feasible(25, 10, 4, 1); enumerate_elliptic(7, Short)";
        s.inputs = {{"N_X", "25"}, {"N_E", "10"}, {"g_X", "4"}, {"g_E", "1"}};
        auto splits = galois_split_feasible(25, 10, 4, 1);
        require(splits.size() == 1, std::to_string(splits.size()) + " splitting patterns");
        const auto& g = splits[0];
        require(g.s == 8 && g.r == 1 && g.i == 1, "pattern is not (8,1,1)");
        require(g.residual_places == std::vector<std::vector<unsigned>>{{2}}, "residual ramification is not a single degree-2 place");
        auto entries = enumerate_elliptic(7, EllipticFamily::Short);
        std::vector<EllipticEntry> ten;
        for (const auto& e : entries)
            if (e.points == 10) ten.push_back(e);
        auto classes = elliptic_isomorphism_classes(ten, 7);
        require(classes.size() == 2, std::to_string(classes.size()) + " isomorphism classes with 10 points");
        std::vector<std::string> reps;
        for (const auto& cl : classes) reps.push_back(cl.front().curve.to_string());
        require(std::any_of(ten.begin(), ten.end(), [](const EllipticEntry& e) { return e.a == 1 && e.b == 4; }) &&
                    std::any_of(ten.begin(), ten.end(), [](const EllipticEntry& e) { return e.a == 3 && e.b == 4; }),
                "y^2 = x^3 + x + 4 or y^2 = x^3 + 3x + 4 missing");
        s.outputs = {{"(s,r,i)", "(8,1,1)"}, {"ramified place degrees", "{2}"}, {"elliptic curves with 10 points", join(reps, "; ")}};
        s.witness["split"] = to_json(g);
        Json cls = Json::array();
        for (const auto& cl : classes) {
            Json x = Json::array();
            for (const auto& e : cl) x.push_back(Json::array({e.a, e.b}));
            cls.push_back(x);
        }
        s.witness["elliptic_classes_ab"] = cls;
    }

    void step_ray_class_field(ReportStep& s) {
        s.title = "Ray class fields of the elliptic curves";
        s.claim = "For both elliptic curves with 10 points the relevant ray class field is trivial, so no Galois covering with pattern (8,1,1) exists.";
        s.operation = "external class field computation (MAGMA)";
        s.status = StepStatus::External;
        s.inputs = {{"curves", "y^2 = x^3 + x + 4; y^2 = x^3 + 3*x + 4 over GF(7)"}, {"pattern", "(8,1,1)"}};
        s.witness["provenance"] = "MAGMA ray class field computation";
        if (opts_.skip_external) return;
        s.outputs = {{"inputs re-verified", "both curves have 10 points; pattern (8,1,1) unique"}, {"conclusion imported", "the covering is not Galois"}};
        for (const char* spec : {"y^2 = x^3 + x + 4 over GF(7)", "y^2 = x^3 + 3*x + 4 over GF(7)"})
            require(point_counts(parse_curve(spec), 1).counts[0] == 10, std::string(spec) + " does not have 10 points");
    }

    void step_nongalois_table(ReportStep& s) {
        s.title = "Non-Galois splitting profiles";
        s.claim = "A non-Galois degree-3 covering has one of five splitting profiles (I to V) with the stated N_bar and closure genera.";
        s.operation = std::string("nongalois_profiles(25, 10, 4, 1, a2=") + (opts_.a2_filter ? "1" : "off") + ")";
        s.inputs = {{"N_X", "25"}, {"N_E", "10"}, {"a_2(X)", opts_.a2_filter ? "1" : "not used"}};
        cases_ = nongalois_profiles(25, 10, 4, 1, opts_.a2_filter ? std::optional<unsigned>(1) : std::nullopt);
        for (const auto& row : table_rows()) {
            auto it = std::find_if(cases_.begin(), cases_.end(), [&](const CoveringCase& c) { return c.profile == row.profile; });
            require(it != cases_.end() && !it->excluded, "profile " + to_string(row.profile) + " missing");
            require(it->N_bar == row.N_bar, "N_bar mismatch for " + to_string(row.profile));
            auto gs = it->genus_set();
            for (int g : row.g_bar) require(gs.count(g) == 1, "closure genus " + std::to_string(g) + " missing for " + to_string(row.profile));
            for (const auto& p : it->patterns)
                if (!p.excluded && row.g_bar.count(p.g_bar) == 0)
                    s.flags.push_back("case " + it->label + " " + to_string(row.profile) + " also admits residual pattern " + to_string(p.parts) + " (g_bar=" + std::to_string(p.g_bar) +
                                      ", N_bar=" + std::to_string(it->N_bar) + "); handled by the closure bounds");
        }
        bool extra_case = false;
        for (const auto& c : cases_) {
            bool in_table = std::any_of(table_rows().begin(), table_rows().end(), [&](const ExpectedRow& r) { return r.profile == c.profile; });
            std::string line = (c.label.empty() ? "-" : c.label) + " " + to_string(c.profile) + " N_bar=" + std::to_string(c.N_bar) + " g_bar=" + set_string(c.genus_set());
            if (c.excluded) {
                line += " excluded: " + c.reason;
            } else if (!in_table) {
                extra_case = true;
                s.flags.push_back("profile " + to_string(c.profile) + " survives without the a_2 filter");
            }
            s.outputs.emplace_back("profile", line);
        }
        if (opts_.a2_filter) {
            auto it = std::find_if(cases_.begin(), cases_.end(), [](const CoveringCase& c) { return c.profile == SplittingProfile{7, 1, 2, 0, 0}; });
            require(it != cases_.end() && it->excluded, "(7,1,2,0,0) is not generated and excluded");
        }
        if (extra_case) s.status = StepStatus::Flagged;
        s.witness["cases"] = to_json(cases_);
    }

    void step_closure_bounds(ReportStep& s) {
        s.title = "Bounds on the Galois closure";
        s.claim = "Every closure option (N_bar, g_bar) is excluded by the explicit-formula bound except case V with 45 points and genus 10.";
        s.operation = "optimize_u(7, g_bar, D) for every surviving option; min_genus(7, 48), min_genus(7, 45)";
        std::vector<std::string> survivors;
        Json opts = Json::array();
        for (const auto& c : cases_) {
            if (c.excluded) continue;
            for (int g : c.genus_set()) {
                const auto& ct = cert(g);
                require(verify_certificate(ct), "certificate at g=" + std::to_string(g) + " does not re-verify");
                bool killed = ct.floor < c.N_bar;
                std::string who = (c.label.empty() ? to_string(c.profile) : "case " + c.label) + " (N_bar=" + std::to_string(c.N_bar) + ", g_bar=" + std::to_string(g) + ")";
                s.outputs.emplace_back(who, killed ? "excluded: floor " + ct.floor.get_str() + " < " + std::to_string(c.N_bar) : "not excluded: floor " + ct.floor.get_str());
                if (!killed) survivors.push_back(to_string(c.profile) + "@" + std::to_string(g));
                opts.push_back({{"profile", to_string(c.profile)}, {"N_bar", c.N_bar}, {"g_bar", g}, {"floor", to_json(ct.floor)}, {"excluded", killed}});
            }
        }
        auto m48 = min_genus(kQ, 48, opts_.bound_degree);
        auto m45 = min_genus(kQ, 45, opts_.bound_degree);
        s.outputs.emplace_back("least genus with 48 points", ">= " + std::to_string(m48.genus));
        s.outputs.emplace_back("least genus with 45 points", ">= " + std::to_string(m45.genus));
        require(m48.genus >= 11 && m45.genus >= 10, "min_genus values too small");
        const std::string expected = to_string(SplittingProfile{6, 3, 1, 0, 0}) + "@10";
        require(std::find(survivors.begin(), survivors.end(), expected) != survivors.end(), "case V was excluded by bounds alone");
        for (const auto& sv : survivors)
            if (sv != expected) {
                s.flags.push_back("option " + sv + " is not excluded by the bound; the genus-10 search covers it only if the closure has a_2 >= 3, which is not derived here");
                s.status = StepStatus::Flagged;
            }
        Json ws = Json::object();
        for (const auto& [g, ct] : certs_) ws[std::to_string(g)] = to_json(ct);
        s.witness["options"] = opts;
        s.witness["certificates"] = ws;
        s.witness["min_genus_48"] = m48.genus;
        s.witness["min_genus_45"] = m45.genus;
    }

    void step_search_genus10(ReportStep& s) {
        s.title = "Case V closure";
        s.claim = "The closure in case V would have real Weil polynomial (t + 3)^3*(t + 4)^7, which splits into factors with resultant 1, so case V is impossible.";
        bool complete = opts_.genus10_search == SearchMode::Complete;
        s.operation = complete ? "enumerate_real_weil(q=7, g=10, N=45, a_2>=3), serre_test" : "verify_candidate(q=7, g=10, N=45, a_2>=3), serre_test";
        s.inputs = {{"q", "7"}, {"g", "10"}, {"N", "45"}, {"a_2", ">= 3 (b' = 1 forces three degree-2 places)"}};
        SearchConstraints c;
        c.q = kQ;
        c.g = 10;
        c.N = 45;
        c.a_lower[2] = 3;
        c.serre_filter = false;
        Factorization expected{{lin(3), 3}, {lin(4), 7}};
        IntPolynomial h = expand(expected);
        std::vector<Integer> a;
        if (complete) {
            auto r = enumerate_real_weil(c);
            require(r.candidates.size() == 1, std::to_string(r.candidates.size()) + " candidates");
            require(r.candidates[0].h == h, "unexpected candidate " + format_factorization(r.candidates[0].factors));
            a = r.candidates[0].a;
            s.witness["search"] = to_json(r);
        } else {
            auto chk = verify_candidate(c, h);
            require(chk.admissible, "candidate rejected: " + chk.reason);
            a = chk.a;
            s.status = StepStatus::Flagged;
            s.flags.push_back("uniqueness not re-established (forward verification only)");
        }
        require(std::vector<Integer>(a.begin(), a.begin() + 4) == std::vector<Integer>{45, 3, 17, 807}, "a-vector " + format_prefix(a));
        auto v = serre_test(h, expected);
        require(v.status == ExclusionStatus::Excluded && abs(v.resultant) == 1, "resultant test does not exclude");
        s.outputs = {{"candidate", format_factorization(expected)}, {"a", format_prefix(a)}, {"split", v.h1.to_string() + " | " + v.h2.to_string()}, {"resultant", v.resultant.get_str()}};
        s.witness["verdict"] = to_json(v);
    }

    void step_curve_C(ReportStep& s) {
        s.title = "A curve with 24 points";
        s.claim = "The genus-4 curve C: y^2 = x^3 + 3, z^2 = -x^3 + 3 over F_7 has 24 rational points, so the maximum is 24.";
        s.operation = "fiber_point_counts(C, 4), weil_data_from_counts, validate";
        const char* spec = "y^2 = x^3 + 3; z^2 = -x^3 + 3 over GF(7)";
        s.inputs = {{"curve", spec}};
        auto C = parse_curve(spec);
        auto fc = fiber_point_counts(C, 4);
        require(fc.genus == 4, "genus " + std::to_string(fc.genus));
        require(fc.counts.counts[0] == 24, "N_1 = " + fc.counts.counts[0].get_str());
        auto wd = weil_data_from_counts(kQ, 4, fc.counts.counts);
        IntPolynomial L = IntPolynomial{1, 1, 7} * pow(IntPolynomial{1, 5, 7}, 3);
        require(wd.L == L, "L = " + wd.L.to_string());
        require(std::vector<Integer>(wd.a.begin(), wd.a.begin() + 4) == std::vector<Integer>{24, 3, 120, 558}, "a = " + format_prefix(wd.a));
        auto checks = validate(wd);
        require(all_passed(checks), "zeta data fails validation");
        s.outputs = {{"N", "[" + join({fc.counts.counts[0].get_str(), fc.counts.counts[1].get_str(), fc.counts.counts[2].get_str(), fc.counts.counts[3].get_str()}, ", ") + "]"},
                     {"L", wd.L.to_string()},
                     {"h", wd.h.to_string()},
                     {"a", format_prefix(wd.a)}};
        s.witness["weil_data"] = to_json(wd);
    }

    ReplayOptions opts_;
    ProofReport report_;
    bool aborted_ = false;
    std::map<int, BoundCertificate> certs_;
    IntPolynomial h4_;
    std::vector<CoveringCase> cases_;
};


}  // namespace

ProofReport replay_theorem(const ReplayOptions& opts) { return Replayer(opts).run(); }

Json to_json(const ProofReport& r) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json x;
        x["index"] = s.index;
        x["title"] = s.title;
        x["claim"] = s.claim;
        x["operation"] = s.operation;
        Json in = Json::array(), out = Json::array();
        for (const auto& [k, v] : s.inputs) in.push_back(Json::array({k, v}));
        for (const auto& [k, v] : s.outputs) out.push_back(Json::array({k, v}));
        x["inputs"] = in;
        x["outputs"] = out;
        x["flags"] = s.flags;
        x["status"] = to_string(s.status);
        x["witness"] = s.witness;
        steps.push_back(std::move(x));
    }
    j["steps"] = steps;
    j["external_steps"] = r.count(StepStatus::External);
    j["verdict"] = r.verdict;
    j["conclusion"] = r.conclusion;
    return j;
}

std::string to_markdown(const ProofReport& r) {
    std::ostringstream os;
    os << "# N_7(4) = 24: replay report\n\n";
    for (const auto& s : r.steps) {
        os << "## Step " << s.index << ": " << s.title << " [" << to_string(s.status) << "]\n\n";
        os << s.claim << "\n\n";
        os << "- operation: `" << s.operation << "`\n";
        for (const auto& [k, v] : s.inputs) os << "- input " << k << ": " << v << "\n";
        for (const auto& [k, v] : s.outputs) os << "- " << k << ": " << v << "\n";
        for (const auto& f : s.flags) os << "- FLAGGED: " << f << "\n";
        os << "\n";
    }
    os << "Verdict: " << r.verdict << " (" << r.count(StepStatus::External) << " external step)\n\n" << r.conclusion << "\n";
    return os.str();
}

}  // namespace curvebound
