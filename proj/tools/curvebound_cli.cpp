// curvebound: command-line front end.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "curvebound/bounds.hpp"
#include "curvebound/covers.hpp"
#include "curvebound/curves.hpp"
#include "curvebound/exclusion.hpp"
#include "curvebound/json_io.hpp"
#include "curvebound/replay.hpp"
#include "curvebound/weilsearch.hpp"
#include "curvebound/zeta.hpp"

using namespace curvebound;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_integers(const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
    return s + "]";
}

/// "d:min" pairs for --a.
std::map<unsigned, Integer> parse_a_bounds(const std::vector<std::string>& items) {
    std::map<unsigned, Integer> out;
    for (const auto& it : items) {
        auto colon = it.find(':');
        if (colon == std::string::npos) throw UsageError("--a expects d:min, got '" + it + "'");
        try {
            unsigned long d = std::stoul(it.substr(0, colon));
            if (d == 0) throw UsageError("--a: degree must be positive");
            out[static_cast<unsigned>(d)] = Integer(it.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw UsageError("--a expects d:min, got '" + it + "'");
        }
    }
    return out;
}

int cmd_count(const std::string& spec_text, unsigned depth, bool json) {
    auto spec = parse_curve(spec_text);
    auto counts = point_counts(spec, depth);
    if (json) {
        std::cout << dump(to_json(counts));
    } else {
        std::cout << spec.to_string() << "\n";
        std::cout << "genus " << spec.genus() << "\n";
        std::cout << "N = " << join_integers(counts.counts) << "\n";
    }
    return 0;
}

int cmd_zeta(const std::string& spec_text, unsigned depth, bool json) {
    auto spec = parse_curve(spec_text);
    int g = spec.genus();
    auto counts = point_counts(spec, static_cast<unsigned>(g));
    auto wd = weil_data_from_counts(counts.q, g, counts.counts, depth);
    auto checks = validate(wd);
    bool ok = all_passed(checks);
    if (json) {
        std::cout << dump(to_json(wd));
    } else {
        std::cout << spec.to_string() << "\n";
        std::cout << "genus " << g << "\n";
        std::cout << "L(t) = " << wd.L.to_string() << "\n";
        std::cout << "h(t) = " << wd.h.to_string() << "\n";
        std::cout << "N = " << join_integers(wd.N) << "\n";
        std::cout << "a = " << join_integers(wd.a) << "\n";
        for (const auto& c : checks) std::cout << (c.passed ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_enumerate(const SearchConstraints& c, bool json) {
    auto r = enumerate_real_weil(c);
    if (json) {
        std::cout << dump(to_json(r));
    } else {
        std::cout << "q=" << c.q << " g=" << c.g << " N=" << c.N << "  window [" << static_cast<double>(r.stats.window_lo) << ", " << static_cast<double>(r.stats.window_hi)
                  << "] (approximate)  nodes " << r.stats.nodes << "\n";
        std::cout << r.candidates.size() << " candidate(s)\n";
        for (const auto& x : r.candidates) std::cout << "  " << format_factorization(x.factors) << "  a = " << join_integers(x.a) << "\n";
        if (!r.excluded.empty()) std::cout << r.excluded.size() << " removed by the resultant filter\n";
        for (const auto& x : r.excluded)
            std::cout << "  " << format_factorization(x.candidate.factors) << "  Res(" << x.verdict.h1.to_string() << ", " << x.verdict.h2.to_string() << ") = " << x.verdict.resultant << "\n";
    }
    return r.candidates.empty() ? 1 : 0;
}

int cmd_exclude(const std::string& text, const std::optional<long>& mu, bool json) {
    auto f = parse_factored(text);
    IntPolynomial h = expand(f);
    ExclusionVerdict v = mu ? howe_lauter_test(h, *mu) : serre_test(h, f);
    bool positive = mu ? v.status == ExclusionStatus::EllipticMap : v.status == ExclusionStatus::Excluded;
    if (json) {
        Json j;
        j["h"] = to_json(h);
        j["factors"] = to_json(f);
        j["verdict"] = to_json(v);
        std::cout << dump(j);
    } else {
        std::cout << "h = " << format_factorization(f) << "\n";
        std::cout << "verdict: " << to_string(v.status) << "\n";
        if (v.status == ExclusionStatus::Excluded) std::cout << "  Res(" << v.h1.to_string() << ", " << v.h2.to_string() << ") = " << v.resultant << "\n";
        if (mu) std::cout << "  r = Res(t - mu, rad(h/(t - mu))) = " << v.r << "\n";
        if (!v.notes.empty()) std::cout << "  " << v.notes << "\n";
    }
    return positive ? 0 : 1;
}

int cmd_covers(unsigned NX, unsigned NE, int gX, int gE, std::optional<unsigned> a2, unsigned q, bool json) {
    std::vector<GaloisSplit> galois;
    if (q % 3 != 0) galois = galois_split_feasible(NX, NE, gX, gE, q);
    auto cases = nongalois_profiles(NX, NE, gX, gE, a2, q);
    if (json) {
        Json j;
        Json g = Json::array();
        for (const auto& s : galois) g.push_back(to_json(s));
        j["galois"] = g;
        j["nongalois"] = to_json(cases);
        std::cout << dump(j);
        return 0;
    }
    std::cout << "Galois (s,r,i):\n";
    for (const auto& s : galois) {
        std::cout << "  (" << s.s << "," << s.r << "," << s.i << ") residual different degree " << s.residual << ", ramified places of degree";
        for (const auto& p : s.residual_places) {
            std::cout << " {";
            for (std::size_t k = 0; k < p.size(); ++k) std::cout << (k ? "," : "") << p[k];
            std::cout << "}";
        }
        std::cout << "\n";
    }
    std::cout << "\nNon-Galois:\n";
    std::cout << "  case   a   b   b'  c   c'  N_bar  g_bar\n";
    for (const auto& c : cases) {
        const auto& p = c.profile;
        std::ostringstream gs;
        std::string sep;
        for (int g : c.genus_set()) {
            gs << sep << g;
            sep = ",";
        }
        char line[160];
        std::snprintf(line, sizeof line, "  %-5s %3u %3u %3u %3u %3u  %5u  {%s}", c.label.empty() ? "-" : c.label.c_str(), p.a, p.b, p.bp, p.c, p.cp, c.N_bar, gs.str().c_str());
        std::cout << line << (c.excluded ? "  excluded: " + c.reason : "") << "\n";
    }
    return 0;
}

void print_certificate(const BoundCertificate& c) {
    std::cout << "u = [";
    for (std::size_t i = 0; i < c.u.size(); ++i) std::cout << (i ? ", " : "") << c.u[i].get_str();
    std::cout << "]\n";
    std::cout << "bound = " << c.bound.to_string() << "  (~" << c.bound.approx() << ")\n";
    std::cout << "floor = " << c.floor << "\n";
    std::cout << "P(x) = " << c.witness.P.to_string('x') << "\n";
}

int cmd_bound(long q, int g, unsigned D, bool json) {
    auto c = optimize_u(q, g, D);
    bool ok = verify_certificate(c);
    if (json) {
        std::cout << dump(to_json(c));
    } else {
        std::cout << "q=" << q << " g=" << g << " D=" << D << "\n";
        print_certificate(c);
        std::cout << "Ihara bound = " << ihara_bound(q, g) << "\n";
        std::cout << "certificate " << (ok ? "verified" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_min_genus(long q, long N, unsigned D, int cap, bool json) {
    auto r = min_genus(q, N, D, cap);
    if (json) {
        Json j;
        j["q"] = q;
        j["N"] = N;
        j["min_genus"] = r.genus;
        Json ex = Json::array();
        for (const auto& c : r.excluded) ex.push_back(to_json(c));
        j["excluded"] = ex;
        j["attained"] = to_json(r.attained);
        std::cout << dump(j);
    } else {
        std::cout << "a curve over F_" << q << " with " << N << " points has genus >= " << r.genus << "\n";
        for (const auto& c : r.excluded) std::cout << "  g=" << c.g << ": floor " << c.floor << "\n";
        std::cout << "  g=" << r.genus << ": floor " << r.attained.floor << "\n";
    }
    return 0;
}

int cmd_replay(const ReplayOptions& o, bool json) {
    auto r = replay_theorem(o);
    if (json)
        std::cout << dump(to_json(r));
    else
        std::cout << to_markdown(r);
    return r.verdict == "VERIFIED" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for rational points on curves over finite fields"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON");

    std::string spec;
    unsigned depth = 4;
    auto* count = app.add_subcommand("count", "Point counts N_1..N_depth");
    count->add_option("curve", spec, "Curve, e.g. \"y^2 = x^3 + 3 over GF(7)\"")->required();
    count->add_option("--depth", depth, "Number of extensions")->check(CLI::Range(1u, 12u));
    count->add_flag("--json", json, "Emit JSON");

    unsigned zdepth = kDefaultZetaDepth;
    auto* zeta = app.add_subcommand("zeta", "Zeta function data from point counts");
    zeta->add_option("curve", spec, "Curve spec")->required();
    zeta->add_option("--depth", zdepth, "Length of N and a")->check(CLI::Range(1u, 30u));
    zeta->add_flag("--json", json, "Emit JSON");

    long q = 7, N = 0;
    int g = 4;
    std::vector<std::string> a_items;
    bool no_serre = false;
    unsigned sdepth = kDefaultZetaDepth;
    unsigned seed = 0;
    auto* en = app.add_subcommand("enumerate", "Admissible real Weil polynomials");
    en->add_option("--q", q)->required();
    en->add_option("--g", g)->required();
    en->add_option("--N", N)->required();
    en->add_option("--a", a_items, "Lower bound on a_d as d:min (repeatable)");
    en->add_option("--depth", sdepth, "Number of a_d checked")->check(CLI::Range(1u, 30u));
    en->add_flag("--no-resultant-filter", no_serre, "Keep candidates that split with resultant +-1");
    en->add_option("--seed", seed, "Visit the factor table in a shuffled order");
    en->add_flag("--json", json, "Emit JSON");

    std::string factored;
    std::optional<long> mu;
    auto* ex = app.add_subcommand("exclude", "Resultant tests on a factored real Weil polynomial");
    ex->add_option("polynomial", factored, "Factored h, e.g. \"(t+3)^3(t+4)^7\"")->required();
    ex->add_option("--mu", mu, "Run the elliptic-map test at this integer root");
    ex->add_flag("--json", json, "Emit JSON");

    unsigned NX = 0, NE = 0, cq = 7;
    int gX = 0, gE = 1;
    std::string a2_text = "off";
    auto* cov = app.add_subcommand("covers", "Degree-3 covering analysis");
    cov->add_option("--NX", NX)->required();
    cov->add_option("--NE", NE)->required();
    cov->add_option("--gX", gX)->required();
    cov->add_option("--gE", gE);
    cov->add_option("--a2", a2_text, "a_2 of the cover, or 'off'");
    cov->add_option("--q", cq);
    cov->add_flag("--json", json, "Emit JSON");

    unsigned D = 6;
    auto* bd = app.add_subcommand("bound", "Explicit-formula bound with an exact certificate");
    bd->add_option("--q", q)->required();
    bd->add_option("--g", g)->required()->check(CLI::Range(0, 1000));
    bd->add_option("--D", D)->check(CLI::Range(1u, 8u));
    bd->add_flag("--json", json, "Emit JSON");

    int cap = 50;
    auto* mg = app.add_subcommand("min-genus", "Least genus not excluded by the bound");
    mg->add_option("--q", q)->required();
    mg->add_option("--N", N)->required();
    mg->add_option("--D", D)->check(CLI::Range(1u, 8u));
    mg->add_option("--cap", cap);
    mg->add_flag("--json", json, "Emit JSON");

    ReplayOptions ro;
    std::string a2_filter = "on";
    bool forward_only = false;
    auto* rp = app.add_subcommand("replay-theorem", "Replay the N_7(4) = 24 argument");
    rp->add_option("--a2-filter", a2_filter)->check(CLI::IsMember({"on", "off"}));
    rp->add_flag("--skip-external", ro.skip_external, "Do not echo the external step's detail");
    rp->add_flag("--forward-only", forward_only, "Only forward-verify the genus-10 candidate");
    rp->add_option("--D", ro.bound_degree)->check(CLI::Range(1u, 8u));
    rp->add_flag("--json", json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*count) return cmd_count(spec, depth, json);
        if (*zeta) return cmd_zeta(spec, zdepth, json);
        if (*en) {
            SearchConstraints c;
            c.q = q;
            c.g = g;
            c.N = N;
            c.a_lower = parse_a_bounds(a_items);
            c.depth = sdepth;
            c.serre_filter = !no_serre;
            c.factor_order_seed = seed;
            return cmd_enumerate(c, json);
        }
        if (*ex) return cmd_exclude(factored, mu, json);
        if (*cov) {
            std::optional<unsigned> a2;
            if (a2_text != "off") {
                try {
                    a2 = static_cast<unsigned>(std::stoul(a2_text));
                } catch (const std::logic_error&) {
                    throw UsageError("--a2 expects a nonnegative integer or 'off'");
                }
            }
            return cmd_covers(NX, NE, gX, gE, a2, cq, json);
        }
        if (*bd) return cmd_bound(q, g, D, json);
        if (*mg) return cmd_min_genus(q, N, D, cap, json);
        if (*rp) {
            ro.a2_filter = a2_filter == "on";
            ro.genus10_search = forward_only ? SearchMode::ForwardOnly : SearchMode::Complete;
            return cmd_replay(ro, json);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
