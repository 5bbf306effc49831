// mcg: exact computations on the Farey model of the once-punctured torus.
// Subcommands expose the library modules with machine-readable output;
// `mcg reproduce` replays the acceptance suite.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mcg/acceptance.hpp"
#include "mcg/farey.hpp"
#include "mcg/serialize.hpp"

namespace {

constexpr const char* kVersion = "mcg 0.1.0";

using mcg::Json;

// every run embeds its configuration and the version for reproducibility
Json envelope(const std::string& command, Json config, Json result) {
    return Json{{"tool", "mcg"},
                {"version", kVersion},
                {"command", command},
                {"config", std::move(config)},
                {"result", std::move(result)}};
}

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

std::vector<mcg::MappingClass> parse_generators(const std::string& text) {
    std::vector<mcg::MappingClass> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(';', start);
        std::string token = text.substr(
            start, stop == std::string::npos ? std::string::npos : stop - start);
        if (token.find_first_not_of(" \t") != std::string::npos)
            gens.push_back(mcg::MappingClass::parse(token));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    if (gens.empty()) throw mcg::ParseError("no matrices in '" + text + "'");
    return gens;
}

// "p/q:n[,p/q:n...]" -> twist word (same-axis factors collapse)
mcg::TwistWord parse_twist_word(const std::string& text) {
    std::vector<mcg::TwistFactor> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(',', start);
        std::string token = text.substr(
            start, stop == std::string::npos ? std::string::npos : stop - start);
        std::size_t colon = token.find(':');
        if (colon == std::string::npos)
            throw mcg::ParseError("twist factor '" + token + "' needs axis:power");
        factors.push_back({mcg::Slope::parse(token.substr(0, colon)),
                           mcg::parse_integer(token.substr(colon + 1))});
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return mcg::TwistWord{std::span<const mcg::TwistFactor>(factors)};
}

std::vector<mcg::Slope> sample_slopes(long box) {
    std::vector<mcg::Slope> out;
    out.emplace_back(1, 0);
    for (long q = 1; q <= box; ++q)
        for (long p = -box; p <= box; ++p)
            if (mcg::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

std::string cache_file_for(const std::vector<mcg::MappingClass>& gens) {
    const char* dir = std::getenv("MCG_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    std::vector<std::string> keys;
    for (const auto& g : gens) keys.push_back(g.key());
    std::sort(keys.begin(), keys.end());
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& k : keys)
        for (char c : k) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    char name[32];
    std::snprintf(name, sizeof name, "ball-%016llx.json",
                  static_cast<unsigned long long>(h));
    return std::string(dir) + "/" + name;
}

int run(int argc, char** argv) {
    CLI::App app{"exact mapping-class computations on the punctured torus"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    bool json_flag = false;  // JSON is the default; the flag is accepted for scripts
    app.add_flag("--json", json_flag, "machine-readable output (the default)");
    app.fallthrough();

    // classify
    std::string classify_matrix;
    auto* classify_cmd = app.add_subcommand("classify", "trace trichotomy of a matrix");
    classify_cmd->add_option("matrix", classify_matrix, "[[a,b],[c,d]] or 'a b c d'")
        ->required();

    // intersect
    std::string slope1, slope2;
    auto* intersect_cmd = app.add_subcommand("intersect", "geometric intersection number");
    intersect_cmd->add_option("s1", slope1, "slope p/q")->required();
    intersect_cmd->add_option("s2", slope2, "slope p/q")->required();

    // distance
    std::string dist_s1, dist_s2;
    long dist_cap = 1000000;
    auto* distance_cmd = app.add_subcommand("distance", "Farey graph distance");
    distance_cmd->add_option("s1", dist_s1)->required();
    distance_cmd->add_option("s2", dist_s2)->required();
    distance_cmd->add_option("--cap", dist_cap, "distances beyond this report 'exceeds'");

    // twist-check
    std::string tc_word, tc_delta, tc_delta_prime;
    bool tc_sharp = false;
    auto* twist_check_cmd =
        app.add_subcommand("twist-check", "intersection inequality after twisting");
    twist_check_cmd->add_option("--twist", tc_word, "axis:power[,axis:power...]")
        ->required();
    twist_check_cmd->add_option("--delta", tc_delta)->required();
    twist_check_cmd->add_option("--delta-prime", tc_delta_prime)->required();
    twist_check_cmd->add_flag("--same-sign-sharp", tc_sharp,
                              "omit the -2 (same-sign powers only)");

    // twist-pingpong
    std::string tp_a, tp_b;
    long tp_box = 5, tp_max_k = 3;
    auto* twist_pp_cmd =
        app.add_subcommand("twist-pingpong", "certify a free twist pair");
    twist_pp_cmd->add_option("--a", tp_a, "axis:power")->required();
    twist_pp_cmd->add_option("--b", tp_b, "axis:power")->required();
    twist_pp_cmd->add_option("--sample-box", tp_box, "slope box for the smoke sample");
    twist_pp_cmd->add_option("--max-k", tp_max_k, "sampled shuttle powers 1..k");

    // find-free
    std::string ff_gens;
    long ff_max_power = 32, ff_oracle_depth = 12;
    auto* find_free_cmd =
        app.add_subcommand("find-free", "short independent words pipeline");
    find_free_cmd->add_option("--gens", ff_gens, "matrices separated by ';'")
        ->required();
    find_free_cmd->add_option("--max-power", ff_max_power);
    find_free_cmd->add_option("--oracle-depth", ff_oracle_depth);

    // growth
    std::string gr_gens;
    long gr_radius = 8;
    std::size_t gr_cap = 10000000;
    long gr_window = 3;
    bool gr_csv = false;
    auto* growth_cmd = app.add_subcommand("growth", "exact Cayley ball sizes");
    growth_cmd->add_option("--gens", gr_gens)->required();
    growth_cmd->add_option("--radius", gr_radius)->required();
    growth_cmd->add_option("--cap", gr_cap, "element store cap");
    growth_cmd->add_option("--window", gr_window, "estimate window");
    growth_cmd->add_flag("--csv", gr_csv, "CSV radius,size,rate instead of JSON");

    // walk
    std::string wk_gens;
    long wk_steps = 10;
    long wk_mc_trials = 0;
    std::uint64_t wk_seed = 1;
    bool wk_symmetrize = false;
    std::size_t wk_state_cap = 2000000;
    auto* walk_cmd = app.add_subcommand("walk", "return probabilities of the simple random walk");
    walk_cmd->add_option("--gens", wk_gens)->required();
    walk_cmd->add_option("--steps", wk_steps)->required();
    bool wk_exact = false;
    auto* exact_flag =
        walk_cmd->add_flag("--exact", wk_exact, "exact dynamic programming (the default)");
    walk_cmd->add_option("--mc", wk_mc_trials, "Monte Carlo trials instead of the exact DP")
        ->excludes(exact_flag);
    walk_cmd->add_option("--seed", wk_seed);
    walk_cmd->add_option("--state-cap", wk_state_cap);
    walk_cmd->add_flag("--symmetrize", wk_symmetrize, "append missing inverses");

    // constants
    std::string ct_c = "1";
    long ct_p = 0;
    long ct_m = 1;
    bool ct_search = false;
    long ct_simulate = 0;
    std::uint64_t ct_seed = 1;
    auto* constants_cmd =
        app.add_subcommand("constants", "Behrstock thresholds and the p1 chain");
    constants_cmd->add_option("--c", ct_c, "translation constant (rational)");
    constants_cmd->add_option("--p", ct_p, "power to verify the chain at");
    constants_cmd->add_option("--m", ct_m, "exponent multiple");
    constants_cmd->add_flag("--search", ct_search, "scan for the minimal threshold");
    constants_cmd->add_option("--simulate", ct_simulate, "symbolic ping-pong trajectory length");
    constants_cmd->add_option("--seed", ct_seed);
    long ct_fk = 0;
    std::string ct_w = "564";
    constants_cmd->add_option("--fk", ct_fk, "emit the return-probability bound f(k)");
    constants_cmd->add_option("--w", ct_w, "short-word constant w for f(k)");

    // reproduce
    long rp_only = 0;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "run the acceptance suite");
    reproduce_cmd->add_option("criterion", rp_only, "restrict to one criterion (1-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or the help text
        return code == 0 ? 0 : 2;
    }

    if (classify_cmd->parsed()) {
        auto m = mcg::MappingClass::parse(classify_matrix);
        emit(envelope("classify", Json{{"matrix", classify_matrix}},
                      to_json(mcg::classify(m))));
        return 0;
    }

    if (intersect_cmd->parsed()) {
        auto a = mcg::Slope::parse(slope1);
        auto b = mcg::Slope::parse(slope2);
        emit(envelope("intersect", Json{{"s1", a.str()}, {"s2", b.str()}},
                      Json{{"intersection", mcg::intersection(a, b).get_str()}}));
        return 0;
    }

    if (distance_cmd->parsed()) {
        auto a = mcg::Slope::parse(dist_s1);
        auto b = mcg::Slope::parse(dist_s2);
        auto d = mcg::farey_distance(a, b, dist_cap);
        Json result{{"exceeds_cap", d.exceeded}};
        if (!d.exceeded) result["distance"] = d.distance;
        emit(envelope("distance",
                      Json{{"s1", a.str()}, {"s2", b.str()}, {"cap", dist_cap}},
                      result));
        return 0;
    }

    if (twist_check_cmd->parsed()) {
        auto word = parse_twist_word(tc_word);
        auto report = mcg::twist_inequality_check(
            word, mcg::Slope::parse(tc_delta), mcg::Slope::parse(tc_delta_prime),
            tc_sharp);
        emit(envelope("twist-check",
                      Json{{"twist", tc_word},
                           {"delta", tc_delta},
                           {"delta_prime", tc_delta_prime},
                           {"same_sign_sharp", tc_sharp}},
                      to_json(report)));
        return 0;
    }

    if (twist_pp_cmd->parsed()) {
        auto a = parse_twist_word(tp_a);
        auto b = parse_twist_word(tp_b);
        auto sample = sample_slopes(tp_box);
        std::vector<long> powers;
        for (long k = 1; k <= tp_max_k; ++k) {
            powers.push_back(k);
            powers.push_back(-k);
        }
        auto verdict = mcg::verify_twist_pingpong(a, b, sample, powers);
        Json config{{"a", tp_a}, {"b", tp_b}, {"sample_box", tp_box}, {"max_k", tp_max_k}};
        if (const auto* cert = std::get_if<mcg::FreeCertificate>(&verdict)) {
            emit(envelope("twist-pingpong", config, to_json(*cert)));
            return 0;
        }
        const auto& cx = std::get<mcg::TwistCounterexample>(verdict);
        emit(envelope("twist-pingpong", config,
                      Json{{"counterexample",
                            Json{{"gamma", cx.gamma.str()},
                                 {"k", cx.k},
                                 {"under_a", cx.under_a}}}}));
        return 1;  // a counterexample would contradict the theorem
    }

    if (find_free_cmd->parsed()) {
        auto gens = parse_generators(ff_gens);
        mcg::IndependenceConfig config;
        config.max_power = ff_max_power;
        config.oracle_depth = ff_oracle_depth;
        auto result = mcg::find_short_independent(gens, config);
        emit(envelope("find-free",
                      Json{{"gens", ff_gens},
                           {"max_power", ff_max_power},
                           {"oracle_depth", ff_oracle_depth}},
                      to_json(result)));
        return 0;
    }

    if (growth_cmd->parsed()) {
        auto gens = parse_generators(gr_gens);
        Json config{{"gens", gr_gens},
                    {"radius", gr_radius},
                    {"cap", gr_cap},
                    {"window", gr_window},
                    {"csv", gr_csv}};

        std::optional<mcg::BallTable> table;
        std::string cache_path = cache_file_for(gens);
        if (!cache_path.empty()) {
            std::ifstream in(cache_path);
            if (in) {
                Json cached = Json::parse(in, nullptr, false);
                if (!cached.is_discarded() && cached.contains("radius") &&
                    cached["radius"].get<long>() >= gr_radius &&
                    cached["cap"].get<std::size_t>() == gr_cap) {
                    mcg::BallTable t;
                    t.generators = mcg::symmetrize_generators(gens);
                    for (const auto& s : cached["sizes"])
                        t.sizes.emplace_back(s.get<std::string>());
                    t.sizes.resize(gr_radius + 1, mcg::Integer(0));
                    t.radius_computed = gr_radius;
                    t.truncated = false;
                    table = std::move(t);
                }
            }
        }
        bool from_cache = table.has_value();
        if (!table) table = mcg::ball_sizes(gens, gr_radius, gr_cap);
        if (!cache_path.empty() && !from_cache && !table->truncated) {
            Json sizes = Json::array();
            for (const auto& s : table->sizes) sizes.push_back(s.get_str());
            Json cached{{"radius", table->radius_computed},
                        {"cap", gr_cap},
                        {"sizes", sizes}};
            std::ofstream out(cache_path);
            out << cached.dump();
        }

        if (gr_csv) {
            std::cout << "radius,size,rate\n";
            for (std::size_t k = 0; k < table->sizes.size(); ++k) {
                double rate =
                    k == 0 ? 0.0 : mcg::log_double(table->sizes[k]) / double(k);
                std::cout << k << "," << table->sizes[k].get_str() << "," << rate
                          << "\n";
            }
            return 0;
        }
        Json result = to_json(*table);
        result["from_cache"] = from_cache;
        if (static_cast<long>(table->sizes.size()) >= gr_window + 3)
            result["estimate"] = to_json(mcg::growth_estimate(*table, gr_window));
        emit(envelope("growth", config, result));
        return 0;
    }

    if (walk_cmd->parsed()) {
        auto gens = parse_generators(wk_gens);
        if (wk_symmetrize) gens = mcg::symmetrize_generators(gens);
        Json config{{"gens", wk_gens},    {"steps", wk_steps},
                    {"mc", wk_mc_trials}, {"seed", wk_seed},
                    {"symmetrize", wk_symmetrize}, {"state_cap", wk_state_cap}};
        if (wk_mc_trials > 0) {
            auto mc = mcg::monte_carlo(gens, wk_steps, wk_mc_trials, wk_seed);
            emit(envelope("walk", config, to_json(mc)));
        } else {
            auto table = mcg::return_probs(gens, wk_steps, wk_state_cap);
            if (table.duplicate_generators)
                std::cerr << "warning: duplicate generators change the walk; "
                             "the kernel stays uniform over the list as given\n";
            Json result = to_json(table);
            if (table.probs.size() >= 3)
                result["rho_estimate"] = to_json(mcg::rho_estimate(table));
            emit(envelope("walk", config, result));
        }
        return 0;
    }

    if (constants_cmd->parsed()) {
        Json config{{"c", ct_c},           {"p", ct_p},
                    {"m", ct_m},           {"search", ct_search},
                    {"simulate", ct_simulate}, {"seed", ct_seed}};
        mcg::Rational c = mcg::parse_rational(ct_c);
        Json result;
        std::vector<mcg::Rational> cs = {c};
        mcg::Rational p1 = mcg::p1_constant(cs);
        result["p1"] = mcg::to_json(p1);
        if (ct_search) {
            auto found = mcg::threshold_search();
            result["d_in_min"] = found.d_in_min;
            result["sum_min"] = found.sum_min;
        }
        if (ct_fk >= 2) {
            auto bound = mcg::return_probability_bound(ct_fk, mcg::parse_integer(ct_w));
            result["return_probability_bound"] =
                Json{{"f", mcg::to_json(bound.exact)},
                     {"kappa", mcg::to_json(bound.kappa)},
                     {"decimal", bound.decimal},
                     {"log10_gap", bound.log10_gap}};
        }
        if (ct_p > 0) {
            mcg::ProjectionParams params{c};
            result["chain"] = to_json(mcg::chain_verify(params, ct_p, ct_m));
            if (ct_simulate > 0) {
                auto trace = mcg::simulate_relpa_pingpong(params, ct_p,
                                                          ct_simulate, ct_seed);
                Json steps = Json::array();
                for (const auto& s : trace.steps)
                    steps.push_back(Json{{"step", s.step},
                                         {"m", s.m},
                                         {"in_xa", s.in_xa},
                                         {"d_far", mcg::to_json(s.d_far)},
                                         {"d_near", mcg::to_json(s.d_near)}});
                result["simulation"] =
                    Json{{"passed", trace.passed}, {"steps", steps}};
            }
        }
        emit(envelope("constants", config, result));
        return 0;
    }

    if (reproduce_cmd->parsed()) {
        using Runner = mcg::acceptance::CriterionResult (*)();
        static const Runner runners[8] = {
            mcg::acceptance::criterion1, mcg::acceptance::criterion2,
            mcg::acceptance::criterion3, mcg::acceptance::criterion4,
            mcg::acceptance::criterion5, mcg::acceptance::criterion6,
            mcg::acceptance::criterion7, mcg::acceptance::criterion8};
        bool all_passed = true;
        for (int i = 0; i < 8; ++i) {
            if (rp_only != 0 && rp_only != i + 1) continue;
            auto result = runners[i]();
            all_passed = all_passed && result.passed;
            std::printf("criterion %d [%s] %s: %s (%.2f s)\n", result.number,
                        result.passed ? "PASS" : "FAIL", result.title.c_str(),
                        result.detail.c_str(), result.seconds);
            std::fflush(stdout);
        }
        return all_passed ? 0 : 1;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mcg::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mcg::HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const mcg::SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
