// Command-line front end: exact segment/ladder calculus, path enumeration,
// socle and chain weights, covering censuses, and the bundled verification
// suites.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snake/snake.hpp"
#include "snake/verify.hpp"

using nlohmann::json;
using namespace snake;

namespace {

constexpr long long kDefaultPathCap = 2'000'000;
constexpr long long kDefaultNodeBudget = 2'000'000;

json provenance(Rank rk, long long cap_paths, long long node_budget) {
    return json{{"rank", rk.n},
                {"h", rk.h()},
                {"cap_paths", cap_paths},
                {"node_budget", node_budget},
                {"threads", env_thread_count()}};
}

int run_verify(const std::string& name, int rank, const std::string& format) {
    Suite suite;
    if (name == "lemmas") {
        suite_lemmas(suite, Rank(rank));
    } else if (name == "formulas") {
        suite_formulas(suite, Rank(rank));
    } else if (name == "examples") {
        suite_examples(suite);
    } else {
        std::cerr << "unknown suite: " << name << " (expected lemmas|formulas|examples)\n";
        return 2;
    }

    int passed = 0, failed = 0, inconclusive = 0;
    json checks = json::array();
    for (const auto& c : suite.checks) {
        json j{{"claim", c.claim}, {"status", c.status}};
        if (!c.detail.is_null()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
        if (c.status == "pass") ++passed;
        else if (c.status == "fail") ++failed;
        else ++inconclusive;
    }
    if (format == "text") {
        for (const auto& c : suite.checks)
            std::cout << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "----")
                      << "] " << c.claim << "\n";
        std::cout << passed << " passed, " << failed << " failed, " << inconclusive
                  << " inconclusive\n";
    } else {
        json report{{"suite", name},
                    {"rank", rank},
                    {"checks", checks},
                    {"passed", passed},
                    {"failed", failed},
                    {"inconclusive", inconclusive}};
        std::cout << report.dump(2) << "\n";
    }
    if (suite.any_inconclusive())
        std::cerr << "warning: some checks were inconclusive at the given caps\n";
    return suite.any_fail() ? 1 : 0;
}

std::vector<LWeight> parse_witness_list(const std::string& text) {
    std::vector<LWeight> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string piece =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(parse_lweight(piece.substr(a, b - a + 1)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact segment, path, and l-weight combinatorics for type A quantum loop algebras"};
    app.require_subcommand(1);

    int rank = 0;
    long long cap_paths = kDefaultPathCap;
    long long node_budget = kDefaultNodeBudget;
    std::string format = "json";
    std::string seg_text, s_text, sp_text, s1_text, s1p_text, target_text, factors_text;
    std::string witness_text, window_text, mode_text, weight_text;
    int chain_p = 1;
    bool count_only = false, seed_canonical = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--rank", rank, "rank N of the type A diagram")->required();
        cmd->add_option("--cap-paths", cap_paths, "cap on enumerated paths/tuples");
        cmd->add_option("--format", format, "output format: json|text|csv");
    };

    auto* paths_cmd = app.add_subcommand("paths", "enumerate the lattice paths of a segment");
    add_common(paths_cmd);
    paths_cmd->add_option("--segment", seg_text, "segment literal, e.g. 0..2")->required();
    paths_cmd->add_flag("--count", count_only, "print only the path count");

    auto* qchar_cmd = app.add_subcommand("qchar", "l-weight support of a snake module");
    add_common(qchar_cmd);
    qchar_cmd->add_option("--s", s_text, "ladder literal, e.g. [0..2, 1..3]")->required();

    auto* socle_cmd = app.add_subcommand("socle", "socle weight of a covering pair");
    add_common(socle_cmd);
    socle_cmd->add_option("--s", s_text, "covering ladder")->required();
    socle_cmd->add_option("--sp", sp_text, "covered ladder")->required();

    auto* pichain_cmd = app.add_subcommand("pichain", "chain of diamond weights of a p-cover");
    add_common(pichain_cmd);
    pichain_cmd->add_option("--s", s_text, "covering ladder")->required();
    pichain_cmd->add_option("--sp", sp_text, "covered ladder")->required();
    pichain_cmd->add_option("--p", chain_p, "cover depth (default 1)");

    auto* census_cmd = app.add_subcommand("census", "covering censuses");
    census_cmd->require_subcommand(1);
    auto* census_c = census_cmd->add_subcommand("c", "segments covered by a seed");
    add_common(census_c);
    census_c->add_option("--s", seg_text, "seed segment")->required();
    auto* census_c1 = census_cmd->add_subcommand("c1", "1-cover completions of a seed pair");
    add_common(census_c1);
    census_c1->add_option("--s1", s1_text, "seed segment")->required();
    census_c1->add_option("--s1p", s1p_text,
                          "covered seed segment (sweeps the gap-2 family when omitted)");
    census_c1->add_flag("--seed-canonical", seed_canonical,
                        "shift the seed so its left endpoint lies in [0, 1/2)");
    auto* census_d2 = census_cmd->add_subcommand("d2", "dual-pair family of a seed");
    add_common(census_d2);
    census_d2->add_option("--s1", s1_text, "seed segment (supp >= h/2)")->required();
    auto* census_hlw =
        census_cmd->add_subcommand("hlw", "dominant highest-weight census of a p-cover");
    add_common(census_hlw);
    census_hlw->add_option("--s", s_text, "covering ladder")->required();
    census_hlw->add_option("--sp", sp_text, "covered ladder")->required();
    census_hlw->add_option("--p", chain_p, "cover depth (default 1)");

    auto* weyl_cmd = app.add_subcommand(
        "weyl-member", "membership of a weight in a product of fundamental supports");
    add_common(weyl_cmd);
    weyl_cmd->add_option("--target", target_text, "target weight literal")->required();
    weyl_cmd->add_option("--factors", factors_text, "multisegment of fundamental factors")
        ->required();
    weyl_cmd->add_option("--witness", witness_text, "semicolon-separated per-factor weights");
    weyl_cmd->add_option("--node-budget", node_budget, "search node budget");

    auto* flags_cmd = app.add_subcommand("flags", "condition flags of a covering pair");
    add_common(flags_cmd);
    flags_cmd->add_option("--s", s_text, "covering ladder")->required();
    flags_cmd->add_option("--sp", sp_text, "covered ladder")->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict to a subdiagram window");
    add_common(restrict_cmd);
    restrict_cmd->add_option("--window", window_text,
                             "window a:b (derived from --s/--sp when omitted)");
    restrict_cmd->add_option("--segment", seg_text, "segment to restrict");
    restrict_cmd->add_option("--s", s_text, "multisegment to restrict");
    restrict_cmd->add_option("--sp", sp_text, "second multisegment (enables the derived window)");
    restrict_cmd->add_option("--weight", weight_text, "l-weight to restrict");

    auto* construct_cmd =
        app.add_subcommand("construct", "constructive extensions of 1-covering pairs");
    add_common(construct_cmd);
    construct_cmd->add_option("--s", s_text, "covering ladder")->required();
    construct_cmd->add_option("--sp", sp_text, "covered ladder")->required();
    construct_cmd->add_option("--mode", mode_text, "extend | socle-realize")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a bundled verification suite");
    std::string suite_name;
    verify_cmd->add_option("suite", suite_name, "lemmas | formulas | examples")->required();
    verify_cmd->add_option("--rank", rank, "rank for the sweeps (default 4/5 per suite)");
    verify_cmd->add_option("--cap-paths", cap_paths, "cap on enumerated paths/tuples");
    verify_cmd->add_option("--node-budget", node_budget, "search node budget");
    verify_cmd->add_option("--format", format, "output format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*paths_cmd) {
            Rank rk(rank);
            Segment s = parse_segment(seg_text);
            if (count_only) {
                if (format == "text") {
                    std::cout << path_count(s, rk) << "\n";
                } else {
                    std::cout << json{{"segment", s},
                                      {"count", path_count(s, rk)},
                                      {"provenance", provenance(rk, cap_paths, node_budget)}}
                                     .dump(2)
                              << "\n";
                }
                return 0;
            }
            json arr = json::array();
            long long n = 0;
            bool capped = false;
            PathStream st(s, rk);
            while (auto p = st.next()) {
                if (n >= cap_paths) {
                    capped = true;
                    break;
                }
                arr.push_back(*p);
                ++n;
            }
            std::cout << json{{"segment", s},
                              {"count", path_count(s, rk)},
                              {"emitted", n},
                              {"capped", capped},
                              {"paths", arr},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*qchar_cmd) {
            Rank rk(rank);
            Multisegment ms = parse_multisegment(s_text);
            auto sup = snake_support(ms, rk, cap_paths);
            if (format == "text") {
                for (const auto& w : sup.weights) std::cout << to_string(w) << "\n";
                return 0;
            }
            json arr = json::array();
            for (const auto& w : sup.weights)
                arr.push_back({{"weight", w}, {"text", to_string(w)}});
            std::cout << json{{"s", ms},
                              {"dimension", sup.dimension},
                              {"capped", sup.capped},
                              {"weights", arr},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*socle_cmd) {
            Rank rk(rank);
            Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
            LWeight w = socle_weight(s, sp, rk);
            if (format == "text") {
                std::cout << "socle = " << to_string(w) << "\n";
                return 0;
            }
            std::cout << json{{"s", s},
                              {"sp", sp},
                              {"socle", w},
                              {"text", to_string(w)},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*pichain_cmd) {
            Rank rk(rank);
            Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
            auto chain = pi_chain(s, sp, chain_p, rk);
            if (format == "text") {
                for (std::size_t k = 0; k < chain.pis.size(); ++k)
                    std::cout << "pi_" << k << " = " << to_string(chain.pis[k]) << "\n";
                return 0;
            }
            json j = chain;
            j["provenance"] = provenance(rk, cap_paths, node_budget);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*census_c) {
            Rank rk(rank);
            Segment s = parse_segment(seg_text);
            auto sets = covered_sets(s, rk);
            if (format == "csv") {
                std::cout << "kind,segment\n";
                for (const auto& t : sets.c) std::cout << "c," << to_string(t) << "\n";
                for (const auto& t : sets.c1) std::cout << "c1," << to_string(t) << "\n";
                return 0;
            }
            std::cout << json{{"s", s},
                              {"c", sets.c},
                              {"c1", sets.c1},
                              {"count_c", sets.c.size()},
                              {"count_c1", sets.c1.size()},
                              {"count_c_formula", covered_count_formula(s, rk)},
                              {"count_c1_formula", covered_count1_formula(s, rk)},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*census_c1) {
            Rank rk(rank);
            Segment s1 = parse_segment(s1_text);
            if (seed_canonical) s1 = s1.shifted(-((s1.ti() - (s1.ti() & 1)) / 2));
            std::vector<Segment> seeds;
            if (!s1p_text.empty())
                seeds.push_back(parse_segment(s1p_text));
            else
                seeds = covered_sets(s1, rk).c1;
            json records = json::array();
            long long total = 0;
            for (const auto& s1p : seeds) {
                auto rec = c1_pairs(s1, s1p, rk);
                total += rec.count_enumerated;
                records.push_back(rec);
            }
            if (format == "csv") {
                std::cout << "s1,s1p,s2,s2p,almostdual,kr,minmax\n";
                for (const auto& r : records)
                    for (const auto& pr : r.at("pairs"))
                        std::cout << to_string(r.at("s1").get<Segment>()) << ','
                                  << to_string(r.at("s1p").get<Segment>()) << ','
                                  << to_string(pr.at("s2").get<Segment>()) << ','
                                  << to_string(pr.at("s2p").get<Segment>()) << ','
                                  << pr.at("flags").at("almostdual") << ','
                                  << pr.at("flags").at("kr") << ','
                                  << pr.at("flags").at("minmax") << "\n";
                return 0;
            }
            std::cout << json{{"s1", s1},
                              {"records", records},
                              {"total", total},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*census_d2) {
            Rank rk(rank);
            Segment s1 = parse_segment(s1_text);
            auto rec = d2_census(s1, rk);
            if (format == "csv") {
                std::cout << "s1,s,sp\n";
                for (const auto& [a, b] : rec.pairs)
                    std::cout << to_string(rec.s1) << ',' << to_string(a) << ','
                              << to_string(b) << "\n";
                return 0;
            }
            json pairs = json::array();
            for (const auto& [a, b] : rec.pairs) pairs.push_back({{"s", a}, {"sp", b}});
            std::cout << json{{"s1", rec.s1},
                              {"pairs", pairs},
                              {"count", rec.pairs.size()},
                              {"count_formula", rec.count_formula},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*census_hlw) {
            Rank rk(rank);
            Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
            auto census = hlw_census(s, sp, chain_p, rk, cap_paths);
            json arr = json::array();
            for (const auto& w : census.weights)
                arr.push_back({{"weight", w}, {"text", to_string(w)}});
            std::cout << json{{"s", s},
                              {"sp", sp},
                              {"p", chain_p},
                              {"weights", arr},
                              {"enumerated", census.enumerated},
                              {"capped", census.capped},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            if (census.capped)
                std::cerr << "warning: tuple enumeration capped; census incomplete\n";
            return 0;
        }

        if (*weyl_cmd) {
            Rank rk(rank);
            LWeight target = parse_lweight(target_text);
            Multisegment factors = parse_multisegment(factors_text);
            std::optional<std::vector<LWeight>> witness;
            if (!witness_text.empty()) witness = parse_witness_list(witness_text);
            auto rep =
                weyl_membership(target, factors, rk, witness ? &*witness : nullptr, node_budget);
            std::string outcome = rep.outcome == SearchOutcome::member       ? "member"
                                  : rep.outcome == SearchOutcome::non_member ? "non-member"
                                                                             : "inconclusive";
            json fw = json::array();
            for (std::size_t k = 0; k < rep.factor_weights.size(); ++k)
                fw.push_back({{"factor", rep.factor_order[k]},
                              {"weight", rep.factor_weights[k]},
                              {"text", to_string(rep.factor_weights[k])}});
            std::cout << json{{"target", target},
                              {"outcome", outcome},
                              {"nodes_visited", rep.nodes_visited},
                              {"factor_weights", fw},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            if (rep.outcome == SearchOutcome::inconclusive)
                std::cerr << "warning: search budget exhausted; result inconclusive\n";
            return 0;
        }

        if (*flags_cmd) {
            Rank rk(rank);
            Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
            auto f = condition_flags(s, sp, rk);
            std::cout << json{{"s", s},
                              {"sp", sp},
                              {"flags", f},
                              {"provenance", provenance(rk, cap_paths, node_budget)}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (*restrict_cmd) {
            Rank rk(rank);
            std::optional<Window> win;
            if (!window_text.empty()) {
                auto sep = window_text.find(':');
                if (sep == std::string::npos)
                    throw std::invalid_argument("window must have the form a:b");
                win = Window(std::stoi(window_text.substr(0, sep)),
                             std::stoi(window_text.substr(sep + 1)));
            }
            json j;
            if (!s_text.empty() && !sp_text.empty()) {
                Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
                if (!win) win = derived_window(s, sp, rk);
                j["s"] = restrict_multisegment(s, *win, rk);
                j["sp"] = restrict_multisegment(sp, *win, rk);
            } else if (!s_text.empty()) {
                if (!win) throw std::invalid_argument("a window is required without --sp");
                j["s"] = restrict_multisegment(parse_multisegment(s_text), *win, rk);
            }
            if (!seg_text.empty()) {
                if (!win) throw std::invalid_argument("a window is required for --segment");
                j["segment"] = restrict_segment(parse_segment(seg_text), *win, rk);
            }
            if (!weight_text.empty()) {
                if (!win) throw std::invalid_argument("a window is required for --weight");
                LWeight w = restrict_lweight(parse_lweight(weight_text), *win, rk);
                j["weight"] = w;
                j["weight_text"] = to_string(w);
            }
            if (!win) throw std::invalid_argument("nothing to restrict");
            j["window"] =
                json{{"a", win->a}, {"b", win->b}, {"nj", win->nj()}, {"hj", win->hj()}};
            j["provenance"] = provenance(rk, cap_paths, node_budget);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*construct_cmd) {
            Rank rk(rank);
            Multisegment s = parse_multisegment(s_text), sp = parse_multisegment(sp_text);
            LadderPair pair;
            if (mode_text == "extend")
                pair = construct_extend(s, sp, rk);
            else if (mode_text == "socle-realize")
                pair = construct_socle_realize(s, sp, rk);
            else
                throw std::invalid_argument("mode must be extend|socle-realize");
            json j{{"mode", mode_text},
                   {"s", pair.s},
                   {"sp", pair.sp},
                   {"provenance", provenance(rk, cap_paths, node_budget)}};
            if (mode_text == "socle-realize")
                j["socle_text"] = to_string(socle_weight(pair.s, pair.sp, rk));
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            int r = rank != 0 ? rank : (suite_name == "formulas" ? 5 : 4);
            return run_verify(suite_name, r, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }

    return 2;
}
