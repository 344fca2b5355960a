#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "rcs/fibration.hpp"
#include "rcs/loop.hpp"
#include "rcs/membership.hpp"
#include "rcs/realfib.hpp"
#include "rcs/repro.hpp"
#include "rcs/schreier.hpp"
#include "rcs/trace.hpp"

namespace {

using nlohmann::json;

int g_precision = 64;
bool g_json = false;
std::uint64_t g_seed = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json trace_to_json(const rcs::TraceResult& res) {
    json j;
    j["word"] = json::array();
    for (const auto& [idx, e] : res.word.letters)
        j["word"].push_back("x" + std::to_string(idx) + (e < 0 ? "^-1" : ""));
    j["permutation"] = json::array();
    for (int p : res.permutation) j["permutation"].push_back(p + 1);  // 1-based
    j["min_separation"] = res.min_separation_seen;
    j["steps"] = res.steps;
    return j;
}

int cmd_trace(const std::string& builtin_name, const std::string& loop_file) {
    rcs::LoopSpec l =
        !builtin_name.empty() ? rcs::builtin(builtin_name) : rcs::parse_loop(read_file(loop_file));
    rcs::TraceOptions opts;
    opts.precision_bits = g_precision;
    rcs::TraceResult res = rcs::trace(l, opts);
    std::cout << trace_to_json(res).dump(2) << "\n";
    return 0;
}

int cmd_member(const std::string& poly_text) {
    rcs::Poly p = rcs::parse_poly(poly_text);
    rcs::MembershipVerdict v = rcs::membership(p);
    if (g_json) {
        json j;
        j["in_C"] = v.in_c;
        j["in_QC"] = v.in_qc;
        j["in_RC"] = v.in_rc;
        if (!v.witness.empty()) j["witness"] = v.witness;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "in_C:  " << (v.in_c ? "yes" : "no") << "\n"
                  << "in_QC: " << (v.in_qc ? "yes" : "no") << "\n"
                  << "in_RC: " << (v.in_rc ? "yes" : "no") << "\n";
        if (!v.witness.empty()) std::cout << "witness: " << v.witness << "\n";
    }
    return 0;
}

int cmd_sij(int m, int i, int j) {
    rcs::SijPoly s = rcs::sij_poly(m, i, j);
    std::cout << s.expression.to_string() << "\n";
    return 0;
}

rcs::Presentation presentation_from_json(const json& j) {
    rcs::Presentation p;
    for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
    for (const auto& r : j.at("relators")) p.relators.push_back(p.parse_word(r.get<std::string>()));
    return p;
}

int cmd_present(const std::string& input_file, const std::string& preset, bool simplify) {
    rcs::Presentation p;
    rcs::FiniteQuotient q;
    std::optional<std::vector<rcs::Word>> transversal_words;
    if (!preset.empty()) {
        if (preset != "rb3") throw std::runtime_error("unknown preset '" + preset + "'");
        p.generators = {"a", "b", "g"};
        p.relators = {p.parse_word("a g b^-1 g^-1"), p.parse_word("b g a^-1 g^-1")};
        q.degree = 3;
        q.images = {rcs::Perm::from_cycles(3, {{2, 3}}), rcs::Perm::from_cycles(3, {{1, 2}}),
                    rcs::Perm::from_cycles(3, {{1, 3}})};
        std::vector<rcs::Word> tw = {p.parse_word(""),    p.parse_word("a"),
                                     p.parse_word("b"),   p.parse_word("g"),
                                     p.parse_word("a b"), p.parse_word("b a")};
        transversal_words = tw;
    } else {
        json j = json::parse(read_file(input_file));
        p = presentation_from_json(j);
        q.degree = j.at("degree").get<int>();
        for (const auto& gname : p.generators) {
            std::vector<std::vector<int>> cycles;
            for (const auto& cyc : j.at("images").at(gname))
                cycles.push_back(cyc.get<std::vector<int>>());
            q.images.push_back(rcs::Perm::from_cycles(q.degree, cycles));
        }
        if (j.contains("transversal")) {
            std::vector<rcs::Word> tw;
            for (const auto& w : j.at("transversal"))
                tw.push_back(p.parse_word(w.get<std::string>()));
            transversal_words = std::move(tw);
        }
    }
    rcs::Transversal t = rcs::schreier_transversal(p, q, transversal_words);
    rcs::SubgroupPresentation sub = rcs::subgroup_presentation(p, q, t);
    if (simplify) sub = rcs::tietze_simplify(sub);

    json out;
    out["generators"] = sub.generators;
    out["definitions"] = json::object();
    for (size_t k = 0; k < sub.generators.size(); ++k)
        out["definitions"][sub.generators[k]] = p.word_to_string(sub.definitions[k]);
    out["relators"] = json::array();
    for (const auto& r : sub.relators) out["relators"].push_back(sub.word_to_string(r));
    out["simplification_complete"] = sub.simplification_complete;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_realfib_minmax(const std::string& poly_text) {
    rcs::Poly p = rcs::parse_poly(poly_text);
    rcs::RealFiberData d = rcs::minmax(p);
    json j;
    j["m"] = d.m;
    if (d.M_unbounded)
        j["M"] = "infinity";
    else
        j["M"] = d.M;
    if (d.m_exact) j["m_exact"] = rcs::rat_to_string(*d.m_exact);
    if (d.M_exact) j["M_exact"] = rcs::rat_to_string(*d.M_exact);
    j["critical_values"] = d.critical_values;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_realfib_ev0(const std::string& poly_text) {
    rcs::RPoly p = rcs::RPoly::from_exact(rcs::parse_poly(poly_text));
    json j;
    j["ev0"] = rcs::ev0(p);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_realfib_counterexample(int degree) {
    rcs::RPoly q = rcs::counterexample(degree);
    rcs::RealFiberData d = rcs::minmax(q);
    json j;
    j["degree"] = degree;
    j["coefficients"] = q.c;
    j["roots"] = rcs::real_roots_sorted(q);
    j["m"] = d.m;
    j["M"] = d.M;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_reproduce(const std::string& only) {
    rcs::ReproReport rep = rcs::run_reproduce(only, g_seed);
    if (g_json) {
        std::cout << rcs::report_to_json(rep);
    } else {
        for (const auto& c : rep.checks) {
            std::printf("[%s] %-28s expected %s, computed %s (%.0f ms)\n", c.pass ? "PASS" : "FAIL",
                        c.name.c_str(), c.expected.c_str(), c.computed.c_str(), c.elapsed_ms);
        }
        std::printf("%s\n", rep.all_pass ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT");
    }
    return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted configuration spaces of polynomial roots"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", g_precision, "floating precision in bits (64 or 128)");
    app.add_flag("--json", g_json, "JSON output where applicable");
    app.add_option("--seed", g_seed, "seed for randomized property checks only");

    auto* trace_cmd = app.add_subcommand("trace", "trace a polynomial loop to a braid word");
    std::string builtin_name, loop_file;
    trace_cmd->add_option("--builtin", builtin_name, "builtin loop name");
    trace_cmd->add_option("--loop", loop_file, "loop file in the loop DSL");

    auto* member_cmd = app.add_subcommand("member", "membership of a polynomial");
    std::string member_poly;
    member_cmd->add_option("--poly", member_poly, "polynomial, ascending coefficients")->required();

    auto* sij_cmd = app.add_subcommand("sij", "print an S_ij hypersurface polynomial");
    int sij_m = 3, sij_i = 1, sij_j = 2;
    sij_cmd->add_option("--m", sij_m, "number of base points")->required();
    sij_cmd->add_option("--i", sij_i, "first index (1-based)");
    sij_cmd->add_option("--j", sij_j, "second index (1-based)");

    auto* present_cmd = app.add_subcommand("present", "Reidemeister-Schreier subgroup presentation");
    std::string present_input, present_preset;
    bool present_simplify = false;
    present_cmd->add_option("--input", present_input, "presentation + homomorphism JSON file");
    present_cmd->add_option("--preset", present_preset, "named preset (rb3)");
    present_cmd->add_flag("--simplify", present_simplify, "apply Tietze simplification");

    auto* realfib_cmd = app.add_subcommand("realfib", "real-case fibration data");
    auto* rf_minmax = realfib_cmd->add_subcommand("minmax", "m(Q)/M(Q) of a real polynomial");
    std::string rf_poly;
    rf_minmax->add_option("--poly", rf_poly, "polynomial, ascending coefficients")->required();
    auto* rf_ev0 = realfib_cmd->add_subcommand("ev0", "fiber coordinate of a monic real polynomial");
    std::string rf_ev0_poly;
    rf_ev0->add_option("--poly", rf_ev0_poly, "polynomial, ascending coefficients")->required();
    auto* rf_ce = realfib_cmd->add_subcommand("counterexample", "all-real Q with m >= M");
    int rf_degree = 4;
    rf_ce->add_option("--degree", rf_degree, "degree of Q (>= 4)")->required();
    realfib_cmd->require_subcommand(1);

    auto* repro_cmd = app.add_subcommand("reproduce", "run the reproduction suite");
    std::string repro_only;
    repro_cmd->add_option("--only", repro_only, "run only checks whose name contains this string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (trace_cmd->parsed()) {
            if (builtin_name.empty() == loop_file.empty())
                throw CLI::ValidationError("trace", "exactly one of --builtin/--loop is required");
            return cmd_trace(builtin_name, loop_file);
        }
        if (member_cmd->parsed()) return cmd_member(member_poly);
        if (sij_cmd->parsed()) return cmd_sij(sij_m, sij_i, sij_j);
        if (present_cmd->parsed()) {
            if (present_input.empty() && present_preset.empty())
                throw CLI::ValidationError("present", "one of --input/--preset is required");
            return cmd_present(present_input, present_preset, present_simplify);
        }
        if (realfib_cmd->parsed()) {
            if (rf_minmax->parsed()) return cmd_realfib_minmax(rf_poly);
            if (rf_ev0->parsed()) return cmd_realfib_ev0(rf_ev0_poly);
            if (rf_ce->parsed()) return cmd_realfib_counterexample(rf_degree);
        }
        if (repro_cmd->parsed()) return cmd_reproduce(repro_only);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
