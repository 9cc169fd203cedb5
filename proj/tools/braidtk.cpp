// braidtk: braid-and-knot computation toolkit CLI.
//
// Exit codes: 0 = success / pass, 1 = negative result (failed checks,
// certified-no decisions, table issues), 2 = usage or internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <braidtk/braidtk.hpp>

namespace {

long long enumeration_cap_from_env() {
    if (const char* env = std::getenv("BRAIDTK_MAX_RAW_WORDS")) {
        try {
            long long cap = std::stoll(env);
            if (cap > 0) return cap;
        } catch (...) {
            // fall through to the default
        }
        std::cerr << "warning: ignoring invalid BRAIDTK_MAX_RAW_WORDS\n";
    }
    return 100'000'000;
}

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_bounds(int chi, int braid_index, bool as_json) {
    if (braid_index == 1) {
        std::cerr << "braid index 1 is the unknot: crossing number 0, "
                     "the ratio function is not defined there\n";
        return 2;
    }
    braidtk::BoundReport report = braidtk::theorem_bounds(chi, braid_index);
    if (as_json) {
        std::cout << braidtk::bound_report_to_json(report).dump() << "\n";
    } else {
        std::cout << "chi = " << report.chi << ", braid index = " << report.braid_index << "\n"
                  << "lower bound: " << report.lower << "\n"
                  << "upper bound: " << braidtk::rational_to_string(report.upper) << "\n"
                  << "formula: " << report.formula << "\n";
    }
    return 0;
}

int run_invariants(const std::string& word_text, bool with_homfly, bool as_json) {
    braidtk::BraidWord w = braidtk::parse_braid_word(word_text);
    braidtk::Fingerprint fp = braidtk::fingerprint(w);
    std::optional<braidtk::LaurentPoly2> hp;
    if (with_homfly) hp = braidtk::homfly(w);

    if (as_json) {
        braidtk::json j = braidtk::fingerprint_to_json(fp);
        j["word"] = braidtk::format_braid_word(w);
        if (hp) {
            j["homfly"] = braidtk::poly2_to_json(*hp);
            j["mfw_lower_bound"] = braidtk::mfw_lower_bound(*hp);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "word: " << braidtk::format_braid_word(w) << "\n"
                  << "components: " << fp.components << "\n"
                  << "jones (A): " << fp.jones.to_string("A") << "\n";
        if (fp.alexander)
            std::cout << "alexander (t): " << fp.alexander->to_string("t") << "\n";
        else
            std::cout << "alexander: n/a (multi-component closure)\n";
        if (hp) {
            std::cout << "homfly (v,z): " << hp->to_string() << "\n"
                      << "mfw lower bound: " << braidtk::mfw_lower_bound(*hp) << "\n";
        }
    }
    return 0;
}

int run_foliation_check(const std::string& path, bool as_json) {
    braidtk::json input = braidtk::json::parse(read_input_file(path));
    braidtk::FoliationCertificate cert = braidtk::certificate_from_json(input);

    braidtk::CheckReport all;
    for (const auto& report : {braidtk::check_euler_equality(cert), braidtk::check_axis_count(cert),
                               braidtk::check_tile_vertex(cert), braidtk::check_edge_count(cert)}) {
        for (const auto& c : report.checks) all.checks.push_back(c);
    }
    const bool reduced = braidtk::check_bm_reduced(cert);
    braidtk::CheckReport main_ineq = braidtk::check_main_inequality(cert);
    bool pass = all.all_pass();
    if (reduced) {
        for (const auto& c : main_ineq.checks) all.checks.push_back(c);
        pass = all.all_pass();
    }

    if (as_json) {
        braidtk::json j = braidtk::check_report_to_json(all);
        j["bm_reduced"] = reduced;
        j["pass"] = pass;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : all.checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": " << c.lhs
                      << (c.relation == braidtk::CheckRelation::equal ? " == " : " <= ") << c.rhs
                      << "\n";
        }
        std::cout << "bm_reduced: " << (reduced ? "yes" : "no") << "\n"
                  << (pass ? "all checks pass" : "checks FAILED") << "\n";
    }
    return pass ? 0 : 1;
}

int run_decide(const std::string& word_text, const std::string& fp_path, int chi, int max_index,
               long long cap, bool as_json) {
    braidtk::Fingerprint target;
    if (!word_text.empty()) {
        target = braidtk::fingerprint(braidtk::parse_braid_word(word_text));
    } else if (!fp_path.empty()) {
        target = braidtk::fingerprint_from_json(braidtk::json::parse(read_input_file(fp_path)));
    } else {
        std::cerr << "decide: need --word or --fingerprint\n";
        return 2;
    }

    braidtk::DecisionResult result =
        braidtk::decide_braid_index_leq(target, chi, max_index, cap);
    if (as_json) {
        std::cout << braidtk::decision_to_json(result).dump() << "\n";
    } else {
        switch (result.kind) {
            case braidtk::DecisionKind::unknot_special:
                std::cout << "result: unknot (braid index 1)\n";
                break;
            case braidtk::DecisionKind::candidate_found:
                std::cout << "result: candidate found (heuristic: fingerprint match)\n"
                          << "witness: " << braidtk::format_braid_word(*result.witness) << "\n";
                break;
            case braidtk::DecisionKind::certified_no:
                std::cout << "result: certified no (braid index > " << max_index << ")\n";
                break;
        }
        for (const auto& l : result.levels)
            std::cout << "level b=" << l.strands << ": budget " << l.budget << ", visited "
                      << l.visited << ", emitted " << l.emitted << "\n";
    }
    return result.kind == braidtk::DecisionKind::certified_no ? 1 : 0;
}

int run_census(int genus, int strands, int threads, long long cap, bool as_json) {
    braidtk::CensusResult result = braidtk::census(genus, strands, threads, cap);
    if (as_json) {
        for (const auto& e : result.certified) {
            braidtk::json j = braidtk::census_entry_to_json(e);
            j["status"] = "certified";
            std::cout << j.dump() << "\n";
        }
        for (const auto& e : result.residue) {
            braidtk::json j = braidtk::census_entry_to_json(e);
            j["status"] = "residue";
            std::cout << j.dump() << "\n";
        }
    } else {
        std::cout << "census genus " << result.genus << " on " << result.strands
                  << " strands, budget " << result.budget << " crossings\n"
                  << "words visited " << result.stats.visited << ", canonical "
                  << result.stats.emitted << "\n"
                  << "certified entries: " << result.certified.size() << "\n";
        for (const auto& e : result.certified)
            std::cout << "  " << braidtk::format_braid_word(e.witness) << "  genus "
                      << e.genus_lower << ", braid index " << e.mfw << "\n";
        std::cout << "residue entries (not fully certified): " << result.residue.size() << "\n";
        for (const auto& e : result.residue)
            std::cout << "  " << braidtk::format_braid_word(e.witness) << "  genus in ["
                      << e.genus_lower << ", " << e.genus_upper << "], braid index in ["
                      << e.mfw << ", " << result.strands << "]\n";
    }
    return 0;
}

int run_table_validate(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open table file: " << path << "\n";
        return 2;
    }
    braidtk::TableReport report = braidtk::validate_table(in);
    if (as_json) {
        braidtk::json rows = braidtk::json::array();
        for (const auto& r : report.rows) rows.push_back(braidtk::table_row_to_json(r));
        braidtk::json issues = braidtk::json::array();
        for (const auto& i : report.issues)
            issues.push_back(
                braidtk::json{{"line", i.line}, {"name", i.name}, {"message", i.message}});
        std::cout << braidtk::json{{"rows", rows}, {"issues", issues}, {"pass", report.clean()}}
                         .dump()
                  << "\n";
    } else {
        std::cout << report.rows.size() << " rows parsed\n";
        for (const auto& i : report.issues)
            std::cout << "line " << i.line << (i.name.empty() ? "" : " (" + i.name + ")") << ": "
                      << i.message << "\n";
        std::cout << (report.clean() ? "table is valid" : "table has issues") << "\n";
    }
    return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid-and-knot computation toolkit"};
    app.require_subcommand(1);
    const long long cap = enumeration_cap_from_env();

    bool json_bounds = false, json_inv = false, json_fol = false, json_dec = false,
         json_cen = false, json_tab = false;

    auto* bounds_cmd = app.add_subcommand("bounds", "crossing number bounds from (chi, braid index)");
    int chi = 0, braid_index = 0;
    bounds_cmd->add_option("--chi", chi, "maximal Euler characteristic")->required();
    bounds_cmd->add_option("--braid-index,-b", braid_index, "braid index")->required();
    bounds_cmd->add_flag("--json", json_bounds, "JSON output");

    auto* inv_cmd = app.add_subcommand("invariants", "fingerprint of a braid closure");
    std::string inv_word;
    bool with_homfly = false;
    inv_cmd->add_option("word", inv_word, "braid word, e.g. \"B2: 1 1 1\"")->required();
    inv_cmd->add_flag("--homfly", with_homfly, "also compute HOMFLY and the MFW bound");
    inv_cmd->add_flag("--json", json_inv, "JSON output");

    auto* fol_cmd = app.add_subcommand("foliation", "braid foliation tools");
    fol_cmd->require_subcommand(1);
    auto* fol_check = fol_cmd->add_subcommand("check", "run the counting identity checks");
    std::string cert_path;
    fol_check->add_option("certificate", cert_path, "certificate JSON file, or - for stdin")
        ->required();
    fol_check->add_flag("--json", json_fol, "JSON output");

    auto* dec_cmd = app.add_subcommand("decide", "decide braid index <= n from a fingerprint");
    std::string dec_word, dec_fp;
    int dec_chi = 0, dec_n = 0;
    dec_cmd->add_option("--word", dec_word, "braid word presenting the target link");
    dec_cmd->add_option("--fingerprint", dec_fp, "fingerprint JSON file, or - for stdin");
    dec_cmd->add_option("--chi", dec_chi, "maximal Euler characteristic of the target")
        ->required();
    dec_cmd->add_option("--max-index,-n", dec_n, "candidate braid index bound")->required();
    dec_cmd->add_flag("--json", json_dec, "JSON output");

    auto* cen_cmd = app.add_subcommand("census", "genus/braid-index census within the theorem budget");
    int cen_g = 0, cen_n = 0, cen_threads = 1;
    cen_cmd->add_option("--genus,-g", cen_g, "target genus")->required();
    cen_cmd->add_option("--strands,-n", cen_n, "braid index")->required();
    cen_cmd->add_option("--threads", cen_threads, "worker threads");
    cen_cmd->add_flag("--json", json_cen, "JSON lines output");

    auto* tab_cmd = app.add_subcommand("table", "knot table tools");
    tab_cmd->require_subcommand(1);
    auto* tab_validate = tab_cmd->add_subcommand("validate", "validate a knot table CSV");
    std::string table_path;
    tab_validate->add_option("path", table_path, "CSV file")->required();
    tab_validate->add_flag("--json", json_tab, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bounds_cmd->parsed()) return run_bounds(chi, braid_index, json_bounds);
        if (inv_cmd->parsed()) return run_invariants(inv_word, with_homfly, json_inv);
        if (fol_check->parsed()) return run_foliation_check(cert_path, json_fol);
        if (dec_cmd->parsed()) return run_decide(dec_word, dec_fp, dec_chi, dec_n, cap, json_dec);
        if (cen_cmd->parsed()) return run_census(cen_g, cen_n, cen_threads, cap, json_cen);
        if (tab_validate->parsed()) return run_table_validate(table_path, json_tab);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
