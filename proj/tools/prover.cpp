// Command-line driver: named checks, script execution, automata export.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rote/checks.hpp"
#include "rote/compiler.hpp"
#include "rote/search.hpp"

namespace {

const rote::NumerationSystem& system_by_name(const std::string& name) {
    if (name == "dt_h") return rote::dt_h();
    if (name == "dt_q" || name == "mor") return rote::dt_q();
    throw std::invalid_argument("unknown numeration system: " + name +
                                " (available: dt_h, dt_q)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_check(const std::string& name, const std::string& system,
              const rote::CheckOptions& opts, const std::string& report_path) {
    if (system != "dt_q" && system != "mor")
        throw std::invalid_argument("the named checks address the dt_q system");
    std::vector<rote::CheckReport> reports;
    if (name == "all") {
        reports = rote::run_all(opts);
    } else {
        reports.push_back(rote::run_check(name, opts));
    }
    for (const auto& r : reports) std::cout << rote::report_text(r);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot open " + report_path);
        out << rote::reports_json(reports);
        std::cout << "report written to " << report_path << "\n";
    }
    return rote::all_passed(reports) ? 0 : 1;
}

int cmd_script(const std::string& path, const std::string& system) {
    rote::FormulaCompiler compiler(system_by_name(system));
    rote::ScriptResult result = rote::run_script(compiler, read_file(path));
    std::cout << result.output;
    return result.ok ? 0 : 1;
}

int cmd_export(const std::string& what, const std::string& path) {
    std::string text;
    if (what == "dt_h.addressing") text = rote::dfa_to_text(rote::dt_h().addressing_dfa());
    else if (what == "dt_q.addressing") text = rote::dfa_to_text(rote::dt_q().addressing_dfa());
    else if (what == "dt_h.sequence") text = rote::sequence_automaton_to_text(rote::dt_h());
    else if (what == "dt_q.sequence") text = rote::sequence_automaton_to_text(rote::dt_q());
    else if (what == "dt_h.dfao") text = rote::dfao_to_text(minimize(rote::dt_h().word_dfao()));
    else if (what == "dt_q.dfao") text = rote::dfao_to_text(minimize(rote::dt_q().word_dfao()));
    else if (what == "dt_h.addition") text = rote::dfa_to_text(rote::dt_h().addition_dfa());
    else if (what == "dt_q.addition") text = rote::dfa_to_text(rote::dt_q().addition_dfa());
    else if (what == "dt_h.system") text = rote::system_to_text(rote::dt_h());
    else if (what == "dt_q.system") text = rote::system_to_text(rote::dt_q());
    else
        throw std::invalid_argument(
            "unknown automaton: " + what +
            " (use {dt_h,dt_q}.{addressing,sequence,dfao,addition,system})");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    std::cout << "wrote " << what << " to " << path << "\n";
    return 0;
}

int cmd_search(bool strict, size_t cap, bool csv) {
    rote::SearchConfig cfg;
    cfg.threshold = rote::Rational(5, 2);
    cfg.strict = strict;
    if (cap) cfg.max_length = cap;
    rote::SearchResult res = rote::grow_tree(cfg);
    if (csv) {
        std::cout << "n,count,bound_16n,ok\n";
        for (size_t n = 1; n < res.level_counts.size(); ++n)
            std::cout << n << ',' << res.level_counts[n] << ',' << 16 * n << ','
                      << (res.level_counts[n] <= 16 * n ? 1 : 0) << "\n";
    } else {
        std::cout << "max depth " << res.max_depth << (res.truncated ? " (truncated)" : "")
                  << ", " << res.maximal_words.size() << " maximal words\n";
        for (const auto& w : res.maximal_words) std::cout << w << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures and oracles for the binary word q"};
    app.require_subcommand(1);

    std::string check_name = "all", system = "dt_q", report_path;
    size_t prefix_len = 0;
    auto* check = app.add_subcommand("check", "run a named check or all of them");
    check->add_option("name", check_name, "check name or 'all'");
    check->add_option("--system", system, "numeration system (dt_h or dt_q)");
    check->add_option("--prefix-len", prefix_len, "override oracle prefix length");
    check->add_option("--report", report_path, "write a JSON report");

    std::string script_path;
    auto* script = app.add_subcommand("script", "run a definition/eval script");
    script->add_option("file", script_path, "script file")->required();
    script->add_option("--system", system, "numeration system (dt_h or dt_q)");

    std::string export_what, export_path;
    auto* exp = app.add_subcommand("export", "write an automaton in the text format");
    exp->add_option("automaton", export_what, "e.g. dt_q.addition")->required();
    exp->add_option("file", export_path, "output file")->required();

    bool non_strict = false, csv = false;
    size_t cap = 0;
    auto* search = app.add_subcommand("search", "enumerate bounded-exponent binary words");
    search->add_flag("--non-strict", non_strict, "allow exponent exactly 5/2");
    search->add_option("--max-length", cap, "stop the tree at this length");
    search->add_flag("--csv", csv, "per-level counts as CSV");

    app.add_subcommand("list", "list available checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            rote::CheckOptions opts;
            opts.prefix_len = prefix_len;
            return cmd_check(check_name, system, opts, report_path);
        }
        if (script->parsed()) return cmd_script(script_path, system);
        if (exp->parsed()) return cmd_export(export_what, export_path);
        if (search->parsed()) return cmd_search(!non_strict, cap, csv);
        for (const auto& name : rote::check_names()) std::cout << name << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
