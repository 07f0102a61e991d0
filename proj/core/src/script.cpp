#include <fstream>
#include <sstream>

#include "rote/compiler.hpp"

namespace rote {

namespace {

struct Line {
    std::vector<std::string> words;  // tokens before the quoted formula
    std::string formula;             // empty if none
};

Line split_command(const std::string& raw) {
    Line out;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto quote = line.find('"');
    std::string head = line.substr(0, quote == std::string::npos ? line.size() : quote);
    std::istringstream in(head);
    std::string w;
    while (in >> w) out.words.push_back(w);
    if (quote != std::string::npos) {
        auto end = line.rfind('"');
        if (end == quote) throw std::invalid_argument("script: unterminated formula string");
        out.formula = line.substr(quote + 1, end - quote - 1);
    }
    return out;
}

}  // namespace

ScriptResult run_script(FormulaCompiler& compiler, std::string_view text) {
    ScriptResult result;
    std::ostringstream out;
    std::map<std::string, LinearRepresentation> linreps;

    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        Line cmd;
        try {
            cmd = split_command(raw);
            if (cmd.words.empty()) continue;
            const std::string& op = cmd.words[0];

            if (op == "def") {
                if (cmd.words.size() < 2) throw std::invalid_argument("def: missing name");
                const std::string& name = cmd.words[1];
                if (cmd.words.size() == 2) {
                    compiler.define_text(name, cmd.formula);
                    out << "def " << name << ": " << compiler.store().at(name).dfa.num_states()
                        << " states\n";
                } else if (cmd.words.size() == 4 && cmd.words[2] == "count") {
                    Relation rel = compiler.compile_text(cmd.formula);
                    LinearRepresentation lr = compiler.count_representation(rel, cmd.words[3]);
                    linreps.emplace(name, std::move(lr));
                    out << "def " << name << " count " << cmd.words[3] << ": dimension "
                        << linreps.at(name).dim() << "\n";
                } else if (cmd.words.size() == 3) {
                    // "def name n": linear representation with parameter n,
                    // counting the remaining free variable
                    Relation rel = compiler.compile_text(cmd.formula);
                    std::string counted;
                    for (const auto& v : rel.vars)
                        if (v != cmd.words[2]) {
                            if (!counted.empty())
                                throw std::invalid_argument("def: ambiguous counted variable");
                            counted = v;
                        }
                    if (counted.empty()) throw std::invalid_argument("def: no counted variable");
                    LinearRepresentation lr = compiler.count_representation(rel, counted);
                    linreps.emplace(name, std::move(lr));
                    out << "def " << name << " count " << counted << ": dimension "
                        << linreps.at(name).dim() << "\n";
                } else {
                    throw std::invalid_argument("def: bad syntax");
                }
            } else if (op == "eval") {
                if (cmd.words.size() != 2) throw std::invalid_argument("eval: bad syntax");
                bool value = compiler.eval_closed_text(cmd.formula);
                out << "eval " << cmd.words[1] << ": " << (value ? "TRUE" : "FALSE") << "\n";
                if (!value) result.ok = false;
            } else if (op == "linrep-eq") {
                if (cmd.words.size() != 3) throw std::invalid_argument("linrep-eq: bad syntax");
                bool equal = linrep_equal(linreps.at(cmd.words[1]), linreps.at(cmd.words[2]));
                out << "linrep-eq " << cmd.words[1] << ' ' << cmd.words[2] << ": "
                    << (equal ? "EQUAL" : "DIFFERENT") << "\n";
                if (!equal) result.ok = false;
            } else if (op == "linrep-val") {
                if (cmd.words.size() != 3) throw std::invalid_argument("linrep-val: bad syntax");
                unsigned long long n = std::stoull(cmd.words[2]);
                out << "linrep-val " << cmd.words[1] << ' ' << n << ": "
                    << linrep_value(linreps.at(cmd.words[1]), compiler.system(), n).to_string()
                    << "\n";
            } else if (op == "export") {
                if (cmd.words.size() != 3) throw std::invalid_argument("export: bad syntax");
                const auto& entry = compiler.store().at(cmd.words[1]);
                std::ofstream file(cmd.words[2]);
                if (!file) throw std::runtime_error("export: cannot open " + cmd.words[2]);
                file << dfa_to_text(entry.dfa);
                out << "export " << cmd.words[1] << " -> " << cmd.words[2] << "\n";
            } else {
                throw std::invalid_argument("unknown command: " + op);
            }
        } catch (const DivergingCountError& e) {
            out << "line " << line_no << ": diverging count: " << e.what() << "\n";
            result.ok = false;
        } catch (const std::exception& e) {
            out << "line " << line_no << ": error: " << e.what() << "\n";
            result.ok = false;
        }
    }
    result.output = out.str();
    return result;
}

}  // namespace rote
