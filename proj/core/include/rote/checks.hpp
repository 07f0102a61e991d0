#pragma once

#include <string>
#include <vector>

#include "rote/compiler.hpp"

namespace rote {

enum class Verdict { Pass, Fail, Inconclusive, ConjecturalPass, ConjecturalFail };

std::string to_string(Verdict v);

struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    // one line per sub-result: expected vs observed with its source
    // ("reference" = published value, "oracle" = independent brute force,
    // "definition" = forced by construction)
    struct Item {
        std::string what;
        std::string expected;
        std::string observed;
        std::string source;
        bool ok = false;
    };
    std::vector<Item> items;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> content hash
    double seconds = 0;
};

struct CheckOptions {
    size_t prefix_len = 0;  // 0 = per-check default
};

std::vector<std::string> check_names();
CheckReport run_check(const std::string& name, const CheckOptions& opts = {});
std::vector<CheckReport> run_all(const CheckOptions& opts = {});

std::string report_text(const CheckReport& report);
std::string reports_json(const std::vector<CheckReport>& reports);

// true iff every non-conjectural check passed
bool all_passed(const std::vector<CheckReport>& reports);

// script constants shared by the checks, the CLI and the tests
namespace formulas {
inline constexpr std::string_view kCheck52Plus =
    "~Ei,n n>=1 & At,u (t>=i & 2*t<=2*i+3*n & u=t+n) => Q[t]=Q[u]";
inline constexpr std::string_view kFactorEq =
    "Au,v (u>=i & u<i+n & u+j=v+i) => Q[u]=Q[v]";
inline constexpr std::string_view kNovel = "n>=1 & Aj (j<i) => ~$factoreq(i,j,n)";
inline constexpr std::string_view kNovelLiteral = "n>=1 & Aj (j<n) => ~$factoreq(i,j,n)";
inline constexpr std::string_view kTwoN = "n>=1 & i<2*n";
inline constexpr std::string_view kNextGap =
    "Ej i<j & $factoreq(i,j,n) & i+g=j & At (i<t & t<j) => ~$factoreq(i,t,n)";
inline constexpr std::string_view kMaxGap =
    "Ei $nextgap(g,i,n) & Ah (h>g) => ~Ei $nextgap(h,i,n)";
inline constexpr std::string_view kUniformRecurrence =
    "Ag,n (n>=1 & $maxgap(g,n)) => g<=7*n";
inline constexpr std::string_view kPer = "p>=1 & p<=n & $factoreq(i,i+p,n-p)";
inline constexpr std::string_view kExp52 = "Ep $per(i,n,p) & 2*n=5*p";
inline constexpr std::string_view kTestLength =
    "Ai,n (n>=1 & $exp52(i,n)) => (n=10 & $factoreq(i,11,10))";
}  // namespace formulas

}  // namespace rote
