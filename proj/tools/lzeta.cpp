// lzeta: expand, tabulate, verify and certify Lz(a,b) identities.
//
// Exit codes: 0 success, 1 usage or parse error, 2 not expressible,
// 3 verification failure.

#include <lzeta/lzeta.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace lzeta;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotExpressible = 2;
constexpr int kExitVerifyFailed = 3;

constexpr int kSurveyLimit = 40;
constexpr int kDigitsLimit = 60;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int max_weight = 24;
    bool reduce = false;

    int a = 0, b = 0, n = 0;
    int digits = 30;
    std::string method = "both";
    std::string monomial;
    std::string mode = "optimistic";
    std::optional<int> weight;
    int from = 3, to = 3;
    int min_part = 1;
    std::optional<int> parts;
    std::string parity = "any";
};

int default_max_weight() {
    if (const char* env = std::getenv("ZL_MAX_WEIGHT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("ZL_MAX_WEIGHT must be an integer, got '" + std::string(env) + "'");
        }
    }
    return 24;
}

void check_weight(int w, const Options& o) {
    if (w > o.max_weight)
        throw UsageError("weight " + std::to_string(w) + " exceeds the cap " + std::to_string(o.max_weight) +
                         " (raise it with --max-weight)");
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(const std::string& command, Json inputs, Json result, const Timer& t) {
    Envelope e{kSchemaVersion, command, std::move(inputs), std::move(result), t.elapsed_ms()};
    std::cout << Json(e).dump(2) << "\n";
}

int run_expand(const Options& o, const Timer& t) {
    if (o.a < 1 || o.b < 1) throw UsageError("a and b must be >= 1");
    check_weight(o.a + o.b, o);
    ExpansionResult r{o.a, o.b, expand_lz(o.a, o.b), std::nullopt};
    if (o.reduce) r.reduced = reduced_lz(o.a, o.b);
    if (o.format == "json") {
        emit_json("expand", Json{{"a", o.a}, {"b", o.b}, {"reduce", o.reduce}}, r, t);
    } else if (o.format == "latex") {
        std::cout << lz_line_latex({o.a, o.b}, r.reduced ? to_latex(*r.reduced) : to_latex(r.expansion)) << "\n";
    } else {
        std::cout << (r.reduced ? to_text(*r.reduced) : to_text(r.expansion)) << "\n";
    }
    return kExitOk;
}

int run_table(const Options& o, const Timer& t) {
    if (o.n < 2) throw UsageError("N must be >= 2");
    check_weight(o.n, o);
    std::vector<ExpansionResult> rows;
    const auto all = expand_weight(o.n, true);
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        ExpansionResult r{it->first.first, it->first.second, it->second, std::nullopt};
        if (o.reduce) r.reduced = PiReducedCombination(o.n), *r.reduced += reduce_even(it->second);
        rows.push_back(std::move(r));
    }
    if (o.format == "json") {
        emit_json("table", Json{{"n", o.n}, {"reduce", o.reduce}}, rows, t);
        return kExitOk;
    }
    for (const auto& r : rows) {
        if (o.format == "latex")
            std::cout << lz_line_latex({r.a, r.b}, r.reduced ? to_latex(*r.reduced) : to_latex(r.expansion)) << "\n";
        else
            std::cout << lz_line_text({r.a, r.b}, r.reduced ? to_text(*r.reduced) : to_text(r.expansion)) << "\n";
    }
    return kExitOk;
}

int run_verify(const Options& o, const Timer& t) {
    if (o.a < 1 || o.b < 1) throw UsageError("a and b must be >= 1");
    check_weight(o.a + o.b, o);
    if (o.digits < 6 || o.digits > kDigitsLimit)
        throw UsageError("--digits must lie in [6, " + std::to_string(kDigitsLimit) + "]");
    const auto method = parse_verify_method(o.method);
    const auto report = verify_expansion(o.a, o.b, Precision{o.digits, guard_digits_for(10000)}, method);
    if (o.format == "json")
        emit_json("verify", Json{{"a", o.a}, {"b", o.b}, {"digits", o.digits}, {"method", o.method}}, report, t);
    else if (o.format == "latex")
        std::cout << lz_line_latex({o.a, o.b}, to_latex(reduced_lz(o.a, o.b))) << "\n% "
                  << (report.passed ? "verified" : "FAILED: " + report.message) << "\n";
    else
        std::cout << to_text(report);
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int run_express(const Options& o, const Timer& t) {
    ZetaMonomial target;
    try {
        target = ZetaMonomial::parse(o.monomial);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    check_weight(o.weight.value_or(target.weight()), o);
    const auto result = express(target, parse_mode(o.mode), o.weight);
    if (o.format == "json") {
        Json inputs{{"monomial", o.monomial}, {"mode", o.mode}};
        inputs["weight"] = o.weight ? Json(*o.weight) : Json(nullptr);
        emit_json("express", inputs, result, t);
    } else if (o.format == "latex") {
        std::cout << to_latex(result);
    } else {
        std::cout << to_text(result);
    }
    return result.status == ExpressStatus::expressible ? kExitOk : kExitNotExpressible;
}

int run_survey(const Options& o, const Timer& t) {
    if (o.from < 3 || o.to < o.from || o.to > kSurveyLimit)
        throw UsageError("survey needs 3 <= --from <= --to <= " + std::to_string(kSurveyLimit));
    const auto report = survey(o.from, o.to, parse_mode(o.mode), true);
    if (o.format == "json")
        emit_json("survey", Json{{"from", o.from}, {"to", o.to}, {"mode", o.mode}}, report, t);
    else if (o.format == "latex")
        std::cout << to_latex(report);
    else
        std::cout << to_text(report);
    return kExitOk;
}

int run_partitions(const Options& o, const Timer& t) {
    if (o.n < 1) throw UsageError("N must be >= 1");
    if (o.min_part < 1) throw UsageError("--min-part must be >= 1");
    PartitionListing l{o.n, PartitionFilter{o.min_part, o.parts, parse_parity(o.parity)}, {}};
    l.partitions = enumerate_partitions(o.n, l.filter);
    if (o.format == "json") {
        Json inputs{{"n", o.n}, {"min_part", o.min_part}, {"parity", o.parity}};
        inputs["parts"] = o.parts ? Json(*o.parts) : Json(nullptr);
        emit_json("partitions", inputs, l, t);
    } else if (o.format == "latex") {
        std::cout << to_latex(l);
    } else {
        std::cout << to_text(l);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Lz(a,b) expansions, verification and expressibility certificates"};
    app.require_subcommand(1);

    try {
        o.max_weight = default_max_weight();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--max-weight", o.max_weight, "Largest admissible weight a+b");
    };

    auto* expand_cmd = app.add_subcommand("expand", "Expand Lz(a,b) into zeta monomials");
    expand_cmd->add_option("a", o.a)->required();
    expand_cmd->add_option("b", o.b)->required();
    expand_cmd->add_flag("--reduce", o.reduce, "Fold even zeta values into powers of pi");
    add_common(expand_cmd);

    auto* table_cmd = app.add_subcommand("table", "All Lz(a,b) with a+b = N and a >= b");
    table_cmd->add_option("N", o.n)->required();
    table_cmd->add_flag("--reduce", o.reduce, "Fold even zeta values into powers of pi");
    add_common(table_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check an expansion numerically");
    verify_cmd->add_option("a", o.a)->required();
    verify_cmd->add_option("b", o.b)->required();
    verify_cmd->add_option("--digits", o.digits, "Decimal digits");
    verify_cmd->add_option("--method", o.method)->check(CLI::IsMember({"series", "quadrature", "both"}));
    add_common(verify_cmd);

    auto* express_cmd = app.add_subcommand("express", "Certify a product of odd zeta values");
    express_cmd->add_option("monomial", o.monomial, "e.g. z3^2*z5")->required();
    express_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"optimistic", "strict"}));
    express_cmd->add_option("--weight", o.weight, "Search at this weight (multiplies the target by a pi power)");
    add_common(express_cmd);

    auto* survey_cmd = app.add_subcommand("survey", "Equations, unknowns and ranks per weight");
    survey_cmd->add_option("--from", o.from);
    survey_cmd->add_option("--to", o.to);
    survey_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"optimistic", "strict"}));
    add_common(survey_cmd);

    auto* partitions_cmd = app.add_subcommand("partitions", "Enumerate restricted partitions of N");
    partitions_cmd->add_option("N", o.n)->required();
    partitions_cmd->add_option("--min-part", o.min_part);
    partitions_cmd->add_option("--parts", o.parts, "Exact number of parts");
    partitions_cmd->add_option("--parity", o.parity)->check(CLI::IsMember({"any", "odd", "even"}));
    add_common(partitions_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Timer timer;
    try {
        if (*expand_cmd) return run_expand(o, timer);
        if (*table_cmd) return run_table(o, timer);
        if (*verify_cmd) return run_verify(o, timer);
        if (*express_cmd) return run_express(o, timer);
        if (*survey_cmd) return run_survey(o, timer);
        if (*partitions_cmd) return run_partitions(o, timer);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
