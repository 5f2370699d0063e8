// Command-line front-end: runs the identity verifications and prints
// expansions of algebra expressions, quantum minors, trace powers and
// Poisson brackets, as text or JSON.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qma/qma.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    int n = 2;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--n", opts.n, "Matrix size n (default 2)");
    cmd->add_option("--format", opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

int emit_element(const CommonOpts& opts, const std::string& kind, const std::string& input,
                 const std::string& text_form, long terms) {
    if (opts.format == "json") {
        ordered_json out{{"version", qma::kVersion}, {"n", opts.n},      {"kind", kind},
                         {"input", input},           {"value", text_form}, {"terms", terms}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text_form << "\n";
    }
    return 0;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("index list", "empty entry in '" + text + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification kernel for the algebra of quantum matrices"};
    app.require_subcommand(1);

    // verify
    qma::RunConfig config;
    std::string verify_format = "text";
    std::vector<std::string> check_names;
    auto* verify = app.add_subcommand("verify", "Run identity checks and report pass/fail");
    verify->add_option("--n", config.n, "Matrix size n (default 2)");
    verify->add_option("--max-power", config.max_power, "Largest trace power (default n+2)");
    verify->add_option("--checks", check_names,
                       "Checks to run (comma separated); any of relations, pbw, laplace, lemma1, ch, "
                       "trace_z, newton, commute, sigma_commute, t_basis, poisson, semiclassical, all")
        ->delimiter(',');
    verify->add_option("--format", verify_format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", config.seed, "Seed for randomized property sampling");
    verify->add_option("--budget-ms", config.budget_ms, "Time budget; later checks are skipped once exceeded");

    // expand
    CommonOpts expand_opts;
    std::string expand_expr;
    std::string expand_mode = "quantum";
    auto* expand = app.add_subcommand("expand", "Reduce an expression to canonical form");
    expand->add_option("expr", expand_expr, "Expression, e.g. \"x[2,2]*x[1,1]\"")->required();
    expand->add_option("--mode", expand_mode, "quantum (x generators) or classical (y generators)")
        ->check(CLI::IsMember({"quantum", "classical"}));
    add_common(expand, expand_opts);

    // sigma
    CommonOpts sigma_opts;
    int sigma_k = 1;
    auto* sigma_cmd = app.add_subcommand("sigma", "Sum of principal k x k quantum minors");
    sigma_cmd->add_option("--k", sigma_k, "Minor size k")->required();
    add_common(sigma_cmd, sigma_opts);

    // trace-power
    CommonOpts trace_opts;
    int trace_k = 1;
    auto* trace_cmd = app.add_subcommand("trace-power", "Trace of the k-th quantum power");
    trace_cmd->add_option("--k", trace_k, "Power k")->required();
    add_common(trace_cmd, trace_opts);

    // minor
    CommonOpts minor_opts;
    std::string rows_text, cols_text;
    auto* minor_cmd = app.add_subcommand("minor", "Quantum minor [K|L]");
    minor_cmd->add_option("--rows", rows_text, "Row set, e.g. 1,2")->required();
    minor_cmd->add_option("--cols", cols_text, "Column set, e.g. 2,3")->required();
    add_common(minor_cmd, minor_opts);

    // newton
    CommonOpts newton_opts;
    int newton_k = 1;
    auto* newton_cmd = app.add_subcommand("newton", "Newton residual for a given k (expected 0)");
    newton_cmd->add_option("--k", newton_k, "Index k")->required();
    add_common(newton_cmd, newton_opts);

    // pbracket
    CommonOpts pb_opts;
    std::string pb_f, pb_g;
    auto* pb_cmd = app.add_subcommand("pbracket", "Poisson bracket of two classical polynomials");
    pb_cmd->add_option("f", pb_f, "First polynomial in y[i,j]")->required();
    pb_cmd->add_option("g", pb_g, "Second polynomial in y[i,j]")->required();
    add_common(pb_cmd, pb_opts);

    // t-basis
    CommonOpts tb_opts;
    int tb_k = 0;
    auto* tb_cmd = app.add_subcommand("t-basis", "Express t_k as a polynomial in t_1..t_n (k > n)");
    tb_cmd->add_option("--k", tb_k, "Power k, must exceed n")->required();
    add_common(tb_cmd, tb_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (config.n < 1 || config.effective_max_power() < 1) {
                std::cerr << "error: --n and --max-power must be >= 1\n";
                return 2;
            }
            if (!check_names.empty()) config.checks = check_names;
            config.format = (verify_format == "json") ? qma::RunConfig::Format::json : qma::RunConfig::Format::text;
            std::vector<qma::VerificationReport> reports;
            try {
                reports = qma::run_verify(config);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            if (config.format == qma::RunConfig::Format::json) {
                std::cout << qma::reports_to_json(config, reports).dump(2) << "\n";
            } else {
                qma::render_text(reports, std::cout);
            }
            return qma::all_passed(reports) ? 0 : 1;
        }

        if (expand->parsed()) {
            if (expand_mode == "classical") {
                qma::CPoly p = qma::eval_classical_expr(expand_expr, expand_opts.n);
                return emit_element(expand_opts, "classical_polynomial", expand_expr, p.to_string(),
                                    static_cast<long>(p.term_count()));
            }
            qma::AlgebraElement e = qma::eval_quantum_expr(expand_expr, expand_opts.n);
            return emit_element(expand_opts, "algebra_element", expand_expr, e.to_string(),
                                static_cast<long>(e.term_count()));
        }

        if (sigma_cmd->parsed()) {
            qma::AlgebraElement e = qma::sigma(sigma_k, sigma_opts.n);
            return emit_element(sigma_opts, "sigma", "sigma_" + std::to_string(sigma_k), e.to_string(),
                                static_cast<long>(e.term_count()));
        }

        if (trace_cmd->parsed()) {
            const qma::AlgebraElement& e = qma::trace_power(trace_opts.n, trace_k);
            return emit_element(trace_opts, "trace_power", "t_" + std::to_string(trace_k), e.to_string(),
                                static_cast<long>(e.term_count()));
        }

        if (minor_cmd->parsed()) {
            qma::IndexSet rows(parse_index_list(rows_text));
            qma::IndexSet cols(parse_index_list(cols_text));
            qma::AlgebraElement e = qma::qminor(rows, cols, minor_opts.n);
            return emit_element(minor_opts, "minor", "[" + rows.to_string() + "|" + cols.to_string() + "]",
                                e.to_string(), static_cast<long>(e.term_count()));
        }

        if (newton_cmd->parsed()) {
            qma::AlgebraElement e = qma::newton_residual(newton_opts.n, newton_k);
            return emit_element(newton_opts, "newton_residual", "k=" + std::to_string(newton_k), e.to_string(),
                                static_cast<long>(e.term_count()));
        }

        if (pb_cmd->parsed()) {
            qma::CPoly f = qma::eval_classical_expr(pb_f, pb_opts.n);
            qma::CPoly g = qma::eval_classical_expr(pb_g, pb_opts.n);
            qma::CPoly out = qma::pbracket(f, g);
            return emit_element(pb_opts, "pbracket", "{" + pb_f + ", " + pb_g + "}", out.to_string(),
                                static_cast<long>(out.term_count()));
        }

        if (tb_cmd->parsed()) {
            qma::MPoly poly = qma::t_in_t_basis(tb_opts.n, tb_k);
            return emit_element(tb_opts, "t_basis", "t_" + std::to_string(tb_k), qma::t_basis_to_string(poly),
                                static_cast<long>(poly.term_count()));
        }
    } catch (const qma::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
