#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toricode/classify.hpp"
#include "toricode/corpus.hpp"
#include "toricode/graphs.hpp"
#include "toricode/groebner.hpp"
#include "toricode/report.hpp"
#include "toricode/toric.hpp"
#include "toricode/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

toricode::Budget make_budget(std::uint64_t budget_flag) {
    toricode::Budget b;
    if (const char* env = std::getenv("TORIC_CODES_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            b.s_pairs = v;
            b.monomials = v;
        }
    }
    if (budget_flag > 0) {
        b.s_pairs = budget_flag;
        b.monomials = budget_flag;
    }
    return b;
}

void emit_basis(const toricode::Code& code, const toricode::BasisReport& rep, const toricode::MonomialOrder& order,
                bool json) {
    if (json)
        std::cout << toricode::basis_report_json(code, rep, order).dump(2) << "\n";
    else
        toricode::print_basis_report(std::cout, code, rep, order);
}

int run_checks(const std::vector<toricode::CheckResult>& results) {
    bool all_pass = true;
    for (const toricode::CheckResult& r : results) {
        const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::cout << tag << "  " << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals, Groebner bases and Graver bases of combinatorial neural codes"};
    app.require_subcommand(1);

    std::string code_file, order_spec = "grevlex", corpus_name, user_code_file;
    int degbound = -1, orders = 8;
    std::uint64_t budget_flag = 0, seed = 0;
    bool json = false;

    auto add_common = [&](CLI::App* cmd, bool with_order) {
        cmd->add_option("code", code_file, "code file: one 0/1 codeword per line")->required();
        if (with_order) cmd->add_option("order", order_spec, "order spec: lex | grevlex | weight:[q,...]:grevlex");
        cmd->add_option("--degbound", degbound, "fiber scan degree bound (default: 2*maxweight+2)");
        cmd->add_flag("--json", json, "machine-readable output");
        cmd->add_option("--budget", budget_flag, "S-pair and monomial budget override");
        cmd->add_option("--seed", seed, "seed for the random order family");
        return cmd;
    };

    CLI::App* cmd_gb = add_common(app.add_subcommand("gb", "reduced Groebner basis under an order"), true);
    CLI::App* cmd_ugb = app.add_subcommand("ugb", "universal Groebner basis (exact or sandwich)");
    add_common(cmd_ugb, false);
    cmd_ugb->add_option("--orders", orders, "number of random weight orders in the family");
    CLI::App* cmd_graver = add_common(app.add_subcommand("graver", "Graver basis up to a degree bound"), false);
    CLI::App* cmd_ind = add_common(app.add_subcommand("indispensable", "indispensable binomials"), false);
    CLI::App* cmd_classify = add_common(app.add_subcommand("classify", "piercing classification evidence"), false);

    CLI::App* cmd_verify = app.add_subcommand("verify-paper", "run a named verification suite");
    cmd_verify->add_option("suite", corpus_name,
                           "one of: example-gb, internal:<n>, external-trees, depth1-patterns, lawrence")
        ->required();
    cmd_verify->add_option("--code", user_code_file, "run depth1-patterns against this code file");

    CLI11_PARSE(app, argc, argv);

    try {
        toricode::Budget budget = make_budget(budget_flag);

        if (cmd_gb->parsed()) {
            toricode::Code code = toricode::parse_code_file(code_file);
            toricode::MonomialOrder order =
                toricode::parse_order_spec(order_spec, static_cast<std::uint32_t>(code.zone_count()));
            toricode::GeneratorReport gens =
                toricode::toric_generators(code, toricode::GenMethod::bounded, degbound, budget);
            toricode::GroebnerBasis gb = toricode::reduce_basis(code, toricode::buchberger(code, gens.generators, order, budget));
            toricode::BasisReport rep{"reduced-groebner", order.spec_string(), gens.tdeg_bound, gens.complete,
                                      gb.elements};
            emit_basis(code, rep, order, json);
            return exit_ok;
        }
        if (cmd_ugb->parsed()) {
            toricode::Code code = toricode::parse_code_file(code_file);
            toricode::UgbResult res = toricode::universal_gb(code, orders, degbound, seed, budget);
            if (json)
                std::cout << toricode::ugb_json(code, res).dump(2) << "\n";
            else
                toricode::print_ugb(std::cout, code, res);
            return exit_ok;
        }
        if (cmd_graver->parsed()) {
            toricode::Code code = toricode::parse_code_file(code_file);
            toricode::GraverReport res = toricode::graver_basis(code, degbound, budget);
            toricode::BasisReport rep{res.exact ? "graver-exact" : "graver-up-to-degree", "grevlex", res.tdeg_bound,
                                      res.exact, res.elements};
            emit_basis(code, rep, toricode::MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count())),
                       json);
            return exit_ok;
        }
        if (cmd_ind->parsed()) {
            toricode::Code code = toricode::parse_code_file(code_file);
            auto elements = toricode::indispensable_binomials(code, degbound, budget);
            toricode::BasisReport rep{"indispensable", "grevlex",
                                      degbound < 0 ? toricode::default_degree_bound(code) : degbound, true, elements};
            emit_basis(code, rep, toricode::MonomialOrder::grevlex(static_cast<std::uint32_t>(code.zone_count())),
                       json);
            return exit_ok;
        }
        if (cmd_classify->parsed()) {
            toricode::Code code = toricode::parse_code_file(code_file);
            toricode::ClassifyReport rep = toricode::classify(code, degbound, budget);
            if (json)
                std::cout << toricode::classify_json(code, rep).dump(2) << "\n";
            else
                toricode::print_classify(std::cout, code, rep);
            return exit_ok;
        }
        if (cmd_verify->parsed()) {
            std::vector<toricode::CheckResult> results;
            if (corpus_name == "example-gb") {
                results = toricode::verify_example_gb();
            } else if (corpus_name.rfind("internal:", 0) == 0) {
                int n = std::stoi(corpus_name.substr(9));
                results = toricode::verify_internal(n);
            } else if (corpus_name == "external-trees") {
                results = toricode::verify_external_trees();
            } else if (corpus_name == "depth1-patterns") {
                std::optional<toricode::Code> user;
                if (!user_code_file.empty()) user = toricode::parse_code_file(user_code_file);
                results = toricode::verify_depth1_patterns(user);
            } else if (corpus_name == "lawrence") {
                results = toricode::verify_lawrence(6);
            } else {
                std::cerr << "unknown suite '" << corpus_name << "'\n";
                return exit_usage;
            }
            return run_checks(results);
        }
    } catch (const toricode::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return exit_resource;
    } catch (const toricode::format_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const toricode::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const toricode::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}
