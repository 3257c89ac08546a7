#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "psi3ut/cli.hpp"

namespace {

using psi3ut::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--mod2exp", cfg.mod2exp, "Modulus exponent N; arithmetic is mod 2^N");
    sub->add_option("--out,--report", cfg.out_path, "Write the report to this path");
    sub->add_option("--format", cfg.format, "Report format: json or csv");
}

void add_seed_options(CLI::App* sub, RunConfig& cfg, std::uint64_t& seed_count,
                      bool& have_count) {
    auto* seed = sub->add_option_function<std::vector<std::uint64_t>>(
        "--seed", [&cfg](const std::vector<std::uint64_t>& v) { cfg.seeds = v; },
        "Explicit seed (repeatable)");
    auto* count = sub->add_option("--seeds", seed_count, "Use seeds 0..K-1");
    count->each([&have_count](const std::string&) { have_count = true; });
    seed->excludes(count);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2-adic computation and verification of the upper-triangular matrix "
                 "of the Adams operation psi^3"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::uint64_t seed_count = 0;
    bool have_count = false;

    auto* valuations = app.add_subcommand("valuations", "Valuation identity reports");
    valuations->add_option("--max", cfg.max, "Largest l to report");
    add_common(valuations, cfg);

    auto* psi3m = app.add_subcommand("psi3-matrix", "psi^3 on the degree-4k g-basis");
    psi3m->add_option("--degree", cfg.degree, "Degree index k");
    add_common(psi3m, cfg);

    auto* basis = app.add_subcommand("basis", "A g-basis element as a monomial map");
    basis->add_option("--m", cfg.basis_m, "Degree index m (element of degree 4m)");
    basis->add_option("--l", cfg.basis_l, "Source index l");
    add_common(basis, cfg);

    auto* conj = app.add_subcommand("conjugate", "Solve U B = C U for a hypothesis-class C");
    conj->add_option("--size", cfg.size, "Matrix truncation size");
    conj->add_option("--c-entries", cfg.c_entries_path,
                     "JSON file with the entries of C above the superdiagonal");
    add_seed_options(conj, cfg, seed_count, have_count);
    add_common(conj, cfg);

    auto* extract = app.add_subcommand("extract-a", "Extract the matrix of 1 ^ psi^3");
    extract->add_option("--n", cfg.n, "Truncation size");
    add_seed_options(extract, cfg, seed_count, have_count);
    add_common(extract, cfg);

    auto* e2e = app.add_subcommand("end-to-end", "Extract, normalize, conjugate, verify");
    e2e->add_option("--n", cfg.n, "Truncation size");
    add_seed_options(e2e, cfg, seed_count, have_count);
    add_common(e2e, cfg);

    auto* xn = app.add_subcommand("xn", "The product matrices X_n and their entry formulas");
    xn->add_option("--n", cfg.n, "Number of factors");
    xn->add_option("--size", cfg.size, "Block size (default 2n)");
    add_common(xn, cfg);

    auto* verify = app.add_subcommand("verify-paper", "Run the full verification table");
    verify->add_option("--n", cfg.n, "Pipeline truncation size");
    add_seed_options(verify, cfg, seed_count, have_count);
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad flags
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (have_count) {
        if (seed_count == 0) {
            std::cerr << "error: --seeds must be positive\n";
            return 2;
        }
        cfg.seeds.resize(seed_count);
        for (std::uint64_t i = 0; i < seed_count; ++i) cfg.seeds[i] = i;
    }

    try {
        psi3ut::cli::RunResult r = psi3ut::cli::run(cfg);
        if (!r.table.empty())
            std::cout << r.table;
        else if (cfg.out_path.empty())
            std::cout << r.artifact;
        return r.exit_code;
    } catch (const psi3ut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return psi3ut::cli::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
