#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "skoszul/reports.hpp"

namespace {

using skoszul::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--ring", cfg.ring, "coefficient ring: Q, F<p>, or Grassmann(<field>,<m>)");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", cfg.out, "write the report to this path instead of stdout");
}

int emit(const std::string& text, const RunConfig& cfg, bool passed)
{
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return 2;
        }
        out << text;
    }
    return passed ? 0 : 1;
}

template <typename Report>
int emit_report(const Report& rep, const RunConfig& cfg)
{
    return emit(cfg.format == "json" ? to_json(rep) : to_text(rep), cfg, rep.passed);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact super Koszul complex homology and Berezinian verification"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* koszul = app.add_subcommand("koszul-verify",
                                      "strand-by-strand homology of the super Koszul complex");
    koszul->add_option("--p", cfg.p, "even rank");
    koszul->add_option("--q", cfg.q, "odd rank");
    koszul->add_option("--window", cfg.window, "sweep strands with m1+m2 <= window");
    add_common(koszul, cfg);

    auto* dual = app.add_subcommand("dual-verify",
                                    "homology of the dual complex and its generator");
    dual->add_option("--p", cfg.p, "even rank");
    dual->add_option("--q", cfg.q, "odd rank");
    dual->add_option("--window", cfg.window,
                     "sweep m1 in [-p-w, w], m2 in [q-w, q]")
        ->default_val(2);
    add_common(dual, cfg);

    auto* classical = app.add_subcommand("classical", "homology of the classical complex");
    classical->add_option("--N", cfg.n, "rank");
    classical->add_option("--window", cfg.window, "sweep strands with m1 <= window");
    add_common(classical, cfg);

    auto* berv = app.add_subcommand("ber-verify",
                                    "induced action on the dual homology generator vs the "
                                    "inverse Berezinian");
    berv->add_option("--p", cfg.p, "even rank");
    berv->add_option("--q", cfg.q, "odd rank");
    berv->add_option("--trials", cfg.trials, "number of random supermatrices");
    berv->add_option("--matrix", cfg.matrix_file, "check one supermatrix literal (JSON file)");
    add_common(berv, cfg);

    auto* charp = app.add_subcommand("charp-demo",
                                     "cycle/boundary analysis in prime characteristic");
    charp->add_option("--p", cfg.p, "even rank");
    charp->add_option("--q", cfg.q, "odd rank");
    add_common(charp, cfg);

    // ber-verify defaults to a Grassmann ring, charp-demo to F3
    int parse_argc = argc;
    CLI11_PARSE(app, parse_argc, argv);

    try {
        if (koszul->parsed()) {
            cfg.command = "koszul-verify";
            return emit_report(run_koszul_verify(cfg), cfg);
        }
        if (dual->parsed()) {
            cfg.command = "dual-verify";
            return emit_report(run_dual_verify(cfg), cfg);
        }
        if (classical->parsed()) {
            cfg.command = "classical";
            return emit_report(run_classical(cfg), cfg);
        }
        if (berv->parsed()) {
            cfg.command = "ber-verify";
            if (berv->count("--ring") == 0)
                cfg.ring = "Grassmann(Q,4)";
            return emit_report(run_ber_verify(cfg), cfg);
        }
        if (charp->parsed()) {
            cfg.command = "charp-demo";
            if (charp->count("--ring") == 0)
                cfg.ring = "F3";
            return emit_report(run_charp_demo(cfg), cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
