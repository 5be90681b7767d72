// Command-line front end: blocks / profiles / decompose / refine / verify.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blockdec/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"k-blocks, k-profiles and block-revealing tree-decompositions"};
    app.require_subcommand(1);

    blockdec::RunConfig cfg;
    std::string format = "json";

    auto add_common = [&](CLI::App* sub, bool needs_k) {
        sub->add_option("graph", cfg.graph_path, "edge-list file")->required();
        auto* kopt = sub->add_option("-k", cfg.k, "connectivity parameter");
        if (needs_k)
            kopt->required();
        sub->add_option("--format", format, "json|dot|text")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--profile-cap", cfg.profile_cap,
                        "max proper separations of order < k (default 20)");
        sub->add_option("--aut-cap", cfg.aut_cap,
                        "max vertices for automorphism search (default 10)");
    };

    auto* blocks = app.add_subcommand("blocks", "list k-blocks with separability flags");
    add_common(blocks, true);

    auto* profiles = app.add_subcommand("profiles", "enumerate k-profiles");
    add_common(profiles, true);
    profiles->add_flag("--regular-only,!--no-regular-only", cfg.regular_only,
                       "restrict to regular profiles (default on)");

    auto* decompose =
        app.add_subcommand("decompose", "build a decomposition displaying all separable k-blocks");
    add_common(decompose, true);
    decompose->add_flag("--simplify", cfg.simplify, "contract duplicate-separation edges");
    decompose->add_flag("--check-canonical", cfg.check_canonical,
                        "verify the construction commutes with all automorphisms");

    auto* refine = app.add_subcommand("refine", "refine a given tight decomposition");
    add_common(refine, false);
    refine->add_option("decomposition", cfg.decomposition_path, "decomposition json")->required();
    refine->add_flag("--simplify", cfg.simplify, "contract duplicate-separation edges");

    auto* verify = app.add_subcommand("verify", "check a decomposition file");
    add_common(verify, false);
    verify->add_option("decomposition", cfg.decomposition_path, "decomposition json")->required();
    verify->add_option("--refines", cfg.refines_path, "coarser decomposition to compare against");
    verify->add_flag("--check-canonical", cfg.check_canonical,
                     "check invariance under all automorphisms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error:input: " << e.what() << "\n";
        return 2;
    }

    if (blocks->parsed()) cfg.command = blockdec::RunConfig::Command::blocks;
    if (profiles->parsed()) cfg.command = blockdec::RunConfig::Command::profiles;
    if (decompose->parsed()) cfg.command = blockdec::RunConfig::Command::decompose;
    if (refine->parsed()) cfg.command = blockdec::RunConfig::Command::refine;
    if (verify->parsed()) cfg.command = blockdec::RunConfig::Command::verify;
    if (format == "dot") cfg.format = blockdec::OutputFormat::dot;
    if (format == "text") cfg.format = blockdec::OutputFormat::text;

    return blockdec::run(cfg, std::cout, std::cerr);
}
