#include "blockdec/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "blockdec/initial_decomp.hpp"
#include "blockdec/refine.hpp"

namespace blockdec {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::input, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::bound_exceeded:
            return 3;
        case ErrorKind::incomplete_system:
        case ErrorKind::internal:
            return 1;
        default:
            return 2;
    }
}

std::vector<Block> separable_blocks(const Graph& g, int k) {
    std::vector<Block> out;
    for (const Block& b : find_k_blocks(g, k))
        if (is_separable_block(g, b))
            out.push_back(b);
    return out;
}

TreeDecomposition decompose_pipeline(const Graph& g, int k, long profile_cap, bool simplify) {
    TreeDecomposition initial = initial_decomposition(g, k, profile_cap);
    RefineOptions opt;
    opt.simplify = simplify;
    return refine_td(g, initial, separable_blocks(g, k), opt);
}

int cmd_blocks(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    std::vector<std::pair<Block, bool>> rows;
    for (const Block& b : find_k_blocks(g, cfg.k))
        rows.push_back({b, is_separable_block(g, b)});
    out << emit_blocks(g, cfg.k, rows, cfg.format);
    return 0;
}

int cmd_profiles(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    std::vector<Profile> profiles =
        enumerate_profiles(g, cfg.k, cfg.regular_only, cfg.profile_cap);
    out << emit_profiles(g, cfg.k, profiles, cfg.format);
    return 0;
}

int cmd_decompose(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
    TreeDecomposition td = decompose_pipeline(g, cfg.k, cfg.profile_cap, cfg.simplify);
    if (cfg.check_canonical) {
        bool canonical = check_canonical(
            g,
            [&](const Graph& gg) {
                return decompose_pipeline(gg, cfg.k, cfg.profile_cap, cfg.simplify);
            },
            cfg.aut_cap);
        if (!canonical) {
            err << "error:internal: decomposition not canonical\n";
            return 1;
        }
    }
    out << emit_decomposition(g, td, cfg.k, separable_blocks(g, cfg.k), cfg.format);
    return 0;
}

int cmd_refine(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    DecompositionFile file = parse_decomposition(g, read_file(cfg.decomposition_path));
    int k = cfg.k > 0 ? cfg.k : file.k;
    if (k < 1)
        fail(ErrorKind::input, "no k given and none in the decomposition file");
    RefineOptions opt;
    opt.simplify = cfg.simplify;
    std::vector<Block> blocks = separable_blocks(g, k);
    TreeDecomposition refined = refine_td(g, file.td, blocks, opt);
    out << emit_decomposition(g, refined, k, blocks, cfg.format);
    return 0;
}

int cmd_verify(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    DecompositionFile file = parse_decomposition(g, read_file(cfg.decomposition_path));
    int k = cfg.k > 0 ? cfg.k : file.k;
    nlohmann::ordered_json j;
    bool all_ok = true;

    ValidationReport report = validate(g, file.td);
    j["valid"] = report.ok();
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : report.violations)
        j["violations"].push_back(v.code + " " + v.detail);
    all_ok = all_ok && report.ok();

    if (report.ok()) {
        bool tight = is_tight_td(g, file.td);
        j["tight"] = tight;
        all_ok = all_ok && tight;
        int adh = adhesion(g, file.td);
        j["adhesion"] = adh;
        if (k >= 1) {
            j["adhesion_below_k"] = adh < k;
            all_ok = all_ok && adh < k;

            std::vector<Profile> profiles = enumerate_profiles(g, k, true, cfg.profile_cap);
            bool distinguishes_all = true;
            for (std::size_t i = 0; i < profiles.size() && distinguishes_all; ++i)
                for (std::size_t l = i + 1; l < profiles.size() && distinguishes_all; ++l)
                    distinguishes_all = td_distinguishes(g, file.td, profiles[i], profiles[l], true);
            j["distinguishes_all_regular_profiles"] = distinguishes_all;
            all_ok = all_ok && distinguishes_all;

            bool blocks_ok = true;
            nlohmann::ordered_json missing = nlohmann::ordered_json::array();
            for (const Block& b : separable_blocks(g, k)) {
                int count = 0;
                for (VertexSet bag : file.td.bags)
                    if (bag == b.vertices)
                        ++count;
                if (count != 1) {
                    blocks_ok = false;
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& lab : vset_labels(g, b.vertices))
                        arr.push_back(lab);
                    missing.push_back(arr);
                }
            }
            j["separable_blocks_are_bags"] = blocks_ok;
            j["blocks_not_single_bag"] = missing;
            all_ok = all_ok && blocks_ok;
        }
        if (!cfg.refines_path.empty()) {
            DecompositionFile coarse = parse_decomposition(g, read_file(cfg.refines_path));
            bool r = refines(g, file.td, coarse.td);
            j["refines"] = r;
            all_ok = all_ok && r;
        }
        if (cfg.check_canonical) {
            bool invariant = true;
            for (const auto& perm : automorphisms(g, cfg.aut_cap))
                if (!tree_isomorphic_with_bags(permute_bags(perm, file.td), file.td)) {
                    invariant = false;
                    break;
                }
            j["automorphism_invariant"] = invariant;
            all_ok = all_ok && invariant;
        }
    }
    j["ok"] = all_ok;
    if (cfg.format == OutputFormat::json) {
        out << j.dump(2) << "\n";
    } else {
        for (auto& [key, val] : j.items())
            out << key << ": " << val.dump() << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command != RunConfig::Command::refine && cfg.command != RunConfig::Command::verify
            && cfg.k < 1)
            fail(ErrorKind::input, "k must be at least 1");
        if (cfg.profile_cap < 1 || cfg.aut_cap < 1)
            fail(ErrorKind::input, "caps must be at least 1");
        Graph g = parse_graph(read_file(cfg.graph_path));
        switch (cfg.command) {
            case RunConfig::Command::blocks: return cmd_blocks(cfg, g, out);
            case RunConfig::Command::profiles: return cmd_profiles(cfg, g, out);
            case RunConfig::Command::decompose: return cmd_decompose(cfg, g, out, err);
            case RunConfig::Command::refine: return cmd_refine(cfg, g, out);
            case RunConfig::Command::verify: return cmd_verify(cfg, g, out);
        }
        return 2;
    } catch (const Error& e) {
        err << "error:" << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error:internal: " << e.what() << "\n";
        return 1;
    }
}

} // namespace blockdec
