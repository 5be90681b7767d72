#include "blockdec/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace blockdec {

using ordered_json = nlohmann::ordered_json;

Graph parse_graph(const std::string& text) {
    std::vector<std::string> isolated;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#')
                break;
            tokens.push_back(tok);
        }
        if (tokens.empty())
            continue;
        if (tokens.size() == 1) {
            isolated.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1])
                fail(ErrorKind::parse,
                     "self-loop at line " + std::to_string(line_no) + ": " + tokens[0]);
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            fail(ErrorKind::parse, "line " + std::to_string(line_no) +
                                       " has more than two labels");
        }
    }
    return Graph::from_edge_list(isolated, edges);
}

DecompositionFile parse_decomposition(const Graph& g, const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        fail(ErrorKind::parse, std::string("bad decomposition json: ") + e.what());
    }
    DecompositionFile out;
    out.k = j.value("k", 0);
    if (!j.contains("nodes") || !j["nodes"].is_array())
        fail(ErrorKind::parse, "decomposition json lacks a nodes array");

    std::map<long long, VertexSet> bags_by_id;
    for (const auto& node : j["nodes"]) {
        if (!node.contains("id") || !node.contains("bag"))
            fail(ErrorKind::parse, "node entry without id or bag");
        long long id = node["id"].get<long long>();
        if (bags_by_id.count(id))
            fail(ErrorKind::parse, "duplicate node id " + std::to_string(id));
        VertexSet bag = 0;
        for (const auto& lab : node["bag"])
            bag |= VertexSet{1} << g.index_of(lab.get<std::string>());
        bags_by_id[id] = bag;
    }
    std::map<long long, int> remap;
    for (const auto& [id, bag] : bags_by_id) {
        remap[id] = out.td.node_count();
        out.td.bags.push_back(bag);
    }
    if (j.contains("edges"))
        for (const auto& edge : j["edges"]) {
            long long u = edge["u"].get<long long>();
            long long v = edge["v"].get<long long>();
            if (!remap.count(u) || !remap.count(v))
                fail(ErrorKind::parse, "edge references unknown node id");
            int a = remap[u], b = remap[v];
            out.td.edges.push_back({std::min(a, b), std::max(a, b)});
        }
    std::sort(out.td.edges.begin(), out.td.edges.end());
    if (j.contains("blocks"))
        for (const auto& blk : j["blocks"]) {
            VertexSet vs = 0;
            for (const auto& lab : blk["vertices"])
                vs |= VertexSet{1} << g.index_of(lab.get<std::string>());
            out.block_bags.push_back(vs);
        }
    return out;
}

namespace {

ordered_json labels_json(const Graph& g, VertexSet s) {
    ordered_json arr = ordered_json::array();
    for (const auto& lab : vset_labels(g, s))
        arr.push_back(lab);
    return arr;
}

std::string label_list(const Graph& g, VertexSet s) {
    std::string out;
    for (const auto& lab : vset_labels(g, s)) {
        if (!out.empty())
            out += ' ';
        out += lab;
    }
    return out;
}

} // namespace

std::string emit_decomposition(const Graph& g, const TreeDecomposition& td, int k,
                               const std::vector<Block>& blocks, OutputFormat format) {
    std::vector<std::pair<int, VertexSet>> block_nodes;  // (node_id, vertices), sorted
    for (int t = 0; t < td.node_count(); ++t)
        for (const Block& b : blocks)
            if (td.bags[t] == b.vertices)
                block_nodes.push_back({t, b.vertices});
    std::sort(block_nodes.begin(), block_nodes.end());

    if (format == OutputFormat::json) {
        ordered_json j;
        j["k"] = k;
        j["nodes"] = ordered_json::array();
        for (int t = 0; t < td.node_count(); ++t)
            j["nodes"].push_back({{"id", t}, {"bag", labels_json(g, td.bags[t])}});
        j["edges"] = ordered_json::array();
        for (auto [u, v] : td.edges)
            j["edges"].push_back({{"u", u},
                                  {"v", v},
                                  {"separator", labels_json(g, td.bags[u] & td.bags[v])}});
        j["blocks"] = ordered_json::array();
        for (auto [t, vs] : block_nodes)
            j["blocks"].push_back({{"node_id", t}, {"vertices", labels_json(g, vs)}});
        return j.dump(2) + "\n";
    }

    if (format == OutputFormat::dot) {
        std::ostringstream os;
        os << "graph decomposition {\n";
        for (int t = 0; t < td.node_count(); ++t) {
            bool is_block = false;
            for (auto [bt, vs] : block_nodes)
                if (bt == t) { is_block = true; break; }
            os << "  n" << t << " [label=\"" << label_list(g, td.bags[t]) << "\"";
            if (is_block)
                os << ", shape=box, penwidth=2";
            os << "];\n";
        }
        for (auto [u, v] : td.edges)
            os << "  n" << u << " -- n" << v << " [label=\""
               << label_list(g, td.bags[u] & td.bags[v]) << "\"];\n";
        os << "}\n";
        return os.str();
    }

    std::ostringstream os;
    os << "k: " << k << "\n";
    for (int t = 0; t < td.node_count(); ++t) {
        os << "node " << t << ": " << label_list(g, td.bags[t]);
        for (auto [bt, vs] : block_nodes)
            if (bt == t)
                os << "  [block]";
        os << "\n";
    }
    for (auto [u, v] : td.edges)
        os << "edge " << u << " " << v << ": " << label_list(g, td.bags[u] & td.bags[v])
           << "\n";
    return os.str();
}

std::string emit_blocks(const Graph& g, int k,
                        const std::vector<std::pair<Block, bool>>& blocks, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["k"] = k;
        j["blocks"] = ordered_json::array();
        for (const auto& [b, separable] : blocks)
            j["blocks"].push_back(
                {{"vertices", labels_json(g, b.vertices)}, {"separable", separable}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << blocks.size() << " " << k << "-block" << (blocks.size() == 1 ? "" : "s") << "\n";
    for (const auto& [b, separable] : blocks)
        os << label_list(g, b.vertices) << (separable ? "  [separable]" : "") << "\n";
    return os.str();
}

std::string emit_profiles(const Graph& g, int k, const std::vector<Profile>& profiles,
                          OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["k"] = k;
        j["count"] = profiles.size();
        j["profiles"] = ordered_json::array();
        for (const Profile& p : profiles) {
            ordered_json elems = ordered_json::array();
            for (int i = 0; i < p.system().size(); ++i) {
                OrientedSeparation s = p.orientation_at(i);
                elems.push_back(
                    {{"small", labels_json(g, s.small)}, {"big", labels_json(g, s.big)}});
            }
            j["profiles"].push_back(elems);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << profiles.size() << " " << k << "-profile" << (profiles.size() == 1 ? "" : "s")
       << "\n";
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        os << "profile " << pi << ":\n";
        const Profile& p = profiles[pi];
        for (int i = 0; i < p.system().size(); ++i) {
            OrientedSeparation s = p.orientation_at(i);
            os << "  (" << label_list(g, s.small) << " | " << label_list(g, s.big) << ")\n";
        }
    }
    return os.str();
}

} // namespace blockdec
