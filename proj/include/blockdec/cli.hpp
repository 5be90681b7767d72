#ifndef BLOCKDEC_CLI_HPP
#define BLOCKDEC_CLI_HPP

#include <iosfwd>
#include <string>

#include "blockdec/io.hpp"

namespace blockdec {

struct RunConfig {
    enum class Command { blocks, profiles, decompose, refine, verify };

    Command command = Command::blocks;
    int k = 0;                       // refine/verify may take k from the file
    std::string graph_path;
    std::string decomposition_path;  // refine/verify input
    std::string refines_path;        // verify --refines
    OutputFormat format = OutputFormat::json;
    bool regular_only = true;
    bool simplify = false;
    long profile_cap = 20;           // proper separations of order < k
    int aut_cap = 10;
    bool check_canonical = false;
};

// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 bound exceeded. Errors go to `err` as "error:<kind>: message".
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace blockdec

#endif // BLOCKDEC_CLI_HPP
