#ifndef BLOCKDEC_ERROR_HPP
#define BLOCKDEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace blockdec {

// Error kinds map 1:1 onto the CLI's "error:<kind>:" prefixes; see cli.cpp
// for the exit-code mapping.
enum class ErrorKind {
    parse,                  // malformed input text or json
    input,                  // well-formed input violating a contract
    precondition,           // API precondition violated
    not_an_edge,
    degenerate_separation,  // (V,V) where a proper star element is required
    block_collision,        // two listed blocks inside one bag
    no_gluing_leaf,         // gluing-leaf lookup not unique
    bound_exceeded,         // enumeration cap hit
    incomplete_system,      // distinguishing-system verification failed
    internal,               // verified postcondition failed: a bug
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace blockdec

#endif // BLOCKDEC_ERROR_HPP
