// errors.hpp — one error type for the whole toolkit, tagged with a stable code.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    UnknownVertex,
    Disconnected,
    DisconnectedPrefix,
    EmptyStream,
    IncompleteColoring,
    ParseError,
    BudgetExceeded,
    BadParameters,
    ConfigError,
    Internal,
};

std::string_view errc_name(Errc code);

// Domain failure. `line` is a 1-based input line number when the failure is
// locatable in a text stream, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int line = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line) {}

    Errc code() const { return code_; }
    int line() const { return line_; }

    // One-line machine-parsable form: error: code=<Name> [line=<k>] msg="..."
    std::string formatted() const;

private:
    Errc code_;
    int line_;
};

[[noreturn]] inline void fail(Errc code, std::string message, int line = 0) {
    throw Error(code, std::move(message), line);
}

} // namespace rainbow
