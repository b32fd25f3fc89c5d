#include "rainbow/errors.hpp"

namespace rainbow {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::Disconnected: return "Disconnected";
        case Errc::DisconnectedPrefix: return "DisconnectedPrefix";
        case Errc::EmptyStream: return "EmptyStream";
        case Errc::IncompleteColoring: return "IncompleteColoring";
        case Errc::ParseError: return "ParseError";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::BadParameters: return "BadParameters";
        case Errc::ConfigError: return "ConfigError";
        case Errc::Internal: return "Internal";
    }
    return "Internal";
}

std::string Error::formatted() const {
    std::string out = "error: code=";
    out += errc_name(code_);
    if (line_ > 0) out += " line=" + std::to_string(line_);
    out += " msg=\"";
    out += what();
    out += "\"";
    return out;
}

} // namespace rainbow
