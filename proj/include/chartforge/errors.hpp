#pragma once

#include <stdexcept>
#include <string>

namespace chartforge {

// Error categories map onto CLI exit codes: config -> 2, transport -> 3,
// integrity -> 4, everything else -> 1.
enum class Errc {
    io,
    config,
    transport,
    protocol,
    integrity,
    capacity,
    layout,
    not_found,
    ambiguity,
    alignment,
    oracle,
    binding,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

    int exit_code() const {
        switch (code_) {
        case Errc::config: return 2;
        case Errc::transport: return 3;
        case Errc::integrity: return 4;
        default: return 1;
        }
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace chartforge
