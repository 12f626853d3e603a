#pragma once

#include <stdexcept>
#include <string>

namespace cellplus {

// Structured failure; `kind` drives CLI exit codes and report fields.
class Error : public std::runtime_error {
public:
    enum class Kind {
        Parse,
        RingMismatch,
        Invariant,
        Domain,
        Tier,
        Solve,
        Certificate,
        Input,
    };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace cellplus
