#pragma once

#include <stdexcept>
#include <string>

namespace fsp {

// Every failure carries a short kind name (DivisionByZero, ShapeError, ...)
// so callers and the CLI can dispatch on it without a class hierarchy.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace fsp
