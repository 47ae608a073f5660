#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarcog {

/// Four vertices inducing the path a-b-c-d (edges ab, bc, cd only).
struct P4Witness {
    std::array<int, 4> path{};

    friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class NotCograph : public std::runtime_error {
public:
    explicit NotCograph(const P4Witness& w)
        : std::runtime_error("graph is not a cograph; induced P4 on " + std::to_string(w.path[0]) + "-" +
                             std::to_string(w.path[1]) + "-" + std::to_string(w.path[2]) + "-" +
                             std::to_string(w.path[3])),
          witness_(w) {}

    const P4Witness& witness() const noexcept { return witness_; }

private:
    P4Witness witness_;
};

// Raised when a partition is requested for a graph that has none; callers
// wanting a no-certificate should use find_certificate instead.
class NotPolar : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace polarcog
