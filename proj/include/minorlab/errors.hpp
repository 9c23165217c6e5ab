#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorlab {

// Malformed graph6 input. `offset` is the byte position of the defect.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A parameter exceeds the size range this library is engineered for
// (e.g. enumeration beyond n = 10, chromatic number beyond n = 24).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Graph lies outside a minor chain: below its bottom element or above its top.
class BracketRangeError : public std::domain_error {
public:
    BracketRangeError(bool below_bottom, const std::string& what)
        : std::domain_error(what), below_bottom_(below_bottom) {}

    bool below_bottom() const { return below_bottom_; }

private:
    bool below_bottom_;
};

// A higher-wheel candidate was requested but none is stored.
class CandidateUnavailableError : public std::runtime_error {
public:
    explicit CandidateUnavailableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minorlab
