#pragma once

#include <stdexcept>
#include <string>

namespace cassonlin {

// Malformed braid text or letters out of range.
struct BraidParseError : std::runtime_error {
    explicit BraidParseError(const std::string& what) : std::runtime_error(what) {}
};

// The closure of the braid is a link with more than one component.
struct NotAKnotError : std::runtime_error {
    explicit NotAKnotError(const std::string& what) : std::runtime_error(what) {}
};

// A fixed-point class failed the nondegeneracy threshold, so no signed
// count can be reported.
struct DegenerateClassError : std::runtime_error {
    explicit DegenerateClassError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cassonlin
