#pragma once

#include "egr/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace egr {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr std::uint64_t kGraph6MaxOrder = 1'000'000;

// graph6 encoding without header or trailing newline.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header.  Trailing whitespace is not
// stripped.  Padding bits must be zero.  Throws Graph6Error.
Graph graph6_decode(std::string_view text);

}  // namespace egr
