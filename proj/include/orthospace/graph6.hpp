#ifndef ORTHOSPACE_GRAPH6_HPP
#define ORTHOSPACE_GRAPH6_HPP

#include <string>
#include <string_view>

#include "orthospace/space.hpp"

namespace orthospace {

/// Short-form graph6 encoding (1 <= n <= 62). Throws std::invalid_argument
/// for larger spaces.
std::string to_graph6(const OrthoSpace& space);

/// Parses a short-form graph6 string. Throws std::invalid_argument with a
/// specific message for: empty input, a long-form or out-of-range size
/// header, a body of the wrong length, body characters outside the graph6
/// alphabet, and non-zero padding bits.
OrthoSpace from_graph6(std::string_view text);

}  // namespace orthospace

#endif  // ORTHOSPACE_GRAPH6_HPP
