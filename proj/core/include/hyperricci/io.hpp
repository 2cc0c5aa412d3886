#pragma once

#include <string>
#include <string_view>

#include "hyperricci/hypergraph.hpp"

namespace hyperricci {

// Line-oriented text format:
//
//   # comment
//   vertices <n>
//   edge <w> <v1> ... <vk>
//
// Two comment pragmas are understood: "# vertex <index> <name>" labels a
// vertex, and "# allow-multi" permits repeated hyperedges. Other readers may
// ignore both since they are plain comments.

// Throws ParseError (with line number) on malformed input and
// ValidationError / Disconnected when the hypergraph is invalid.
Hypergraph parse(std::string_view text);

// Edges in stored order, weights with 17 significant digits.
std::string serialize(const Hypergraph& h);

Hypergraph read_file(const std::string& path);

}  // namespace hyperricci
