#pragma once

#include <istream>
#include <string>

#include "stw/tree.hpp"

namespace stw {

// One edge per line as two whitespace-separated 0-based ids; '#' lines and
// blank lines are skipped. The order is 1 + the largest id; input without
// any edge yields the single-vertex tree.
Tree read_edge_list(std::istream& in);
Tree parse_edge_list(const std::string& text);
Tree load_edge_list(const std::string& path);

// "u v\n" per edge, u < v, sorted.
std::string to_edge_list(const Tree& t);
// Undirected DOT graph with vertex ids as labels.
std::string to_dot(const Tree& t, const std::string& name = "T");

}  // namespace stw
