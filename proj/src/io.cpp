#include "stw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "stw/error.hpp"

namespace stw {

Tree read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u > 1'000'000 ||
        v > 1'000'000) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" + line + "'");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
  }
  if (edges.empty()) return Tree::single_vertex();
  return Tree(max_id + 1, edges);
}

Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Tree load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string to_edge_list(const Tree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  }
  return out;
}

std::string to_dot(const Tree& t, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (Vertex v = 0; v < t.order(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  }
  for (const Edge& e : t.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace stw
