#include "leapx/io.hpp"

#include <istream>
#include <sstream>

namespace leapx {

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line");
  const unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126)
    throw ParseError("long-form graph6 (n > 62) is not supported");
  if (header < 63 || header > 125)
    throw ParseError("malformed graph6 header byte");
  const int n = header - 63;
  const int bits = n * (n - 1) / 2;
  const int body = (bits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + body)
    throw ParseError("graph6 body has wrong length for n = " +
                     std::to_string(n));
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < body; ++i) {
    const unsigned char ch = static_cast<unsigned char>(line[1 + i]);
    if (ch < 63 || ch > 126) throw ParseError("malformed graph6 byte");
    const int chunk = ch - 63;
    for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
      if (chunk & (1 << b)) {
        // bit index of pair (u,v), u < v, is v(v-1)/2 + u
        int v = 1;
        while (v * (v + 1) / 2 <= bit) ++v;
        int u = bit - v * (v - 1) / 2;
        edges.emplace_back(u, v);
      }
    }
    // padding bits past the triangle must be zero
    if (bit >= bits) {
      int pad = 6 * (i + 1) - bits;
      if (pad > 0 && (chunk & ((1 << pad) - 1)))
        throw ParseError("nonzero graph6 padding bits");
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw ParseError("graph6 writer supports n <= 62 only");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int bits = n * (n - 1) / 2;
  std::vector<bool> tri(bits, false);
  for (auto [u, v] : g.edges()) tri[v * (v - 1) / 2 + u] = true;
  for (int start = 0; start < bits; start += 6) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) {
      int idx = start + b;
      if (idx < bits && tri[idx]) chunk |= 1 << (5 - b);
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '>') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_edgelist(std::istream& in) {
  std::vector<Edge> edges;
  int declared_n = -1;
  int max_vertex = -1;
  std::string line;
  bool first_content = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (first_content && tok.rfind("n=", 0) == 0) {
      try {
        declared_n = std::stoi(tok.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad vertex-count declaration: " + tok);
      }
      first_content = false;
      continue;
    }
    first_content = false;
    int u = 0, v = 0;
    std::istringstream pair(line);
    if (!(pair >> u >> v)) throw ParseError("bad edge line: " + line);
    std::string extra;
    if (pair >> extra) throw ParseError("trailing tokens on edge line: " + line);
    if (u < 0 || v < 0) throw ParseError("negative vertex id: " + line);
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  int n = std::max(declared_n, max_vertex + 1);
  if (declared_n >= 0 && max_vertex + 1 > declared_n)
    throw ParseError("edge endpoint exceeds declared n");
  return Graph::from_edge_list(std::max(n, 0), edges);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace leapx
