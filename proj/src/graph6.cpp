#include <cctype>
#include <sstream>

#include "spex/graph.hpp"

namespace spex {

namespace {
constexpr int kBias = 63;
}

Graph parse_graph6(const std::string& text) {
  // Strip an optional trailing newline; anything else past the payload is an error.
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    // Long form: '~' then three 6-bit digits.
    if (s.size() < 4) throw std::invalid_argument("graph6: malformed header (truncated long form)");
    if (static_cast<unsigned char>(s[1]) == 126)
      throw std::invalid_argument("graph6: order beyond implementation cap");
    long long v = 0;
    for (int i = 1; i <= 3; ++i) {
      int c = static_cast<unsigned char>(s[static_cast<size_t>(i)]) - kBias;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: malformed header byte");
      v = (v << 6) | c;
    }
    if (v > Graph::kMaxVertices)
      throw std::invalid_argument("graph6: order " + std::to_string(v) +
                                  " beyond the 64-vertex cap");
    n = static_cast<int>(v);
    pos = 4;
  } else {
    int c = static_cast<unsigned char>(s[0]) - kBias;
    if (c < 0 || c > 62) throw std::invalid_argument("graph6: malformed header byte");
    n = c;
    pos = 1;
  }

  Graph g(n);
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < nbytes)
    throw std::invalid_argument("graph6: truncated bit payload");
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > nbytes)
    throw std::invalid_argument("graph6: trailing garbage after payload");

  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int c = static_cast<unsigned char>(s[pos + static_cast<size_t>(bit / 6)]) - kBias;
      if (c < 0 || c > 63) throw std::invalid_argument("graph6: invalid payload byte");
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  int max_seen = -1;
  bool first_data = true;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line.substr(i));
    if (first_data) {
      first_data = false;
      // Optional "n <count>" header line.
      std::string tok;
      ls >> tok;
      if (tok == "n") {
        long long cnt;
        if (!(ls >> cnt)) throw std::invalid_argument("edge list: malformed header line");
        n = static_cast<int>(cnt);
        continue;
      }
      ls.clear();
      ls.str(line.substr(i));
    }
    int u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed line: " + line);
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex index");
    edges.emplace_back(u, v);
    max_seen = std::max({max_seen, u, v});
  }
  if (n < 0) n = max_seen + 1;
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace spex
