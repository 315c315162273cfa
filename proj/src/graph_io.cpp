#include "dgs/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dgs {

namespace {

std::invalid_argument line_error(std::size_t line_no, const std::string& msg) {
  return std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

EdgeListGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0)
      throw line_error(line_no, "expected header \"n m\"");
    break;
  }
  if (n < 0) throw std::invalid_argument("missing header \"n m\"");

  std::vector<std::pair<int, int>> edges;
  std::size_t duplicates = 0;
  long long read = 0;
  while (read < m) {
    if (!std::getline(in, line)) throw std::invalid_argument("unexpected end of input: expected " + std::to_string(m) + " edges, got " + std::to_string(read));
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw line_error(line_no, "malformed edge line");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw line_error(line_no, "vertex index out of range");
    if (u == v) throw line_error(line_no, "self-loop at vertex " + std::to_string(u));
    const int a = static_cast<int>(std::min(u, v));
    const int b = static_cast<int>(std::max(u, v));
    edges.emplace_back(a, b);
    ++read;
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  duplicates = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  return EdgeListGraph{Graph(static_cast<int>(n), edges), duplicates};
}

EdgeListGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("empty graph6 word");
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw std::invalid_argument("graph6: byte out of printable range");
  const int n = line[0] - 63;
  if (n >= 63) throw std::invalid_argument("graph6: n >= 63 not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = 1 + (bits + 5) / 6;
  if (line.size() < need) throw std::invalid_argument("graph6: truncated bit field");
  if (line.size() > need) throw std::invalid_argument("graph6: trailing bytes");

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = line[1 + bit / 6] - 63;
      if (group & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 63) throw std::invalid_argument("graph6 encoding supports n < 63 only");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

VertexProfiles parse_profile_file(std::istream& in, int n) {
  VertexProfiles p;
  p.c.assign(n, Rational(1));
  p.kappa.assign(n, 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    long long v;
    std::string c_str;
    long long kappa;
    if (!(ls >> v >> c_str >> kappa)) throw line_error(line_no, "expected \"v c kappa\"");
    if (v < 0 || v >= n) throw line_error(line_no, "vertex index out of range");
    p.c[v] = parse_rational(c_str);
    if (kappa < 0) throw line_error(line_no, "negative kappa");
    p.kappa[v] = static_cast<int>(kappa);
  }
  return p;
}

}  // namespace dgs
