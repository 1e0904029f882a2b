#include "fdomlab/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "fdomlab/errors.hpp"

namespace fdom {

namespace {

struct Parsed {
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
};

Parsed parse_lines(std::istream& in) {
  Parsed p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      if (p.n >= 0) fail("duplicate header");
      if (!(ls >> p.n >> p.m) || p.n < 0 || p.m < 0) fail("bad header");
    } else if (tag == "e") {
      if (p.n < 0) fail("edge before header");
      Edge e{};
      if (!(ls >> e.u >> e.v)) fail("bad edge line");
      p.edges.push_back(e);
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (p.n < 0) throw InvalidArgument("missing 'p <n> <m>' header");
  if (static_cast<int>(p.edges.size()) != p.m)
    throw InvalidArgument("header announces " + std::to_string(p.m) + " edges, found " +
                          std::to_string(p.edges.size()));
  return p;
}

}  // namespace

Graph read_graph(std::istream& in) {
  Parsed p = parse_lines(in);
  return Graph(p.n, p.edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_graph(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

MultiGraph read_multigraph(std::istream& in) {
  Parsed p = parse_lines(in);
  return MultiGraph(p.n, p.edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InvalidArgument("empty graph6 string");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw InvalidArgument("truncated graph6 string");
    int c = static_cast<unsigned char>(line[pos++]) - 63;
    if (c < 0 || c > 63) throw InvalidArgument("bad graph6 character");
    return c;
  };
  int n = next();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  std::vector<Edge> edges;
  int bits = 0, word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        word = next();
        bits = 6;
      }
      --bits;
      if ((word >> bits) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int bits = 0, word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(word + 63));
        bits = word = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((word << (6 - bits)) + 63));
  return out;
}

std::vector<std::vector<int>> parse_permutations(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> perm;
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    do perm.push_back(std::stoi(tok));
    while (ls >> tok);
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace fdom
