#include "pi2/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pi2/errors.hpp"

namespace pi2::io {

namespace {

struct Line {
  int number;
  char tag;
  std::vector<long long> args;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw DomainError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) words.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (words.empty()) continue;
    if (words[0].size() != 1) fail(number, "unknown record '" + std::string(words[0]) + "'");
    Line line{number, words[0][0], {}};
    for (std::size_t k = 1; k < words.size(); ++k) {
      long long value = 0;
      auto w = words[k];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc() || ptr != w.data() + w.size())
        fail(number, "expected an integer, got '" + std::string(w) + "'");
      if (value < 0 || value > 100000000) fail(number, "integer out of range");
      line.args.push_back(value);
    }
    out.push_back(std::move(line));
  }
  return out;
}

void expect_args(const Line& line, std::size_t n) {
  if (line.args.size() != n)
    fail(line.number, std::string("record ") + line.tag + " takes " + std::to_string(n) +
                          " integers");
}

// Consumes a V block starting at lines[i]; stops at the next V or M.
Graph take_graph(const std::vector<Line>& lines, std::size_t& i, std::vector<Vertex>* extra) {
  if (i >= lines.size() || lines[i].tag != 'V')
    fail(i < lines.size() ? lines[i].number : 0, "expected 'V <n>'");
  expect_args(lines[i], 1);
  const int n = static_cast<int>(lines[i].args[0]);
  ++i;
  std::vector<Edge> edges;
  for (; i < lines.size() && lines[i].tag != 'V' && lines[i].tag != 'M'; ++i) {
    const Line& line = lines[i];
    if (line.tag == 'E') {
      expect_args(line, 2);
      for (long long x : line.args)
        if (x >= n) fail(line.number, "vertex " + std::to_string(x) + " out of range");
      edges.emplace_back(static_cast<Vertex>(line.args[0]), static_cast<Vertex>(line.args[1]));
    } else if (line.tag == 'W' && extra) {
      expect_args(line, 1);
      if (line.args[0] >= n) fail(line.number, "vertex out of range");
      extra->push_back(static_cast<Vertex>(line.args[0]));
    } else {
      fail(line.number, std::string("unexpected record '") + line.tag + "' in graph block");
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t i = 0;
  Graph g = take_graph(lines, i, nullptr);
  if (i != lines.size()) fail(lines[i].number, "trailing records after graph");
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << "E " << a << ' ' << b << '\n';
  return out.str();
}

RawMap parse_raw_map(std::string_view text) {
  auto lines = tokenize(text);
  RawMap raw;
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tag == 'V') {
    raw.source = take_graph(lines, i, nullptr);
    raw.target = take_graph(lines, i, nullptr);
  }
  if (i >= lines.size() || lines[i].tag != 'M')
    fail(i < lines.size() ? lines[i].number : 0, "expected 'M <n_src> <n_tgt>'");
  expect_args(lines[i], 2);
  raw.source_count = static_cast<int>(lines[i].args[0]);
  raw.target_count = static_cast<int>(lines[i].args[1]);
  ++i;
  raw.assignment.assign(raw.source_count, -1);
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tag != 'F') fail(line.number, "expected 'F <src> <tgt>'");
    expect_args(line, 2);
    if (line.args[0] >= raw.source_count || line.args[1] >= raw.target_count)
      fail(line.number, "map entry out of range");
    if (raw.assignment[line.args[0]] != -1)
      fail(line.number, "source vertex " + std::to_string(line.args[0]) + " mapped twice");
    raw.assignment[line.args[0]] = static_cast<Vertex>(line.args[1]);
  }
  for (int v = 0; v < raw.source_count; ++v)
    if (raw.assignment[v] == -1)
      throw DomainError("map leaves source vertex " + std::to_string(v) + " unassigned");
  return raw;
}

GraphMap parse_map(std::string_view text, const std::optional<Graph>& source,
                   const std::optional<Graph>& target) {
  RawMap raw = parse_raw_map(text);
  std::optional<Graph> s = source ? source : raw.source;
  std::optional<Graph> t = target ? target : raw.target;
  if (!s || !t) throw DomainError("map file has no graphs; supply source and target");
  if (s->vertex_count() != raw.source_count || t->vertex_count() != raw.target_count)
    throw DomainError("map header sizes do not match the graphs");
  return GraphMap(std::move(*s), std::move(*t), std::move(raw.assignment));
}

std::string write_map(const GraphMap& m) {
  std::ostringstream out;
  out << "M " << m.source().vertex_count() << ' ' << m.target().vertex_count() << '\n';
  for (Vertex v = 0; v < m.source().vertex_count(); ++v) out << "F " << v << ' ' << m(v) << '\n';
  return out.str();
}

std::string write_bundle(const GraphMap& m) {
  return write_graph(m.source()) + write_graph(m.target()) + write_map(m);
}

Subgraph parse_subgraph(std::string_view text, const Graph& parent) {
  auto lines = tokenize(text);
  std::size_t i = 0;
  std::vector<Vertex> extra;
  Graph g = take_graph(lines, i, &extra);
  if (i != lines.size()) fail(lines[i].number, "trailing records after subgraph");
  if (g.vertex_count() != parent.vertex_count())
    throw DomainError("subgraph must be written on the parent's " +
                      std::to_string(parent.vertex_count()) + " vertex ids");
  VertexSet members = extra;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) members.push_back(v);
  return Subgraph(parent, std::move(members), g.edges());
}

std::string write_subgraph(const Subgraph& s) {
  std::string out = write_graph(s.as_graph());
  for (Vertex v : s.vertices())
    if (s.as_graph().degree(v) == 0) out += "W " + std::to_string(v) + '\n';
  return out;
}

std::vector<std::vector<Vertex>> parse_loops(std::string_view text) {
  std::vector<std::vector<Vertex>> out;
  for (const Line& line : tokenize(text)) {
    if (line.tag != 'L') fail(line.number, "expected 'L <v0> <v1> ...'");
    if (line.args.empty()) fail(line.number, "empty path");
    out.emplace_back(line.args.begin(), line.args.end());
  }
  return out;
}

std::string write_loops(const std::vector<std::vector<Vertex>>& loops) {
  std::ostringstream out;
  for (const auto& p : loops) {
    out << 'L';
    for (Vertex v : p) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pi2::io
