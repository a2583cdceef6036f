#include "spinlat/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spinlat/errors.hpp"

namespace spinlat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::string_view s, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    parse_error(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

struct Pending {
  std::string name;
  int n = -1;
  int first_line = 0;
  std::vector<std::pair<Edge, int>> edges;  // edge, line
  bool active = false;
};

GraphRecord finish(Pending& p, std::size_t index) {
  if (p.n < 0) parse_error(p.first_line, "record has no 'n=<int>' line");
  std::vector<Edge> edges;
  edges.reserve(p.edges.size());
  for (auto& [e, line] : p.edges) {
    if (e.u < 0 || e.u >= p.n || e.v < 0 || e.v >= p.n) {
      parse_error(line, "endpoint out of range in edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " (n=" + std::to_string(p.n) + ")");
    }
    edges.push_back(e);
  }
  GraphRecord rec;
  rec.name = p.name.empty() ? "g" + std::to_string(index) : p.name;
  try {
    rec.graph = Graph(p.n, std::move(edges));
  } catch (const Error& err) {
    parse_error(p.first_line, "graph '" + rec.name + "': " + err.what());
  }
  if (!rec.graph.is_regular(3)) rec.warnings.push_back("not 3-regular");
  if (!rec.graph.is_connected()) rec.warnings.push_back("not connected");
  p = Pending{};
  return rec;
}

}  // namespace

std::vector<GraphRecord> load_graphs(std::string_view text) {
  std::vector<GraphRecord> out;
  Pending p;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;

    if (line.empty()) {
      if (p.active) out.push_back(finish(p, out.size()));
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') continue;

    if (!p.active) {
      p.active = true;
      p.first_line = line_no;
    }
    if (line.starts_with("graph")) {
      if (p.n >= 0 || !p.edges.empty()) parse_error(line_no, "'graph' line inside a record");
      p.name = std::string(trim(line.substr(5)));
      if (p.name.empty()) parse_error(line_no, "graph line without a name");
      continue;
    }
    // The n= line may be followed by edges on the same line after ';'.
    if (line.starts_with("n=")) {
      if (p.n >= 0) parse_error(line_no, "second 'n=' line in a record");
      auto semi = line.find(';');
      p.n = parse_int(trim(line.substr(2, semi == std::string_view::npos ? line.npos : semi - 2)),
                      line_no, "vertex count");
      if (p.n < 1) parse_error(line_no, "vertex count must be positive");
      if (semi == std::string_view::npos) continue;
      line = trim(line.substr(semi + 1));
    }
    if (p.n < 0) parse_error(line_no, "edge tokens before the 'n=' line");
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos || dash == 0) parse_error(line_no, "bad edge token '" + tok + "'");
      std::string_view sv(tok);
      Edge e{parse_int(sv.substr(0, dash), line_no, "vertex"),
             parse_int(sv.substr(dash + 1), line_no, "vertex")};
      p.edges.push_back({e, line_no});
    }
  }
  if (p.active) out.push_back(finish(p, out.size()));
  return out;
}

std::vector<GraphRecord> load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graphs(buffer.str());
}

std::string save_graph(const std::string& name, const Graph& g) {
  std::string out = "graph " + name + "\nn=" + std::to_string(g.n()) + "\n";
  // 12 edges per line keeps large graphs readable
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (count > 0) out += (count % 12 == 0) ? '\n' : ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    ++count;
  }
  if (count > 0) out += '\n';
  out += '\n';
  return out;
}

std::string save_graphs(const std::vector<GraphRecord>& records) {
  std::string out;
  for (const auto& r : records) out += save_graph(r.name, r.graph);
  return out;
}

}  // namespace spinlat
