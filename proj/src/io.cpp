#include "eo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eo/errors.hpp"

namespace eo {

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n >> m) {
        if (n < 0 || m < 0) fail(Errc::parse, "negative n or m");
        edges.reserve(static_cast<std::size_t>(m));
      } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        fail(Errc::parse, "expected header line 'n m'");
      }
      continue;
    }
    long u, v;
    if (ls >> u >> v) {
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      fail(Errc::parse, "bad edge line: " + line);
    }
  }
  if (n < 0) fail(Errc::parse, "missing header line 'n m'");
  if (static_cast<long>(edges.size()) != m)
    fail(Errc::parse, "edge count mismatch: header says " + std::to_string(m) + ", got " +
                          std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) fail(Errc::parse, "need keys 'n' and 'edges'");
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) fail(Errc::parse, "edges must be [u,v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j["n"].get<int>(), edges);
}

Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (auto& e : g.edges()) edges.push_back({e.lo, e.hi});
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace eo
