#include "gctsp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace gctsp {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::uint64_t parse_u64(const std::string& token, int line,
                        const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") +
                               what + ", got '" + token + "'");
  return value;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

}  // namespace

ClusteredGraph parse_instance(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    for (int number = 1; std::getline(in, raw); ++number) {
      if (raw.empty() || raw[0] == '#') continue;
      auto tokens = tokenize(raw);
      if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
  }
  if (lines.size() < 3) throw ParseError(1, "truncated instance");

  const auto& magic = lines[0];
  if (magic.tokens.size() != 2 || magic.tokens[0] != "gctsp" ||
      magic.tokens[1] != "1")
    throw ParseError(magic.number, "malformed header, expected 'gctsp 1'");

  const auto& meta = lines[1];
  if (meta.tokens.size() != 4)
    throw ParseError(meta.number, "expected 'n m scale known_optimum|?'");
  const auto n =
      static_cast<int>(parse_u64(meta.tokens[0], meta.number, "node count"));
  const auto m =
      static_cast<int>(parse_u64(meta.tokens[1], meta.number, "cluster count"));
  const auto scale = parse_u64(meta.tokens[2], meta.number, "scale");
  std::optional<Cost> known_optimum;
  if (meta.tokens[3] != "?")
    known_optimum =
        Cost::finite(parse_u64(meta.tokens[3], meta.number, "known optimum"));
  if (m < 2) throw ParseError(meta.number, "cluster count must be at least 2");
  if (n < m) throw ParseError(meta.number, "node count must be at least m");
  if (scale == 0) throw ParseError(meta.number, "scale must be positive");

  const auto& clusters = lines[2];
  if (clusters.tokens.empty() || clusters.tokens[0] != "clusters")
    throw ParseError(clusters.number, "expected the clusters line");
  if (static_cast<int>(clusters.tokens.size()) != n + 1)
    throw ParseError(clusters.number,
                     "node without cluster: expected " + std::to_string(n) +
                         " cluster ids, got " +
                         std::to_string(clusters.tokens.size() - 1));
  std::vector<int> cluster_of(n);
  for (int v = 0; v < n; ++v) {
    const auto c = parse_u64(clusters.tokens[v + 1], clusters.number, "cluster id");
    if (c >= static_cast<std::uint64_t>(m))
      throw ParseError(clusters.number,
                       "cluster id " + std::to_string(c) + " out of range");
    cluster_of[v] = static_cast<int>(c);
  }

  ClusteredGraph g(m, std::move(cluster_of), scale);
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(clusters.number, e.what());
  }
  if (known_optimum) g.set_known_optimum(*known_optimum);

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "e")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "expected 'e u v w'");
    const auto u = parse_u64(line.tokens[1], line.number, "node id");
    const auto v = parse_u64(line.tokens[2], line.number, "node id");
    const auto w = parse_u64(line.tokens[3], line.number, "edge cost");
    if (u >= static_cast<std::uint64_t>(n) || v >= static_cast<std::uint64_t>(n))
      throw ParseError(line.number, "edge endpoint out of range");
    if (u >= v)
      throw ParseError(line.number,
                       "edge endpoints must satisfy u < v (one line per pair)");
    if (g.cost(static_cast<int>(u), static_cast<int>(v)).is_finite())
      throw ParseError(line.number, "duplicate edge line");
    g.set_cost(static_cast<int>(u), static_cast<int>(v), Cost::finite(w));
  }
  return g;
}

std::string write_instance(const ClusteredGraph& g) {
  std::ostringstream out;
  out << "gctsp 1\n";
  out << g.node_count() << ' ' << g.cluster_count() << ' ' << g.scale() << ' ';
  if (g.known_optimum())
    out << to_string(*g.known_optimum());
  else
    out << '?';
  out << '\n';
  out << "clusters";
  for (int v = 0; v < g.node_count(); ++v) out << ' ' << g.cluster_of(v);
  out << '\n';
  for (int u = 0; u < g.node_count(); ++u)
    for (int v = u + 1; v < g.node_count(); ++v)
      if (g.cost(u, v).is_finite())
        out << "e " << u << ' ' << v << ' ' << g.cost(u, v).value() << '\n';
  return out.str();
}

ClusteredGraph load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance_file(const ClusteredGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << write_instance(g);
}

}  // namespace gctsp
