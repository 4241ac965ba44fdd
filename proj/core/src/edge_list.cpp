#include "geodetic/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "geodetic/errors.hpp"

namespace geodetic {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f' ||
         c == ',';
}

std::string_view next_token(std::string_view& rest) {
  std::size_t start = 0;
  while (start < rest.size() && is_space(rest[start])) ++start;
  std::size_t end = start;
  while (end < rest.size() && !is_space(rest[end])) ++end;
  std::string_view token = rest.substr(start, end - start);
  rest.remove_prefix(end);
  return token;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  if (token.empty()) throw ParseError(line, "expected two vertex ids");
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "invalid vertex id '" + std::string(token) + "'");
  }
  if (value > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line, "vertex id out of range '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::vector<std::uint64_t> first_seen;
  std::unordered_map<std::uint64_t, Vertex> index;
  std::uint64_t max_id = 0;

  auto note = [&](std::uint64_t id) {
    if (index.emplace(id, static_cast<Vertex>(first_seen.size())).second) {
      first_seen.push_back(id);
    }
    max_id = std::max(max_id, id);
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    std::uint64_t u = parse_id(first, line_no);
    std::uint64_t v = parse_id(next_token(rest), line_no);
    if (options.one_based) {
      if (u == 0 || v == 0) {
        throw ParseError(line_no, "vertex id 0 in one-based input");
      }
      --u;
      --v;
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": self-loop at vertex " + std::string(first));
    }
    note(u);
    note(v);
    raw.emplace_back(u, v);
  }

  const std::size_t n = first_seen.size();
  const bool contiguous = n == 0 || max_id + 1 == n;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (contiguous) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      edges.emplace_back(index.at(u), index.at(v));
    }
  }
  Graph g = Graph::from_edges(n, edges);
  if (options.strict && !is_connected(g)) {
    throw ValidationError("graph is not connected");
  }
  return g;
}

Graph parse_edge_list(std::string_view text, const EdgeListOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Graph read_edge_list(const std::filesystem::path& path,
                     const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace geodetic
