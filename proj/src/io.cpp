#include "cdlp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cdlp/errors.hpp"

namespace cdlp {

namespace {

std::ifstream open_for_reading(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  return out;
}

// Strips comments/blanks; returns false for lines to skip.
bool payload_line(const std::string& line, std::string& out) {
  const auto hash = line.find('#');
  out = hash == std::string::npos ? line : line.substr(0, hash);
  return out.find_first_not_of(" \t\r\n") != std::string::npos;
}

[[noreturn]] void parse_fail(const std::string& name, int line_no, const std::string& what) {
  throw InputError(name + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name, int min_node_count) {
  EdgeList edges;
  std::string line;
  std::string payload;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!payload_line(line, payload)) continue;
    std::istringstream fields(payload);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b)) {
      parse_fail(name, line_no, "expected two integer node ids");
    }
    if (fields >> extra) {
      parse_fail(name, line_no, "unexpected trailing field '" + extra + "'");
    }
    if (a < 0 || b < 0) parse_fail(name, line_no, "node ids must be non-negative");
    if (a == b) parse_fail(name, line_no, "self-loop " + std::to_string(a));
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    max_id = std::max(max_id, static_cast<int>(std::max(a, b)));
  }
  const int n = std::max(max_id + 1, std::max(min_node_count, 1));
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path, int min_node_count) {
  auto in = open_for_reading(path);
  return read_edge_list(in, path.string(), min_node_count);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [a, b] : g.edges()) {
    out << a << ' ' << b << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_for_writing(path);
  write_edge_list(out, g);
}

Partition read_community_file(std::istream& in, const std::string& name) {
  std::vector<std::pair<NodeId, int>> entries;
  std::string line;
  std::string payload;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!payload_line(line, payload)) continue;
    std::istringstream fields(payload);
    long long node = 0;
    long long community = 0;
    std::string extra;
    if (!(fields >> node >> community)) {
      parse_fail(name, line_no, "expected 'node-id community-id'");
    }
    if (fields >> extra) {
      parse_fail(name, line_no, "unexpected trailing field '" + extra + "'");
    }
    if (node < 0) parse_fail(name, line_no, "node ids must be non-negative");
    entries.emplace_back(static_cast<NodeId>(node), static_cast<int>(community));
    max_id = std::max(max_id, static_cast<int>(node));
  }
  if (entries.empty()) throw InputError(name + ": no community assignments found");

  std::vector<int> labels(max_id + 1, -1);
  for (const auto& [node, community] : entries) {
    if (labels[node] != -1 && labels[node] != community) {
      throw InputError(name + ": node " + std::to_string(node) + " assigned twice");
    }
    labels[node] = community;
  }
  for (int node = 0; node <= max_id; ++node) {
    if (labels[node] == -1) {
      throw InputError(name + ": node " + std::to_string(node) + " has no community");
    }
  }
  return Partition(labels);
}

Partition read_community_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  return read_community_file(in, path.string());
}

void write_community_file(std::ostream& out, const Partition& p) {
  for (NodeId node = 0; node < p.node_count(); ++node) {
    out << node << ' ' << p.community_of(node) << '\n';
  }
}

void write_community_file(const std::filesystem::path& path, const Partition& p) {
  auto out = open_for_writing(path);
  write_community_file(out, p);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

}  // namespace cdlp
