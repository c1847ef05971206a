#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cdlp/graph.hpp"

namespace cdlp {

// Edge-list format: one edge per line as two whitespace-separated
// non-negative integer ids; '#' starts a comment line; duplicates and
// reversed pairs are tolerated. Node count is the largest id + 1 unless a
// larger count is forced.
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>",
                     int min_node_count = 0);
Graph read_edge_list(const std::filesystem::path& path, int min_node_count = 0);

// Writes edges as canonical "a b" lines in ascending order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

// Community-file format: "node-id community-id" lines, '#' comments. Every
// node in [0, node_count) must be covered exactly once.
Partition read_community_file(std::istream& in, const std::string& name = "<stream>");
Partition read_community_file(const std::filesystem::path& path);

void write_community_file(std::ostream& out, const Partition& p);
void write_community_file(const std::filesystem::path& path, const Partition& p);

// Shortest representation with 6 significant digits ("%.6g").
std::string format_double(double value);

}  // namespace cdlp
