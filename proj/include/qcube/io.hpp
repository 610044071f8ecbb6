#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcube/cube_symmetry.hpp"
#include "qcube/graph.hpp"

namespace qcube {

/// {"n_vertices": N, "edges": [[u,v],...], "labels": [...]} with edges
/// sorted and u < v; "labels" only when the graph has them. Byte-stable.
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(std::string_view text);

/// Undirected DOT, one line per vertex and per edge, in index order.
std::string graph_to_dot(const SimpleGraph& g, std::string_view name = "G");

/// A group file: "n=<int>" then one "x=<bits> perm=<cycles|id>" per line.
struct GroupFile {
  int n = 0;
  std::vector<CubeAutomorphism> generators;
};

/// Blank lines and lines starting with '#' are skipped. Errors name the
/// 1-based line.
GroupFile parse_group_file(std::string_view text);
std::string format_group_file(int n, const std::vector<CubeAutomorphism>& gens);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace qcube
