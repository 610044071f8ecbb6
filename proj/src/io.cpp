#include "qcube/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qcube/error.hpp"

namespace qcube {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_line(int line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_json(const SimpleGraph& g) {
  ordered_json j;
  j["n_vertices"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump() + "\n";
}

SimpleGraph graph_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int count = j.at("n_vertices").get<int>();
    if (count < 0) throw Error(ErrorCode::ParseError, "negative n_vertices");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::ParseError, "edge is not a pair");
      }
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= count || v >= count) {
        throw Error(ErrorCode::ParseError, "edge endpoint out of range");
      }
      edges.emplace_back(u, v);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return SimpleGraph::from_edges(count, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string graph_to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=" << dot_quote(g.labels()[v]) << "]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

GroupFile parse_group_file(std::string_view text) {
  GroupFile file;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      if (!line.starts_with("n=")) fail_line(line_no, "expected \"n=<int>\"");
      const auto digits = line.substr(2);
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), file.n);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        fail_line(line_no, "malformed dimension");
      }
      if (file.n < 1 || file.n > kMaxDimension) {
        fail_line(line_no, "dimension must lie in 1..32");
      }
      have_header = true;
      continue;
    }

    if (!line.starts_with("x=")) fail_line(line_no, "expected \"x=<bits> perm=<cycles>\"");
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) fail_line(line_no, "missing perm=");
    const auto bits = line.substr(2, space - 2);
    const auto rest = trim(line.substr(space));
    if (!rest.starts_with("perm=")) fail_line(line_no, "expected perm=");
    try {
      const BitVector x = BitVector::parse(bits);
      if (x.dimension() != file.n) {
        fail_line(line_no, "translation has " + std::to_string(x.dimension()) +
                               " bits, expected " + std::to_string(file.n));
      }
      file.generators.emplace_back(x, Permutation::parse(file.n, rest.substr(5)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError && std::string_view(e.what()).starts_with("line ")) {
        throw;
      }
      fail_line(line_no, e.what());
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "line 1: missing \"n=<int>\" header");
  return file;
}

std::string format_group_file(int n, const std::vector<CubeAutomorphism>& gens) {
  std::string out = "n=" + std::to_string(n) + "\n";
  for (const auto& g : gens) out += g.to_string() + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path);
}

}  // namespace qcube
