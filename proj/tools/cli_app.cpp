#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qcube/error.hpp"
#include "qcube/graph.hpp"
#include "qcube/io.hpp"
#include "qcube/iso_aut.hpp"
#include "qcube/quotient.hpp"
#include "qcube/verify.hpp"

namespace qcube::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string group_file;
  std::string out;
  std::string format;
  std::uint64_t seed = 1;
  std::uint64_t cap_group = kDefaultGroupCap;
  std::vector<std::string> claims = {"all"};
  int per_dimension = 20;
  int levels = 3;
  bool timing = false;
  bool halved = false;
  std::string example;
};

CubeGroup load_group(const Config& c) {
  const GroupFile file = parse_group_file(read_text_file(c.group_file));
  return generate_group(file.n, file.generators, c.cap_group);
}

void emit(const Config& c, const std::string& content, std::ostream& out) {
  if (c.out.empty()) {
    out << content;
  } else {
    write_text_file(c.out, content);
  }
}

json distance_json(const Distance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

json param_json(const ParamValue& p) {
  if (p.kind == ParamValue::Kind::Value) return p.value;
  return p.to_string();
}

std::string text_lines(const json& j) {
  std::ostringstream s;
  for (const auto& [key, value] : j.items()) {
    s << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return s.str();
}

std::string graph_text(const SimpleGraph& g) {
  std::ostringstream s;
  s << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
  auto name = [&](int v) { return g.has_labels() ? g.labels()[v] : std::to_string(v); };
  for (int v = 0; v < g.vertex_count(); ++v) {
    s << name(v) << ':';
    for (int u : g.neighbors(v)) s << ' ' << name(u);
    s << '\n';
  }
  return s.str();
}

std::string render_graph(const SimpleGraph& g, const std::string& format) {
  if (format == "dot") return graph_to_dot(g);
  if (format == "text") return graph_text(g);
  return graph_to_json(g);
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw Error(ErrorCode::InvalidArgument, "format '" + c.format + "' not supported here");
}

int cmd_mindist(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const CubeGroup k = load_group(c);
  json j;
  j["n"] = k.dimension();
  j["order"] = k.order();
  j["d_K"] = distance_json(min_distance(k));
  j["even"] = is_even(k);
  j["semiregular"] = is_semiregular(k);
  emit(c, c.format == "json" ? j.dump() + "\n" : text_lines(j), out);
  return 0;
}

int cmd_quotient(const Config& c, std::ostream& out) {
  const CubeGroup k = load_group(c);
  emit(c, render_graph(build_quotient(k).graph(), c.format), out);
  return 0;
}

int cmd_halves(const Config& c, std::ostream& out) {
  require_format(c, {"json", "dot"});
  if (c.out.empty()) throw Error(ErrorCode::InvalidArgument, "halves needs --out <prefix>");
  const CubeGroup k = load_group(c);
  const auto halves = halved_graphs(build_quotient(k).graph());
  const std::string ext = c.format == "dot" ? ".dot" : ".json";
  write_text_file(c.out + "_half0" + ext, render_graph(halves.first, c.format));
  write_text_file(c.out + "_half1" + ext, render_graph(halves.second, c.format));
  out << (are_isomorphic(halves.first, halves.second) ? "ISOMORPHIC" : "NOT_ISOMORPHIC") << '\n';
  return 0;
}

int cmd_params(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  if (c.levels < 0) throw Error(ErrorCode::InvalidArgument, "--levels must be non-negative");
  const CubeGroup k = load_group(c);
  const auto q = build_quotient(k);
  const SimpleGraph& g = q.graph();
  const auto valency = regular_valency(g);
  json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["regular_valency"] = valency ? json(*valency) : json(nullptr);
  j["rectagraph"] = is_rectagraph(g);
  json levels = json::array();
  for (const auto& p : local_params(g, c.levels)) {
    levels.push_back({{"level", p.level}, {"c", param_json(p.c)}, {"a", param_json(p.a)}});
  }
  if (c.format == "json") {
    j["levels"] = levels;
    emit(c, j.dump() + "\n", out);
    return 0;
  }
  std::ostringstream s;
  s << text_lines(j);
  for (const auto& l : levels) {
    s << "level " << l["level"].dump() << ": c=" << (l["c"].is_string() ? l["c"].get<std::string>() : l["c"].dump())
      << " a=" << (l["a"].is_string() ? l["a"].get<std::string>() : l["a"].dump()) << '\n';
  }
  emit(c, s.str(), out);
  return 0;
}

int cmd_aut(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const CubeGroup k = load_group(c);
  const SimpleGraph quotient = build_quotient(k).graph();
  const SimpleGraph g = c.halved ? halved_graphs(quotient).first : quotient;
  const auto group = automorphism_group(g);
  const auto orbits = automorphism_orbits(g);
  const int orbit_count = orbits.empty() ? 0 : *std::max_element(orbits.begin(), orbits.end()) + 1;
  json j;
  j["graph"] = c.halved ? "half0" : "quotient";
  j["vertices"] = g.vertex_count();
  j["order"] = group.order.str();
  j["vertex_orbits"] = orbit_count;
  j["vertex_transitive"] = orbit_count == 1;
  emit(c, c.format == "json" ? j.dump() + "\n" : text_lines(j), out);
  return 0;
}

bool any_failure(std::span<const ClaimReport> reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ClaimReport& r) { return r.status == ClaimStatus::Fails; });
}

std::string summary_table(std::span<const ClaimReport> reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.claim_id.size());
  std::ostringstream s;
  int counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.status)];
    s << r.claim_id << std::string(width + 2 - r.claim_id.size(), ' ') << status_name(r.status);
    if (r.runtime_ms) s << "  " << static_cast<long long>(*r.runtime_ms) << " ms";
    s << '\n';
  }
  s << "summary: " << counts[0] << " HOLDS, " << counts[1] << " FAILS, " << counts[2]
    << " SKIPPED\n";
  return s.str();
}

int cmd_verify(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  if (c.per_dimension < 0) throw Error(ErrorCode::InvalidArgument, "--per-dimension must be non-negative");
  VerifyOptions options;
  options.seed = c.seed;
  options.random_per_dimension = c.per_dimension;
  options.timing = c.timing;
  const auto reports = run_claims(c.claims, options);
  emit(c, c.format == "json" ? reports_to_json(reports) : summary_table(reports), out);
  return any_failure(reports) ? 1 : 0;
}

int cmd_example(const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const std::vector<ClaimReport> reports = {run_example(c.example, c.seed)};
  emit(c, c.format == "json" ? reports_to_json(reports) : summary_table(reports), out);
  return any_failure(reports) ? 1 : 0;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Normal quotients of hypercubes", "qcube"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::Throw);

  auto* mindist = app.add_subcommand("mindist", "d_K, order, evenness, semiregularity");
  auto* quotient = app.add_subcommand("quotient", "the quotient graph");
  auto* halves = app.add_subcommand("halves", "both halved graphs and an isomorphism verdict");
  auto* params = app.add_subcommand("params", "local parameters of the quotient");
  params->add_option("--levels", c.levels, "largest distance level");
  auto* aut = app.add_subcommand("aut", "automorphism group of the quotient");
  aut->add_flag("--halved", c.halved, "use the half through vertex 0");
  auto* verify = app.add_subcommand("verify", "run claim checks");
  verify->add_option("--claims", c.claims, "comma separated ids, or all")->delimiter(',');
  verify->add_option("--per-dimension", c.per_dimension, "random groups per n in 6..10");
  verify->add_flag("--timing", c.timing, "record runtime_ms");
  auto* example = app.add_subcommand("example", "run a named example");
  example->add_option("name", c.example, "example name")->required();
  for (auto* sub : {verify, example}) {
    sub->add_option("--seed", c.seed, "random seed");
  }
  for (auto* sub : {mindist, quotient, halves, params, aut, verify, example}) {
    sub->add_option("--out", c.out, "output path");
    sub->add_option("--format", c.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  }
  for (auto* sub : {mindist, quotient, halves, params, aut}) {
    sub->add_option("group-file", c.group_file, "group file")->required();
    sub->add_option("--cap-group", c.cap_group, "largest group to enumerate")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error[InvalidArgument] " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    if (c.format.empty()) c.format = chosen == quotient || chosen == halves ? "json" : "text";
    if (chosen == mindist) return cmd_mindist(c, out);
    if (chosen == quotient) return cmd_quotient(c, out);
    if (chosen == halves) return cmd_halves(c, out);
    if (chosen == params) return cmd_params(c, out);
    if (chosen == aut) return cmd_aut(c, out);
    if (chosen == verify) return cmd_verify(c, out);
    return cmd_example(c, out);
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "] " << one_line(e.what()) << '\n';
  } catch (const std::exception& e) {
    err << "error[Internal] " << one_line(e.what()) << '\n';
  }
  return 2;
}

}  // namespace qcube::cli
