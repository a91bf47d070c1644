// ddg: build, certify and export the graphs of the degree/diameter study.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ddg/cache.hpp"
#include "ddg/constructions.hpp"
#include "ddg/error.hpp"
#include "ddg/field.hpp"
#include "ddg/formats.hpp"
#include "ddg/run_config.hpp"
#include "ddg/table.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> diameter_mode;
  std::optional<std::uint32_t> retry_budget;
  std::optional<std::uint64_t> bfs_budget;
  std::optional<std::string> cache_dir;
  bool json = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "first seed to try (env DDG_SEED)");
  cmd->add_option("--workers", f.workers, "certification threads (env DDG_WORKERS)")->check(CLI::PositiveNumber);
  cmd->add_option("--diameter-mode", f.diameter_mode, "exact or bounded (env DDG_DIAMETER_MODE)")
      ->check(CLI::IsMember({"exact", "bounded"}));
  cmd->add_option("--retry-budget", f.retry_budget, "seeds to try before giving up (env DDG_RETRY_BUDGET)");
  cmd->add_option("--bfs-budget", f.bfs_budget, "BFS runs allowed in bounded mode (env DDG_BFS_BUDGET)");
  cmd->add_option("--cache-dir", f.cache_dir, "base-graph cache (env DDG_CACHE_DIR)");
  cmd->add_flag("--json", f.json, "machine-readable output (env DDG_OUTPUT=json)");
}

ddg::RunConfig resolve(const Flags& f) {
  ddg::RunConfig c = ddg::RunConfig::from_env();
  if (f.seed) c.seed = *f.seed;
  if (f.workers) c.workers = *f.workers;
  if (f.diameter_mode) c.diameter_mode = ddg::parse_diameter_mode(*f.diameter_mode);
  if (f.retry_budget) c.retry_budget = *f.retry_budget;
  if (f.bfs_budget) c.bfs_budget = *f.bfs_budget;
  if (f.cache_dir) c.cache_dir = *f.cache_dir;
  if (f.json) c.output = ddg::OutputFormat::kJson;
  return c;
}

bool usage_error(ddg::ErrorCode code) {
  return code == ddg::ErrorCode::kInvalidArgument || code == ddg::ErrorCode::kNotPrimePower ||
         code == ddg::ErrorCode::kFormatUnsupported;
}

int report_error(const ddg::Error& e) {
  ordered_json j;
  j["error"] = {{"code", std::string(e.name())}, {"message", e.what()}};
  std::cerr << j.dump() << "\n";
  return usage_error(e.code()) ? kUsage : kFailure;
}

ddg::Certificate certify_plain(const ddg::Graph& g, const ddg::RunConfig& c, bool girth) {
  ddg::CertifyOptions o;
  o.compute_girth = girth;
  o.diameter.workers = c.workers;
  o.diameter.bfs_budget = c.bfs_budget;
  o.diameter.mode = c.diameter_mode.value_or(g.order() <= 10'000 ? ddg::DiameterMode::kExact
                                                                   : ddg::DiameterMode::kBounded);
  return ddg::certify(g, o);
}

ddg::Graph base_graph(const ddg::MooreSpec& spec, const ddg::RunConfig& c) {
  if (c.cache_dir) return ddg::GraphCache(*c.cache_dir).get_or_build(spec);
  return ddg::build_moore(spec);
}

// --- construct -----------------------------------------------------------

struct ConstructArgs {
  std::optional<std::string> named;
  std::optional<std::string> family;
  std::optional<std::uint32_t> q;
  std::string out_dir = "ddg-out";
  std::string format = "edgelist";
};

std::string extension(ddg::GraphFormat f) {
  switch (f) {
    case ddg::GraphFormat::kEdgeList: return ".edges";
    case ddg::GraphFormat::kDimacs: return ".dimacs";
    case ddg::GraphFormat::kGraph6: return ".g6";
  }
  return ".txt";
}

int cmd_construct(const ConstructArgs& a, const ddg::RunConfig& c) {
  if (a.named.has_value() == a.family.has_value()) {
    throw ddg::Error(ddg::ErrorCode::kInvalidArgument, "give either --named or --family with --q");
  }
  const ddg::GraphFormat format = ddg::parse_graph_format(a.format);
  const fs::path dir(a.out_dir);
  ordered_json out;
  std::string name;
  ddg::Graph graph;
  ddg::Certificate cert;
  if (a.named) {
    const ddg::NamedCompound id = ddg::parse_named_compound(*a.named);
    const ddg::CompoundRecipe& r = ddg::recipe(id);
    ddg::ConstructOptions opts = ddg::construct_options(c);
    ddg::Construction built = ddg::construct_named(id, opts);
    name = ddg::to_string(id);
    cert = *built.certificate;
    ddg::write_text_file(dir / (name + ".plan.json"), ddg::plan_json(r.base, built.plan) + "\n");
    out["name"] = name;
    out["seed"] = built.plan.seed;
    out["seeds_tried"] = built.seeds_tried;
    out["base"] = {{"family", ddg::to_string(r.base.family)}, {"q", r.base.q}, {"check", built.base_check}};
    out["published_order"] = r.table_order;
    out["conditions"] = ordered_json::object();
    for (const auto& res : built.conditions.results) {
      out["conditions"][std::string(1, res.condition)] = !res.evaluated ? "vacuous" : res.passed ? "pass" : "fail";
    }
    out["obligations"] = {{"max_intra_block", built.obligations.max_intra_block},
                          {"max_cross_block", built.obligations.max_cross_block}};
    if (r.order() != r.table_order) {
      out["flag"] = "computed order " + std::to_string(r.order()) + " differs from published " +
                    std::to_string(r.table_order);
    }
    graph = std::move(built.graph);
  } else {
    if (!a.q) throw ddg::Error(ddg::ErrorCode::kInvalidArgument, "--family needs --q");
    const ddg::MooreSpec spec{ddg::parse_moore_family(*a.family), *a.q};
    ddg::prime_power(spec.q);
    graph = base_graph(spec, c);
    name = ddg::to_string(spec.family) + "-q" + std::to_string(spec.q);
    cert = certify_plain(graph, c, graph.order() <= 10'000);
    out["name"] = name;
    out["expected_order"] = spec.expected_order();
  }
  const fs::path graph_path = dir / (name + extension(format));
  ddg::write_graph_file(graph_path, graph, format);
  ddg::write_text_file(dir / (name + ".cert.json"), ddg::certificate_json(cert) + "\n");
  out["order"] = graph.order();
  out["max_degree"] = cert.max_degree;
  out["diameter"] = cert.diameter;
  out["diameter_method"] = ddg::to_string(cert.diameter_method);
  out["graph_file"] = graph_path.string();
  if (c.output == ddg::OutputFormat::kJson) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << name << ": order " << graph.order() << ", max degree " << cert.max_degree << ", diameter "
              << cert.diameter << " (" << ddg::to_string(cert.diameter_method) << ")\n"
              << "wrote " << graph_path.string() << "\n";
    if (out.contains("flag")) std::cout << "flag: " << out["flag"].get<std::string>() << "\n";
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> degree;
  std::optional<std::uint32_t> diameter;
  bool girth = false;
};

int cmd_verify(const VerifyArgs& a, const ddg::RunConfig& c) {
  std::optional<ddg::GraphFormat> fmt;
  if (a.format) fmt = ddg::parse_graph_format(*a.format);
  const ddg::Graph g = ddg::read_graph_file(a.path, fmt);
  const ddg::Certificate cert = certify_plain(g, c, a.girth);
  std::vector<std::string> failed;
  auto expect = [&](const char* what, std::uint64_t want, std::uint64_t got) {
    if (want != got) {
      failed.push_back(std::string(what) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
    }
  };
  if (a.order) expect("order", *a.order, cert.order);
  if (a.degree) expect("max_degree", *a.degree, cert.max_degree);
  if (a.diameter) expect("diameter", *a.diameter, cert.diameter);
  if (c.output == ddg::OutputFormat::kJson) {
    ordered_json j;
    j["certificate"] = ordered_json::parse(ddg::certificate_json(cert));
    j["passed"] = failed.empty();
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << cert.order << ", degree " << cert.min_degree << ".." << cert.max_degree << ", diameter "
              << cert.diameter << " (" << ddg::to_string(cert.diameter_method) << ")";
    if (cert.girth) std::cout << ", girth " << *cert.girth;
    std::cout << "\n";
    for (const std::string& f : failed) std::cout << "FAILED " << f << "\n";
    if (failed.empty()) std::cout << "all expectations met\n";
  }
  return failed.empty() ? kOk : kFailure;
}

// --- export ---------------------------------------------------------------

struct ExportArgs {
  std::optional<std::string> input;
  std::optional<std::string> named;
  std::optional<std::string> family;
  std::optional<std::uint32_t> q;
  std::string format = "graph6";
  std::optional<std::string> out;
};

int cmd_export(const ExportArgs& a, const ddg::RunConfig& c) {
  const int sources = a.input.has_value() + a.named.has_value() + a.family.has_value();
  if (sources != 1) throw ddg::Error(ddg::ErrorCode::kInvalidArgument, "give one of --input, --named, --family");
  const ddg::GraphFormat format = ddg::parse_graph_format(a.format);
  ddg::Graph g;
  if (a.input) {
    g = ddg::read_graph_file(*a.input);
  } else if (a.named) {
    ddg::ConstructOptions opts = ddg::construct_options(c);
    g = ddg::construct_named(ddg::parse_named_compound(*a.named), opts).graph;
  } else {
    if (!a.q) throw ddg::Error(ddg::ErrorCode::kInvalidArgument, "--family needs --q");
    g = base_graph({ddg::parse_moore_family(*a.family), *a.q}, c);
  }
  const std::string text = ddg::export_graph(g, format);
  if (a.out) {
    ddg::write_text_file(*a.out, text);
  } else {
    std::cout << text;
  }
  return kOk;
}

// --- table ----------------------------------------------------------------

int cmd_table(const std::string& scope, const ddg::RunConfig& c) {
  const bool json = c.output == ddg::OutputFormat::kJson;
  const auto rows = ddg::run_table(ddg::parse_table_scope(scope), c, [&](const ddg::TableEntry& e) {
    if (!json) std::cerr << e.name << ": " << ddg::to_string(e.status) << " (" << static_cast<long>(e.elapsed_ms)
                         << " ms)\n";
  });
  std::cout << (json ? ddg::table_json(rows) + "\n" : ddg::table_text(rows));
  return ddg::table_passed(rows) ? kOk : kFailure;
}

// --- field-debug ----------------------------------------------------------

int cmd_field_debug(std::uint32_t q, const ddg::RunConfig& c) {
  const ddg::Field f = ddg::Field::make(q);
  if (q > 64) throw ddg::Error(ddg::ErrorCode::kInvalidArgument, "tables are printed for q <= 64 only");
  std::vector<std::vector<std::uint32_t>> add(q, std::vector<std::uint32_t>(q));
  auto mul = add;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      add[a][b] = f.add(f.element(a), f.element(b)).index;
      mul[a][b] = f.mul(f.element(a), f.element(b)).index;
    }
  }
  if (c.output == ddg::OutputFormat::kJson) {
    ordered_json j;
    j["q"] = q;
    j["p"] = f.p();
    j["n"] = f.n();
    j["modulus"] = f.modulus_string();
    j["primitive"] = f.primitive().index;
    j["add"] = add;
    j["mul"] = mul;
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "GF(" << q << ") = GF(" << f.p() << ")[x] / (" << f.modulus_string() << "), primitive element "
            << f.primitive().index << "\n";
  auto print = [&](const char* title, const std::vector<std::vector<std::uint32_t>>& t) {
    std::cout << title << "\n";
    for (const auto& row : t) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << "\n";
    }
  };
  print("addition", add);
  print("multiplication", mul);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large (degree, diameter) graphs from generalized polygons"};
  app.require_subcommand(1);
  Flags flags;

  ConstructArgs construct;
  auto* c_cmd = app.add_subcommand("construct", "build and certify a Moore graph or a named compound");
  c_cmd->add_option("--named", construct.named, "Q4K3 H3K3 H4K4 H5K4 H7K6 H8K6 H9K6 H11K6 H13K7");
  c_cmd->add_option("--family", construct.family, "pp, gq or gh");
  c_cmd->add_option("--q", construct.q, "field order");
  c_cmd->add_option("--out-dir", construct.out_dir, "where graph, certificate and plan go");
  c_cmd->add_option("--format", construct.format, "edgelist, dimacs or graph6");
  add_common(c_cmd, flags);

  VerifyArgs verify;
  auto* v_cmd = app.add_subcommand("verify", "recompute a certificate and check expectations");
  v_cmd->add_option("path", verify.path, "graph file")->required();
  v_cmd->add_option("--format", verify.format, "override the format implied by the extension");
  v_cmd->add_option("--expect-order", verify.order);
  v_cmd->add_option("--expect-degree", verify.degree, "expected maximum degree");
  v_cmd->add_option("--expect-diameter", verify.diameter);
  v_cmd->add_flag("--girth", verify.girth, "also compute the girth");
  add_common(v_cmd, flags);

  ExportArgs exp;
  auto* e_cmd = app.add_subcommand("export", "write a graph in another format");
  e_cmd->add_option("--input", exp.input, "graph file to convert");
  e_cmd->add_option("--named", exp.named);
  e_cmd->add_option("--family", exp.family);
  e_cmd->add_option("--q", exp.q);
  e_cmd->add_option("--format", exp.format, "edgelist, dimacs or graph6");
  e_cmd->add_option("--out", exp.out, "output file (default stdout)");
  add_common(e_cmd, flags);

  std::string scope = "fast";
  auto* t_cmd = app.add_subcommand("table", "reproduce the table rows");
  t_cmd->add_option("--scope", scope, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  add_common(t_cmd, flags);

  std::uint32_t field_q = 0;
  auto* f_cmd = app.add_subcommand("field-debug", "print GF(q) addition and multiplication tables");
  f_cmd->add_option("--q", field_q, "field order")->required();
  add_common(f_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ddg::RunConfig config = resolve(flags);
    if (*c_cmd) return cmd_construct(construct, config);
    if (*v_cmd) return cmd_verify(verify, config);
    if (*e_cmd) return cmd_export(exp, config);
    if (*t_cmd) return cmd_table(scope, config);
    if (*f_cmd) return cmd_field_debug(field_q, config);
  } catch (const ddg::Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return kFailure;
  }
  return kUsage;
}
