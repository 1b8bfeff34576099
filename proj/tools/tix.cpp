// tix: exact degree-based topological indices of k-subdivision graphs S_k(G)
// and k-semi-total point graphs R_k(G), plus an audit of the published
// closed-form predictions against direct computation.

#include <tix/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct InputOpts {
  std::string input;
  std::string family;
  int size = -1;
  int size2 = -1;
  int r = -1;
  double p = 0.5;
  std::uint64_t seed = 1;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("-i,--input", in.input, "edge-list file: '# comment' lines, optional "
                                          "first line 'n <count>', then 'u v' per edge");
  cmd->add_option("--family", in.family,
                  "generated family: path, cycle, complete, star, complete_bipartite, "
                  "random_regular, erdos_renyi");
  cmd->add_option("--size", in.size, "size parameter (n; leaf count for star)");
  cmd->add_option("--size2", in.size2, "second part size (complete_bipartite)");
  cmd->add_option("--r", in.r, "degree (random_regular)");
  cmd->add_option("--p", in.p, "edge probability (erdos_renyi), default 0.5");
  cmd->add_option("--seed", in.seed, "seed for random families, default 1");
}

std::pair<tix::Graph, std::string> resolve_graph(const InputOpts& in) {
  using namespace tix;
  if (!in.input.empty() && !in.family.empty())
    throw std::invalid_argument("give either --input or --family, not both");
  if (in.input.empty() && in.family.empty())
    throw std::invalid_argument("an input graph is required: --input FILE or --family NAME");
  if (!in.input.empty()) {
    Graph g = load_edge_list_file(in.input);
    auto slash = in.input.find_last_of("/\\");
    std::string base = slash == std::string::npos ? in.input : in.input.substr(slash + 1);
    return {std::move(g), "file(" + base + ")"};
  }
  auto kind = parse_family(in.family);
  if (!kind) throw std::invalid_argument("unknown family '" + in.family + "'");
  if (in.size < 0) throw std::invalid_argument("--size is required with --family");
  FamilySpec spec;
  spec.kind = *kind;
  spec.a = in.size;
  switch (*kind) {
    case FamilyKind::complete_bipartite:
      if (in.size2 < 0) throw std::invalid_argument("--size2 is required for complete_bipartite");
      spec.b = in.size2;
      break;
    case FamilyKind::random_regular:
      if (in.r < 0) throw std::invalid_argument("--r is required for random_regular");
      spec.r = in.r;
      spec.seed = in.seed;
      break;
    case FamilyKind::erdos_renyi:
      spec.p = in.p;
      spec.seed = in.seed;
      break;
    default:
      break;
  }
  return {generate(spec), describe(spec)};
}

tix::OutputFormat resolve_format(const std::string& s) {
  auto f = tix::parse_output_format(s);
  if (!f) throw std::invalid_argument("unknown format '" + s + "' (json, csv, markdown)");
  return *f;
}

const char* kValidIdsHint =
    "valid ids: T2_1..T2_14, CS_REC_1..CS_REC_7, CS_REG_1..CS_REG_7, "
    "CR_REC_1..CR_REC_7, CR_REG_1..CR_REG_7 ('.' and '_' interchangeable)";

int run_indices(const InputOpts& in, const std::string& format) {
  auto [g, label] = resolve_graph(in);
  for (const auto& w : tix::index_warnings(g)) std::cerr << "warning: " << w << "\n";
  if (!tix::is_connected(g)) std::cerr << "warning: graph is disconnected\n";
  std::cout << tix::render_indices(g, label, resolve_format(format));
  return 0;
}

int run_transform(const InputOpts& in, const std::string& kind, int k,
                  const std::string& output) {
  auto [g, label] = resolve_graph(in);
  auto t = tix::parse_transform(kind);
  if (!t) throw std::invalid_argument("unknown transform '" + kind + "' (use sk or rk)");
  tix::Graph derived = tix::apply_transform(g, {*t, k});
  std::string text = tix::serialize_edge_list(derived);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + output + "'");
    f << text;
  }
  return 0;
}

int run_verify(const InputOpts& in, const std::string& formula, int k,
               const std::string& format) {
  auto [g, label] = resolve_graph(in);
  if (!tix::is_connected(g))
    throw std::invalid_argument("verify requires a connected graph");
  auto id = tix::parse_formula_id(formula);
  if (!id)
    throw std::invalid_argument("unknown formula id '" + formula + "'; " + kValidIdsHint);
  tix::VerificationRecord rec = tix::verify_formula(*id, g, k, label);
  switch (resolve_format(format)) {
    case tix::OutputFormat::json:
      std::cout << tix::record_to_json(rec).dump(2) << "\n";
      break;
    case tix::OutputFormat::csv:
      std::cout << tix::render_records_csv({rec});
      break;
    case tix::OutputFormat::markdown:
      std::cout << tix::render_records_markdown({rec});
      break;
  }
  return rec.match ? 0 : 1;
}

struct AuditOpts {
  InputOpts in;  // in.seed doubles as the suite seed
  std::string formulas = "all";
  std::string families;
  int k_max = 4;
  int k_min = -1;  // unset
  std::string report_path;
  std::string format = "json";
};

int run_audit_cmd(const AuditOpts& opts) {
  using namespace tix;
  SuiteSpec suite;
  suite.seed = opts.in.seed;
  bool single = !opts.in.input.empty() || !opts.in.family.empty();
  if (single && !opts.families.empty())
    throw std::invalid_argument("--families filters the default suite; it cannot be combined "
                                "with --input/--family");
  if (single) {
    auto [g, label] = resolve_graph(opts.in);
    if (!is_connected(g)) throw std::invalid_argument("audit requires connected graphs");
    suite.cases.push_back({std::move(label), std::move(g)});
  } else {
    suite.cases = default_cases(opts.in.seed, &suite.notes);
    if (!opts.families.empty()) {
      std::vector<std::string> wanted;
      std::size_t pos = 0;
      while (pos <= opts.families.size()) {
        auto comma = opts.families.find(',', pos);
        std::string tok = opts.families.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? opts.families.size() + 1 : comma + 1;
        if (tok.empty()) continue;
        auto kind = parse_family(tok);
        if (!kind) throw std::invalid_argument("unknown family '" + tok + "' in --families");
        wanted.push_back(family_name(*kind) + "(");
      }
      std::vector<GraphCase> kept;
      for (auto& gc : suite.cases)
        for (const auto& prefix : wanted)
          if (gc.label.rfind(prefix, 0) == 0) {
            kept.push_back(std::move(gc));
            break;
          }
      suite.cases = std::move(kept);
    }
  }
  suite.formulas = parse_formula_set(opts.formulas);
  if (suite.formulas.empty()) throw std::invalid_argument("--formulas selected nothing");
  if (opts.k_max < 0) throw std::invalid_argument("--kmax must be >= 0");
  suite.k_max = opts.k_max;
  if (opts.k_min >= 0) {
    if (opts.k_min > opts.k_max) throw std::invalid_argument("--kmin exceeds --kmax");
    suite.k_lo = opts.k_min;
  }

  AuditReport rep = run_audit(suite);
  std::cout << render_summary_table(rep);
  if (!opts.report_path.empty()) {
    std::ofstream f(opts.report_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + opts.report_path + "'");
    f << render_report(rep, resolve_format(opts.format));
  }
  return rep.mismatches > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree-based topological indices of S_k(G) and R_k(G), "
               "with an audit of the published closed forms"};
  app.require_subcommand(1);

  InputOpts idx_in;
  std::string idx_format = "json";
  auto* idx = app.add_subcommand("indices", "compute M1, M2, F, PI1, PI2, HM, SDD exactly");
  add_input_options(idx, idx_in);
  idx->add_option("--format", idx_format, "json, csv, or markdown (default json)");

  InputOpts tr_in;
  std::string tr_kind;
  int tr_k = 0;
  std::string tr_out = "-";
  auto* tr = app.add_subcommand("transform", "construct S_k(G) or R_k(G) as an edge list");
  add_input_options(tr, tr_in);
  tr->add_option("--kind", tr_kind, "sk (subdivision) or rk (semi-total point)")->required();
  tr->add_option("--k", tr_k, "number of new vertices per edge, k >= 0")->required();
  tr->add_option("-o,--output", tr_out, "output file, '-' for stdout (default)");

  InputOpts vf_in;
  std::string vf_formula;
  int vf_k = 0;
  std::string vf_format = "json";
  auto* vf = app.add_subcommand("verify", "check one closed form on one graph at one k");
  add_input_options(vf, vf_in);
  vf->add_option("--formula", vf_formula, "formula id, e.g. T2_14 or cs_rec.3")->required();
  vf->add_option("--k", vf_k, "level k")->required();
  vf->add_option("--format", vf_format, "json, csv, or markdown (default json)");

  AuditOpts au;
  auto* auc = app.add_subcommand("audit", "evaluate a formula set over a graph suite and "
                                          "report exact mismatches");
  add_input_options(auc, au.in);
  auc->add_option("--formulas", au.formulas,
                  "comma-separated ids or ranges, e.g. 'T2_1..T2_14,CS_REG_3' (default all)");
  auc->add_option("--families", au.families,
                  "restrict the default suite to these families (comma-separated)");
  auc->add_option("--kmax", au.k_max, "largest k to audit (default 4)");
  auc->add_option("--kmin", au.k_min,
                  "audit every formula from this k upward; rows below a formula's own k_min "
                  "are marked applicable=false and excluded from summaries");
  auc->add_option("--report", au.report_path, "write the full report to this file");
  auc->add_option("--format", au.format, "report file format: json, csv, markdown");

  std::string cat_format = "json";
  auto* cat = app.add_subcommand("catalog", "list every formula with its metadata");
  cat->add_option("--format", cat_format, "json, csv, or markdown (default json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(idx)) return run_indices(idx_in, idx_format);
    if (app.got_subcommand(tr)) return run_transform(tr_in, tr_kind, tr_k, tr_out);
    if (app.got_subcommand(vf)) return run_verify(vf_in, vf_formula, vf_k, vf_format);
    if (app.got_subcommand(auc)) return run_audit_cmd(au);
    if (app.got_subcommand(cat)) {
      std::cout << tix::render_catalog(resolve_format(cat_format));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
