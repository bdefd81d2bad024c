#include "regembed/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "regembed/autgroup.hpp"
#include "regembed/coherent.hpp"
#include "regembed/errors.hpp"
#include "regembed/graph_io.hpp"
#include "regembed/isometry.hpp"
#include "regembed/multigraph.hpp"
#include "regembed/predistance.hpp"
#include "regembed/report.hpp"
#include "regembed/spectral.hpp"
#include "regembed/twin_reduce.hpp"

namespace regembed {

namespace {

constexpr int kDefaultGroupMaxN = 12;
constexpr int kDefaultSpectralMaxN = 500;

struct Args {
  std::string input;
  std::string predistance = "adjacency";
  std::string custom_path;
  std::string shift = "low";
  double tol = 1e-6;
  double group_tol = kDefaultGroupTolFactor;
  std::string out_path;
  std::string format = "json";
  int max_n = 0;  // 0 keeps the per-command default cap
  double perturb = 0;
  bool perturb_given = false;
  bool matrices = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Multigraph load_graph(const Args& a) { return parse_multigraph(read_file(a.input)); }

int group_cap(const Args& a) { return a.max_n > 0 ? a.max_n : kDefaultGroupMaxN; }

void check_spectral_cap(const Args& a, int n) {
  int cap = a.max_n > 0 ? a.max_n : kDefaultSpectralMaxN;
  if (n > cap)
    throw SizeCapError("graph order " + std::to_string(n) + " exceeds the size cap " +
                       std::to_string(cap) + " (raise it with --max-n)");
}

AutomorphismOptions group_options(const Args& a) {
  AutomorphismOptions opts;
  opts.max_n = group_cap(a);
  return opts;
}

SymMatrix parse_custom_matrix(const std::string& text, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("custom predistance file " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw ValidationError("custom predistance must be a JSON array of rows");
  const auto n = doc.size();
  Eigen::MatrixXd m(static_cast<int>(n), static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (!doc[i].is_array() || doc[i].size() != n)
      throw ValidationError("custom predistance row " + std::to_string(i + 1) +
                            " does not make the matrix square");
    for (size_t j = 0; j < n; ++j) {
      if (!doc[i][j].is_number())
        throw ValidationError("custom predistance entry (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ") is not a number");
      m(static_cast<int>(i), static_cast<int>(j)) = doc[i][j].get<double>();
    }
  }
  return SymMatrix::from_symmetric(m);
}

Predistance load_predistance(const Multigraph& g, const Args& a) {
  Predistance p;
  if (!a.custom_path.empty()) {
    if (a.predistance != "adjacency" && a.predistance != "custom")
      throw ValidationError("--custom-predistance conflicts with --predistance " + a.predistance);
    SymMatrix m = parse_custom_matrix(read_file(a.custom_path), a.custom_path);
    if (m.n() != g.order())
      throw ValidationError("custom predistance is " + std::to_string(m.n()) + "x" +
                            std::to_string(m.n()) + " but the graph has " +
                            std::to_string(g.order()) + " vertices");
    p = make_custom_predistance(m);
  } else {
    auto kind = predistance_kind_from_string(a.predistance);
    if (!kind) throw ValidationError("unknown predistance kind: " + a.predistance);
    if (*kind == PredistanceKind::custom)
      throw ValidationError("--predistance custom requires --custom-predistance PATH");
    p = build_predistance(g, *kind);
  }
  if (a.perturb_given) {
    if (a.custom_path.empty())
      throw ValidationError("--perturb applies only to --custom-predistance matrices");
    p = perturb_reconstructing(p, g, a.perturb);
  }
  return p;
}

ShiftMode parse_shift(const Args& a) {
  return a.shift == "high" ? ShiftMode::high : ShiftMode::low;
}

void emit(const Args& a, const std::string& text, std::ostream& out) {
  if (a.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot write output file: " + a.out_path);
  file << text;
  if (!file) throw ValidationError("failed writing output file: " + a.out_path);
}

int cmd_reduce(const Args& a, std::ostream& out) {
  Multigraph g = load_graph(a);
  Partition p = twin_decomposition(g);
  Multigraph q = quotient(g, p);
  AutOrderFactorization f = factorize_aut_order(g, group_options(a));
  emit(a, twin_json(p, q, f), out);
  return 0;
}

int cmd_spectrum(const Args& a, std::ostream& out) {
  Multigraph g = load_graph(a);
  check_spectral_cap(a, g.order());
  Predistance p = load_predistance(g, a);
  SpectralProfile prof = spectral_profile(bilinear_form(p.matrix), a.group_tol);
  emit(a, profile_json(prof, zeta(p, a.group_tol)), out);
  return 0;
}

int cmd_embed(const Args& a, std::ostream& out) {
  Multigraph g = load_graph(a);
  check_spectral_cap(a, g.order());
  Predistance p = load_predistance(g, a);
  Embedding emb = embed(p, parse_shift(a), a.group_tol);
  if (a.format == "csv")
    emit(a, embedding_csv(emb), out);
  else if (a.format == "json")
    emit(a, embedding_json(emb), out);
  else
    throw ValidationError("embed emits json or csv, not " + a.format);
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
  Multigraph g = load_graph(a);
  Predistance p = load_predistance(g, a);
  Embedding emb = embed(p, parse_shift(a), a.group_tol);
  IsometryOptions opts;
  opts.max_n = group_cap(a);
  opts.tol_factor = a.tol;
  RegularityCertificate cert = verify_regular(g, p, emb, opts);
  emit(a, certificate_json(cert), out);
  return cert.groups_equal ? 0 : 1;
}

int cmd_wl(const Args& a, std::ostream& out) {
  Multigraph g = load_graph(a);
  check_spectral_cap(a, g.order());
  emit(a, basis_json(coherent_basis(g), a.matrices), out);
  return 0;
}

int cmd_report(const Args& a, std::ostream& out) {
  if (a.format == "csv") throw ValidationError("report emits json or text, not csv");
  Multigraph g = load_graph(a);
  RunReport r;
  r.input_name = a.input;
  r.n = g.order();
  for (const auto& e : g.edge_list()) {
    ++r.distinct_edges;
    r.total_multiplicity += e[2];
  }
  r.simple = g.is_simple();
  GraphMetrics metrics = graph_metrics(g);
  r.connected = metrics.connected;
  r.degrees = metrics.degrees;

  r.twin = twin_decomposition(g);
  r.irreducible = is_irreducible(g);
  const bool group_ok = g.order() <= group_cap(a);
  if (group_ok) {
    try {
      r.factorization = factorize_aut_order(g, group_options(a));
    } catch (const SizeCapError& e) {
      r.factorization_note = std::string("skipped: ") + e.what();
    }
  } else {
    r.factorization_note =
        "skipped: graph order exceeds the group-enumeration cap " + std::to_string(group_cap(a));
  }

  Predistance p = load_predistance(g, a);
  r.kind = p.kind;
  ReconstructingCheck rc = check_reconstructing(p, g);
  r.reconstructing = rc.ok;
  r.xi = rc.xi;
  if (group_ok) {
    try {
      r.commuting = check_commuting(p, g, group_options(a)).ok;
    } catch (const SizeCapError&) {
    }
  }

  const int spectral_limit = a.max_n > 0 ? a.max_n : kDefaultSpectralMaxN;
  if (g.order() <= spectral_limit) {
    r.adjacency_spectrum = grouped_spectrum(adjacency_matrix(g), a.group_tol);
    r.profile = spectral_profile(bilinear_form(p.matrix), a.group_tol);
    r.zeta_value = zeta(p, a.group_tol);
    ShiftMode mode = parse_shift(a);
    r.embedding = embed(p, mode, a.group_tol);
    ReducedPredistance reduced = reduce_predistance(p, mode, a.group_tol);
    SymMatrix reproduced = squared_distance_matrix(r.embedding->points);
    r.max_reproduction_error = (reproduced.mat() - reduced.pstar.mat()).cwiseAbs().maxCoeff();
  }

  if (!r.irreducible) {
    r.certificate_note = "skipped: the graph is reducible, certificates require an irreducible one";
  } else if (!group_ok) {
    r.certificate_note =
        "skipped: graph order exceeds the group-enumeration cap " + std::to_string(group_cap(a));
  } else if (!r.embedding) {
    r.certificate_note = "skipped: no embedding was computed";
  } else {
    IsometryOptions opts;
    opts.max_n = group_cap(a);
    opts.tol_factor = a.tol;
    try {
      r.certificate = verify_regular(g, p, *r.embedding, opts);
    } catch (const SizeCapError& e) {
      r.certificate_note = std::string("skipped: ") + e.what();
    }
  }

  emit(a, render_report(r, a.format == "text" ? ReportFormat::text : ReportFormat::json), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular Euclidean embeddings of twin-free multigraphs"};
  app.require_subcommand(1);
  Args a;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", a.input, "graph file, edge list or JSON")->required();
    cmd->add_option("--out", a.out_path, "write the result here instead of stdout");
    cmd->add_option("--max-n", a.max_n, "replace the default size cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_predistance = [&](CLI::App* cmd) {
    cmd->add_option("--predistance", a.predistance, "predistance kind (default adjacency)")
        ->check(CLI::IsMember({"adjacency", "complement_indicator", "graph_distance",
                               "czekanovski_dice", "q_distance", "custom"}));
    cmd->add_option("--custom-predistance", a.custom_path,
                    "JSON file with a square symmetric zero-diagonal matrix");
    cmd->add_option("--group-tol", a.group_tol, "eigenvalue grouping tolerance factor")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--perturb", a.perturb,
                    "add eps * adjacency to a custom matrix to make it reconstructing; "
                    "0 picks eps automatically")
        ->expected(0, 1);
  };
  auto add_shift = [&](CLI::App* cmd) {
    cmd->add_option("--shift", a.shift, "spectral shift mode (default low)")
        ->check(CLI::IsMember({"low", "high"}));
  };

  CLI::App* reduce = app.add_subcommand("reduce", "twin decomposition, quotient, |Aut| factors");
  add_input(reduce);
  CLI::App* spectrum = app.add_subcommand("spectrum", "bilinear-form profile and zeta");
  add_input(spectrum);
  add_predistance(spectrum);
  CLI::App* embed_cmd = app.add_subcommand("embed", "point configuration realizing the shifted predistance");
  add_input(embed_cmd);
  add_predistance(embed_cmd);
  add_shift(embed_cmd);
  embed_cmd->add_option("--format", a.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::App* verify = app.add_subcommand("verify", "regularity certificate; exit 0 iff the groups match");
  add_input(verify);
  add_predistance(verify);
  add_shift(verify);
  verify->add_option("--tol", a.tol, "isometry tolerance factor (default 1e-6)")
      ->check(CLI::PositiveNumber);
  CLI::App* wl = app.add_subcommand("wl", "coherent algebra basis summary");
  add_input(wl);
  wl->add_flag("--matrices", a.matrices, "include the basis matrices");
  CLI::App* report = app.add_subcommand("report", "full pipeline in one document");
  add_input(report);
  add_predistance(report);
  add_shift(report);
  report->add_option("--tol", a.tol, "isometry tolerance factor (default 1e-6)")
      ->check(CLI::PositiveNumber);
  report->add_option("--format", a.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  a.perturb_given = spectrum->count("--perturb") || embed_cmd->count("--perturb") ||
                    verify->count("--perturb") || report->count("--perturb");

  try {
    if (app.got_subcommand(reduce)) return cmd_reduce(a, out);
    if (app.got_subcommand(spectrum)) return cmd_spectrum(a, out);
    if (app.got_subcommand(embed_cmd)) return cmd_embed(a, out);
    if (app.got_subcommand(verify)) return cmd_verify(a, out);
    if (app.got_subcommand(wl)) return cmd_wl(a, out);
    if (app.got_subcommand(report)) return cmd_report(a, out);
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace regembed
