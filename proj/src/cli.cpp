#include "tconj/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tconj/specs.hpp"
#include "tconj/torusfixed.hpp"
#include "tconj/twisted.hpp"
#include "tconj/verify.hpp"

namespace tconj {

namespace {

using nlohmann::ordered_json;

ordered_json matrix_json(const ModMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

Family parse_family_flag(const std::string& type) {
  if (type.size() != 1) throw InvalidArgument("--type expects a single letter A..G, got '" + type + "'");
  return family_from_char(type[0]);
}

struct CliConfig {
  std::optional<std::string> cache_dir;
  std::size_t cap = kDefaultEnumerationCap;
};

int run_roots(const std::string& type, int rank) {
  RootSystem rs(parse_family_flag(type), rank);
  ordered_json cartan = ordered_json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(std::move(row));
  }
  ordered_json roots = ordered_json::array();
  for (const RootVec& r : rs.roots()) roots.push_back(r);
  ordered_json gamma = ordered_json::array();
  for (const auto& rho : diagram_automorphisms(rs)) gamma.push_back(rho.cycles());
  emit({{"schema", 1},
        {"root_system", rs.name()},
        {"rank", rs.rank()},
        {"cartan", std::move(cartan)},
        {"n_roots", rs.n_roots()},
        {"n_positive", rs.n_positive()},
        {"roots", std::move(roots)},
        {"gamma", std::move(gamma)}});
  return 0;
}

int run_gamma(const std::string& type, int rank) {
  RootSystem rs(parse_family_flag(type), rank);
  const auto autos = diagram_automorphisms(rs);
  ordered_json elements = ordered_json::array();
  for (const auto& rho : autos) elements.push_back(rho.cycles());
  emit({{"schema", 1},
        {"root_system", rs.name()},
        {"order", autos.size()},
        {"elements", std::move(elements)}});
  return 0;
}

int run_group_build(const std::string& family, int rank, const std::string& form,
                    const std::string& classical, int n, std::int64_t p, const CliConfig& cfg) {
  if (family.empty() == classical.empty())
    throw InvalidArgument("group build needs exactly one of --family or --classical");
  std::string spec;
  if (!family.empty()) {
    spec = family + ":" + std::to_string(rank) + ":" + std::to_string(p) + ":" + form;
  } else if (classical == "B2") {
    spec = "B2:" + std::to_string(p);
  } else {
    spec = classical + ":" + std::to_string(n) + ":" + std::to_string(p);
  }
  const ParsedGroup pg = parse_group_spec(spec, cfg.cache_dir);
  emit({{"schema", 1},
        {"label", pg.group->label()},
        {"order", pg.group->order(cfg.cap)},
        {"generators", pg.group->generators().size()}});
  return 0;
}

int run_reidemeister(const std::string& group_spec, const std::string& phi_spec,
                     const CliConfig& cfg) {
  const ParsedGroup pg = parse_group_spec(group_spec, cfg.cache_dir);
  pg.group->elements(cfg.cap);  // enforce --cap before validation enumerates
  const Automorphism phi = parse_phi_spec(phi_spec, pg);
  const TwistedPartition part = reidemeister(phi, cfg.cap);
  ordered_json classes = ordered_json::array();
  for (const TwistedClass& c : part.classes)
    classes.push_back({{"rep", matrix_json(c.rep.m)}, {"size", c.size}});
  emit({{"schema", 1},
        {"group", pg.group->label()},
        {"order", pg.group->order(cfg.cap)},
        {"phi", phi.describe()},
        {"r", part.reidemeister_number()},
        {"classes", std::move(classes)}});
  return 0;
}

int run_torus_fixed(const std::string& type, int rank, const std::string& rho_text, std::int64_t p,
                    const CliConfig& cfg) {
  RootSystem rs(parse_family_flag(type), rank);
  const DiagramAutomorphism rho = diagram_automorphism_from_cycles(rs, rho_text);
  auto cb = chevalley_basis(rs, cfg.cache_dir);
  const TorusFixedReport rep = case_witness(rs, rho, cb, p);
  emit({{"schema", 1},
        {"root_system", rep.root_system},
        {"rho", rep.rho},
        {"d", rep.d},
        {"case", rep.kind == WitnessKind::CaseI ? "I" : "II"},
        {"witness_simple_node", rep.witness_simple + 1},
        {"p", rep.p},
        {"fixed_for_all_t", rep.fixed_for_all_t},
        {"nontrivial", rep.nontrivial},
        {"detail", rep.detail}});
  return rep.d >= 1 && rep.fixed_for_all_t && rep.nontrivial ? 0 : 1;
}

int run_solve_unipotent(std::int64_t p, const std::vector<std::int64_t>& d,
                        const std::vector<std::int64_t>& g_entries) {
  const int n = static_cast<int>(d.size());
  if (n < 2) throw InvalidArgument("--d needs at least two diagonal entries");
  const std::size_t upper = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (g_entries.size() != upper)
    throw InvalidArgument("--g needs the " + std::to_string(upper) +
                          " strictly upper entries in row-major order, got " +
                          std::to_string(g_entries.size()));
  ModMatrix dm(n, p);
  for (int i = 0; i < n; ++i) dm.set(i, i, d[i]);
  ModMatrix gm = ModMatrix::identity(n, p);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gm.set(i, j, g_entries[k++]);
  const GroupElement y = solve_unipotent(dm, gm);
  emit({{"schema", 1},
        {"p", p},
        {"d", d},
        {"g", matrix_json(gm)},
        {"y", matrix_json(y.m)},
        {"verified", true}});
  return 0;
}

int run_verify(const std::string& suite, const std::string& format, std::uint64_t seed,
               const std::string& type, int rank, std::int64_t p, const CliConfig& cfg) {
  VerifyOptions options;
  options.seed = seed;
  options.cache_dir = cfg.cache_dir;
  if (!type.empty()) options.family = parse_family_flag(type);
  if (rank > 0) options.rank = rank;
  if (p > 0) options.p = p;
  const std::vector<CheckResult> results = run_suite(suite, options);
  std::size_t failed = 0;
  for (const CheckResult& r : results)
    if (!r.pass) ++failed;
  if (format == "json")
    emit(report_json(suite, options, results));
  else if (format == "csv")
    std::cout << report_csv(results);
  else
    throw InvalidArgument("unknown --format '" + format + "' (expected json or csv)");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int cli_main(std::vector<std::string> args) {
  CLI::App app{"twisted conjugacy toolkit for Chevalley and classical groups over GF(p)"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag,
                 "structure-constant cache directory (default: TC_CACHE_DIR)");
  app.add_option("--cap", cfg.cap, "group enumeration cap");

  std::string type;
  int rank = 0;
  auto* roots = app.add_subcommand("roots", "print a root system");
  roots->add_option("--type", type, "family letter A..G")->required();
  roots->add_option("--rank", rank, "rank")->required();

  auto* gamma = app.add_subcommand("gamma", "print the diagram automorphism group");
  gamma->add_option("--type", type, "family letter A..G")->required();
  gamma->add_option("--rank", rank, "rank")->required();

  auto* group = app.add_subcommand("group", "group constructions");
  group->require_subcommand(1);
  std::string family, form = "adjoint", classical;
  int n = 0;
  std::int64_t p = 0;
  auto* build = group->add_subcommand("build", "build a group and print its size");
  build->add_option("--family", family, "root-system family letter A..G");
  build->add_option("--rank", rank, "root-system rank");
  build->add_option("--form", form, "adjoint or unipotent");
  build->add_option("--classical", classical, "GL, SL, PSL, U, D or B2");
  build->add_option("--n", n, "matrix size for classical kinds");
  build->add_option("--p", p, "field characteristic")->required();

  std::string group_spec, phi_spec;
  auto* reid = app.add_subcommand("reidemeister", "twisted conjugacy classes of an automorphism");
  reid->add_option("--group", group_spec, "group spec, e.g. SL:2:3 or A:2:3:adjoint")->required();
  reid->add_option("--phi", phi_spec, "automorphism spec, e.g. identity or diag-inverse")->required();

  std::string rho_text;
  auto* torus = app.add_subcommand("torus-fixed", "fixed-torus dimension and witness");
  torus->add_option("--type", type, "family letter A..G")->required();
  torus->add_option("--rank", rank, "rank")->required();
  torus->add_option("--rho", rho_text, "diagram automorphism cycles, e.g. (1 2)")->required();
  torus->add_option("--p", p, "field characteristic")->required();

  std::vector<std::int64_t> d_entries, g_entries;
  auto* solve = app.add_subcommand("solve-unipotent", "solve y g = d y d^{-1} for unitriangular y");
  solve->add_option("--p", p, "field characteristic")->required();
  solve->add_option("--d", d_entries, "diagonal entries of d")->required()->delimiter(',');
  solve->add_option("--g", g_entries, "strictly upper entries of g, row-major")
      ->required()
      ->delimiter(',');

  std::string suite, format = "json";
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "chevalley-relations, lemmas, paper-examples or all")
      ->required();
  verify->add_option("--format", format, "json or csv");
  verify->add_option("--seed", seed, "seed for sampled trials");
  verify->add_option("--type", type, "restrict the relations sweep: family letter");
  verify->add_option("--rank", rank, "restrict the relations sweep: rank");
  verify->add_option("--p", p, "restrict the relations sweep: characteristic");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!cache_dir_flag.empty()) {
    cfg.cache_dir = cache_dir_flag;
  } else if (const char* env = std::getenv("TC_CACHE_DIR"); env && *env) {
    cfg.cache_dir = std::string(env);
  }

  try {
    if (*roots) return run_roots(type, rank);
    if (*gamma) return run_gamma(type, rank);
    if (*build) return run_group_build(family, rank, form, classical, n, p, cfg);
    if (*reid) return run_reidemeister(group_spec, phi_spec, cfg);
    if (*torus) return run_torus_fixed(type, rank, rho_text, p, cfg);
    if (*solve) return run_solve_unipotent(p, d_entries, g_entries);
    if (*verify) return run_verify(suite, format, seed, type, rank, p, cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(std::move(args));
}

}  // namespace tconj
