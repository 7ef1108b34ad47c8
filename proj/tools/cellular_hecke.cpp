#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hecke/algebra.hpp"
#include "hecke/cellular.hpp"
#include "hecke/crystal.hpp"
#include "hecke/label_maps.hpp"
#include "hecke/parallel.hpp"
#include "hecke/serialization.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string config_file;
  std::optional<int> ell, r, depth;
  std::optional<long> lo;
  std::string omega, c, xi, family, family_a, family_b, lambda, format;
  std::optional<unsigned> threads;
  bool dot = false;
  std::vector<std::string> suites;
};

std::vector<long> parse_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + flag + ": expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

JobConfig assemble(const Flags& f) {
  JobConfig cfg;
  bool have_omega = false;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw UsageError("cannot read config file " + f.config_file);
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config(buf.str());
    have_omega = true;
  }
  if (f.ell) cfg.ell = *f.ell;
  if (f.r) cfg.r = *f.r;
  if (!f.omega.empty()) {
    cfg.omega = parse_list(f.omega, "omega");
    have_omega = true;
  }
  if (!have_omega) cfg.omega.assign(static_cast<std::size_t>(std::max(cfg.ell, 1)), 0);
  if (!f.c.empty()) {
    cfg.c.clear();
    for (long v : parse_list(f.c, "c")) cfg.c.push_back(static_cast<int>(v));
  } else if (cfg.c.size() != static_cast<std::size_t>(cfg.ell)) {
    cfg.c.assign(static_cast<std::size_t>(std::max(cfg.ell, 1)), 0);
  }
  if (!f.xi.empty()) {
    std::vector<int> img;
    for (long v : parse_list(f.xi, "xi")) img.push_back(static_cast<int>(v) - 1);
    try {
      cfg.xi = Permutation(img);
    } catch (const std::invalid_argument&) {
      throw ConfigError(ConfigErrorCode::NotAPermutation, "/xi", "not a permutation of 1..ell");
    }
  } else if (cfg.xi.size() != cfg.ell) {
    cfg.xi = Permutation::identity(std::max(cfg.ell, 1));
  }
  if (!f.family.empty()) cfg.family = f.family;
  if (!f.family_a.empty()) cfg.family_a = f.family_a;
  if (!f.family_b.empty()) cfg.family_b = f.family_b;
  if (!f.lambda.empty()) {
    try {
      cfg.lambda = parse_multipartition(f.lambda, cfg.ell);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
  }
  if (!f.format.empty()) cfg.format = f.format;
  if (f.threads) cfg.threads = *f.threads;
  validate_config(cfg);
  return cfg;
}

void progress(const std::string& msg) { std::cerr << "cellular-hecke: " << msg << "\n"; }

std::shared_ptr<const HeckeAlgebra> build_algebra(const JobConfig& cfg) {
  progress("building H_{" + std::to_string(cfg.ell) + "," + std::to_string(cfg.r) + "}");
  try {
    return HeckeAlgebra::create(cfg.ell, cfg.r, cfg.omega);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

BasisFamily family_of(const std::optional<std::string>& text, const JobConfig& cfg, const char* flag) {
  if (!text) {
    if (std::string(flag) == "family") return BasisFamily::M(cfg.c);
    throw UsageError(std::string("--") + flag + " is required");
  }
  return BasisFamily::parse(*text, cfg.ell);
}

std::map<long, int> block_weight_of(const CellModule& cm, const std::vector<long>& omega) {
  const auto blocks = block_of(cm.action, omega);
  if (blocks.empty()) return {};
  return block_weight(blocks.begin()->first);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_list(const JobConfig& cfg) {
  const auto labels = enumerate_multipartitions(cfg.ell, cfg.r);
  std::size_t total = 0;
  if (cfg.format == "csv") {
    std::cout << "lambda,tableaux\n";
    for (const auto& l : labels) std::cout << "\"" << label_text(l) << "\"," << standard_tableaux(l).size() << "\n";
    return 0;
  }
  Json j;
  j["ell"] = cfg.ell;
  j["r"] = cfg.r;
  Json rows = Json::array();
  for (const auto& l : labels) {
    const std::size_t n = standard_tableaux(l).size();
    total += n * n;
    rows.push_back({{"lambda", to_json(l)}, {"tableaux", n}});
  }
  j["labels"] = rows;
  j["multipartitions"] = labels.size();
  j["sum_of_squares"] = total;
  print(j);
  return 0;
}

int run_check_basis(const JobConfig& cfg) {
  const auto alg = build_algebra(cfg);
  const auto rel = check_relations(*alg);
  const auto assoc = check_associativity(*alg, 200, 1);
  const bool ok = verify_basis(*alg);
  Json j;
  j["ell"] = cfg.ell;
  j["r"] = cfg.r;
  j["omega"] = cfg.omega;
  j["dimension"] = alg->dimension();
  j["relations"] = rel ? *rel : "ok";
  j["associativity"] = assoc ? *assoc : "ok";
  j["verified"] = ok;
  print(j);
  return ok ? 0 : 1;
}

int run_gram(const JobConfig& cfg) {
  if (!cfg.lambda) throw UsageError("gram needs --lambda");
  const auto alg = build_algebra(cfg);
  const CellularBasis basis(alg, family_of(cfg.family, cfg, "family"));
  const CellModule cm = cell_module(basis, *cfg.lambda);
  Json j;
  j["family"] = basis.family().to_string();
  j["lambda"] = to_json(cm.label);
  Json b = Json::array();
  for (const auto& t : cm.basis) b.push_back(to_json(t));
  j["basis"] = b;
  j["gram"] = to_json(cm.gram);
  j["rank"] = simple_dim(cm);
  print(j);
  return 0;
}

std::vector<SimplesRow> simples_rows(const CellularBasis& basis, const JobConfig& cfg) {
  const auto& labels = basis.labels();
  return parallel_map(labels.size(), cfg.threads, [&](std::size_t i) {
    const CellModule cm = cell_module(basis, labels[i]);
    return SimplesRow{cm.label, basis.family().to_string(), cm.basis.size(), simple_dim(cm), block_weight_of(cm, cfg.omega)};
  });
}

int run_simples(const JobConfig& cfg) {
  const auto alg = build_algebra(cfg);
  const CellularBasis basis(alg, family_of(cfg.family, cfg, "family"));
  progress("computing " + std::to_string(basis.labels().size()) + " cell modules");
  const auto rows = simples_rows(basis, cfg);
  std::cout << (cfg.format == "csv" ? simples_csv(rows) : simples_jsonl(rows));
  return 0;
}

int run_blocks(const JobConfig& cfg) {
  const auto alg = build_algebra(cfg);
  const CellularBasis basis(alg, family_of(cfg.family, cfg, "family"));
  const auto rows = simples_rows(basis, cfg);
  std::map<std::string, std::vector<const SimplesRow*>> groups;
  for (const auto& row : rows) groups[block_text(row.block)].push_back(&row);
  Json out = Json::array();
  for (const auto& [key, members] : groups) {
    Json labels = Json::array();
    std::size_t simples = 0;
    for (const auto* m : members) {
      labels.push_back(to_json(m->label));
      if (m->dim_simple > 0) ++simples;
    }
    out.push_back({{"block", key}, {"labels", labels}, {"nonzero_simples", simples}});
  }
  print(out);
  return 0;
}

int run_crystal(const JobConfig& cfg, const Flags& f) {
  const int depth = f.depth ? *f.depth : cfg.r;
  if (depth < 0) throw UsageError("--depth must be nonnegative");
  const auto comp = component_of_empty(cfg.omega, depth);
  if (f.dot || cfg.format == "dot") {
    std::cout << crystal_dot(comp, std::vector<int>(cfg.omega.size(), 0));
    return 0;
  }
  Json j;
  j["window"] = {{"lo", comp.window.lo}, {"hi", comp.window.hi}};
  j["orientation"] = to_string(comp.orientation);
  Json vs = Json::array();
  for (std::size_t i = 0; i < comp.vertices.size(); ++i)
    vs.push_back({{"id", i}, {"depth", comp.depth[i]}, {"tuple", to_json(comp.vertices[i])},
                  {"gamma", to_json(gamma(comp.vertices[i], std::vector<int>(cfg.omega.size(), 0)))}});
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : comp.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"j", e.j}});
  j["edges"] = es;
  Json labels = Json::array();
  for (const auto& l : nonzero_labels(cfg.omega, depth)) labels.push_back(to_json(l));
  j["nonzero_labels"] = labels;
  print(j);
  return 0;
}

int run_mullineux(const JobConfig& cfg, const Flags& f) {
  if (!cfg.lambda) throw UsageError("mullineux needs --lambda");
  const Multipartition& lambda = *cfg.lambda;
  std::optional<XiContext> ctx;
  try {
    ctx = f.lo ? XiContext(cfg.omega, cfg.xi, *f.lo) : XiContext::for_size(cfg.omega, cfg.xi, std::max(lambda.size(), 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j;
  j["lambda"] = to_json(lambda);
  j["omega"] = cfg.omega;
  j["xi"] = cfg.xi.one_based();
  j["lo"] = ctx->lo();
  const ColumnStrictTableau a = A_of_lambda(lambda, *ctx);
  j["A"] = to_json(a);
  j["gamma"] = gamma_word(a);
  const auto word = gamma_word(a);
  j["P"] = rsk_insert(word);
  const bool standard = is_standard(a, *ctx);
  j["standard"] = standard;
  if (standard) {
    const ColumnStrictTableau ra = r_map(a, *ctx);
    j["R"] = to_json(ra);
    j["mu"] = to_json(lambda_of_A(ra, ctx->untwisted()));
  } else {
    j["mu"] = nullptr;
  }
  print(j);
  return 0;
}

int run_match(const JobConfig& cfg) {
  const auto alg = build_algebra(cfg);
  const CellularBasis a(alg, family_of(cfg.family_a, cfg, "familyA"));
  const CellularBasis b(alg, family_of(cfg.family_b, cfg, "familyB"));
  progress("matching " + a.family().to_string() + " against " + b.family().to_string());
  const auto table = match_simples(a, b, cfg.threads);
  print(match_table_json(table));
  return 0;
}

int run_verify(const JobConfig& cfg, const Flags& f) {
  std::vector<std::string> names = f.suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) throw UsageError("unknown suite: " + n);
  const auto alg = build_algebra(cfg);
  VerifyOptions opts;
  opts.threads = cfg.threads;
  if (!f.c.empty()) opts.twists = {cfg.c};
  if (!f.xi.empty()) opts.xi = cfg.xi;
  bool all_pass = true;
  Json out = Json::array();
  for (const auto& n : names) {
    progress("suite " + n);
    SuiteResult res;
    try {
      res = run_suite(n, alg, opts);
    } catch (const std::invalid_argument& e) {
      throw UsageError(n + ": " + e.what());
    }
    all_pass = all_pass && res.pass;
    Json j;
    j["suite"] = res.name;
    j["pass"] = res.pass;
    if (res.skipped) j["skipped"] = true;
    j["details"] = res.details;
    if (!res.pass) j["counterexample"] = res.counterexample;
    out.push_back(std::move(j));
  }
  print(out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with degenerate cyclotomic Hecke algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config_file, "JSON config file");
  app.add_option("--ell", f.ell, "number of cyclotomic parameters");
  app.add_option("--r", f.r, "rank");
  app.add_option("--omega", f.omega, "parameters, e.g. 0,1");
  app.add_option("--c", f.c, "01-sequence, e.g. 0,1");
  app.add_option("--xi", f.xi, "permutation of 1..ell, e.g. 2,1");
  app.add_option("--family", f.family, "m|n|mxi|nxi, optionally with :c or :xi");
  app.add_option("--familyA", f.family_a, "first family for match");
  app.add_option("--familyB", f.family_b, "second family for match");
  app.add_option("--lambda", f.lambda, "multipartition, e.g. [[2],[1]]");
  app.add_option("--format", f.format, "json|csv|dot");
  app.add_option("--threads", f.threads, "worker threads");
  app.add_option("--depth", f.depth, "crystal depth (default r)");
  app.add_option("--lo", f.lo, "base point for mullineux heights");
  app.add_flag("--dot", f.dot, "crystal as DOT");

  const std::vector<std::pair<const char*, const char*>> verbs{
      {"list", "multipartitions and tableau counts"}, {"check-basis", "verify the normal-form basis"},
      {"gram", "Gram matrix of one cell module"},    {"simples", "table of cell and simple dimensions"},
      {"blocks", "labels grouped by block"},         {"crystal", "component of the empty label"},
      {"mullineux", "the R map on one label"},       {"match", "isomorphisms between two simple families"},
      {"verify", "run verification suites"}};
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : verbs) sub[name] = app.add_subcommand(name, help);
  sub["verify"]->add_option("suites", f.suites, "relations|trace|pairing|cellular|main1|main2|duality|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const JobConfig cfg = assemble(f);
    if (*sub["list"]) return run_list(cfg);
    if (*sub["check-basis"]) return run_check_basis(cfg);
    if (*sub["gram"]) return run_gram(cfg);
    if (*sub["simples"]) return run_simples(cfg);
    if (*sub["blocks"]) return run_blocks(cfg);
    if (*sub["crystal"]) return run_crystal(cfg, f);
    if (*sub["mullineux"]) return run_mullineux(cfg, f);
    if (*sub["match"]) return run_match(cfg);
    if (*sub["verify"]) return run_verify(cfg, f);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
