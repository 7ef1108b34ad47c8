#include "hecke/serialization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hecke/cellular.hpp"

namespace hecke {

std::string to_string(ConfigErrorCode code) {
  switch (code) {
    case ConfigErrorCode::ParseError: return "PARSE_ERROR";
    case ConfigErrorCode::TypeError: return "TYPE_ERROR";
    case ConfigErrorCode::UnknownField: return "UNKNOWN_FIELD";
    case ConfigErrorCode::MissingField: return "MISSING_FIELD";
    case ConfigErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ConfigErrorCode::NotAPermutation: return "NOT_A_PERMUTATION";
    case ConfigErrorCode::InvalidValue: return "INVALID_VALUE";
  }
  return "INVALID_VALUE";
}

ConfigError::ConfigError(ConfigErrorCode code, std::string path, const std::string& message)
    : std::runtime_error(to_string(code) + " at " + (path.empty() ? "/" : path) + ": " + message), code_(code), path_(std::move(path)) {}

namespace {

const std::set<std::string> kConfigFields{"ell", "r", "omega", "c", "xi", "family", "familyA", "familyB", "lambda", "format", "threads"};
const std::set<std::string> kFormats{"json", "csv", "dot"};

long get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(ConfigErrorCode::TypeError, path, "expected an integer");
  return j.get<long>();
}

std::vector<long> get_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(ConfigErrorCode::TypeError, path, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(ConfigErrorCode::TypeError, path, "expected a string");
  return j.get<std::string>();
}

void check_family(const std::optional<std::string>& f, int ell, const std::string& path) {
  if (!f) return;
  try {
    BasisFamily::parse(*f, ell);
  } catch (const std::exception& e) {
    throw ConfigError(ConfigErrorCode::InvalidValue, path, e.what());
  }
}

}  // namespace

void validate_config(const JobConfig& cfg) {
  if (cfg.ell < 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/ell", "must be positive");
  if (cfg.r < 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/r", "must be positive");
  const auto ell = static_cast<std::size_t>(cfg.ell);
  if (cfg.omega.size() != ell) throw ConfigError(ConfigErrorCode::LengthMismatch, "/omega", "length differs from ell");
  if (cfg.c.size() != ell) throw ConfigError(ConfigErrorCode::LengthMismatch, "/c", "length differs from ell");
  for (std::size_t i = 0; i < ell; ++i)
    if (cfg.c[i] != 0 && cfg.c[i] != 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/c/" + std::to_string(i), "entries must be 0 or 1");
  if (cfg.xi.size() != cfg.ell) throw ConfigError(ConfigErrorCode::LengthMismatch, "/xi", "length differs from ell");
  check_family(cfg.family, cfg.ell, "/family");
  check_family(cfg.family_a, cfg.ell, "/familyA");
  check_family(cfg.family_b, cfg.ell, "/familyB");
  if (cfg.lambda && (cfg.lambda->ell() != cfg.ell))
    throw ConfigError(ConfigErrorCode::LengthMismatch, "/lambda", "number of components differs from ell");
  if (!kFormats.count(cfg.format)) throw ConfigError(ConfigErrorCode::InvalidValue, "/format", "expected json, csv or dot");
  if (cfg.threads < 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/threads", "must be positive");
}

JobConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(ConfigErrorCode::ParseError, "", e.what());
  }
  if (!j.is_object()) throw ConfigError(ConfigErrorCode::TypeError, "", "config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!kConfigFields.count(key)) throw ConfigError(ConfigErrorCode::UnknownField, "/" + key, "unknown field");
  for (const char* key : {"ell", "r", "omega"})
    if (!j.contains(key)) throw ConfigError(ConfigErrorCode::MissingField, std::string("/") + key, "required field");

  JobConfig cfg;
  cfg.ell = static_cast<int>(get_int(j["ell"], "/ell"));
  cfg.r = static_cast<int>(get_int(j["r"], "/r"));
  if (cfg.ell < 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/ell", "must be positive");
  cfg.omega = get_int_list(j["omega"], "/omega");
  const auto ell = static_cast<std::size_t>(cfg.ell);
  cfg.c.assign(ell, 0);
  if (j.contains("c")) {
    const auto c = get_int_list(j["c"], "/c");
    cfg.c.assign(c.begin(), c.end());
  }
  cfg.xi = Permutation::identity(cfg.ell);
  if (j.contains("xi")) {
    const auto xi = get_int_list(j["xi"], "/xi");
    if (xi.size() != ell) throw ConfigError(ConfigErrorCode::LengthMismatch, "/xi", "length differs from ell");
    std::vector<int> img;
    for (long v : xi) img.push_back(static_cast<int>(v) - 1);
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw ConfigError(ConfigErrorCode::NotAPermutation, "/xi", "not a permutation of 1..ell");
    cfg.xi = Permutation(img);
  }
  if (j.contains("family")) cfg.family = get_string(j["family"], "/family");
  if (j.contains("familyA")) cfg.family_a = get_string(j["familyA"], "/familyA");
  if (j.contains("familyB")) cfg.family_b = get_string(j["familyB"], "/familyB");
  if (j.contains("lambda")) {
    try {
      cfg.lambda = multipartition_from_json(j["lambda"]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(ConfigErrorCode::TypeError, "/lambda", e.what());
    }
  }
  if (j.contains("format")) cfg.format = get_string(j["format"], "/format");
  if (j.contains("threads")) {
    const long t = get_int(j["threads"], "/threads");
    if (t < 1) throw ConfigError(ConfigErrorCode::InvalidValue, "/threads", "must be positive");
    cfg.threads = static_cast<unsigned>(t);
  }
  validate_config(cfg);
  return cfg;
}

Json config_to_json(const JobConfig& cfg) {
  Json j;
  j["ell"] = cfg.ell;
  j["r"] = cfg.r;
  j["omega"] = cfg.omega;
  j["c"] = cfg.c;
  j["xi"] = cfg.xi.one_based();
  if (cfg.family) j["family"] = *cfg.family;
  if (cfg.family_a) j["familyA"] = *cfg.family_a;
  if (cfg.family_b) j["familyB"] = *cfg.family_b;
  if (cfg.lambda) j["lambda"] = to_json(*cfg.lambda);
  j["format"] = cfg.format;
  j["threads"] = cfg.threads;
  return j;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Multipartition& lambda) {
  Json j = Json::array();
  for (const auto& p : lambda.components()) j.push_back(to_json(p));
  return j;
}

Json to_json(const Tableau& t) {
  Json j = Json::array();
  for (const auto& comp : t.fillings()) j.push_back(Json(comp));
  return j;
}

Json to_json(const ColumnStrictTableau& a) { return Json(a.columns()); }

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const Element& h) {
  Json j = Json::array();
  const HeckeAlgebra* alg = h.algebra();
  for (const auto& [m, coef] : h.terms()) {
    Json t;
    t["a"] = alg->monomial_exponent(m);
    t["w"] = alg->monomial_permutation(m).one_based();
    t["coef"] = to_string(coef);
    j.push_back(std::move(t));
  }
  return j;
}

Json to_json(const ZeroOneTuple& v) {
  Json j;
  j["lo"] = v.window().lo;
  j["hi"] = v.window().hi;
  Json bits = Json::array();
  for (const auto& b : v.bits()) {
    std::string s;
    for (auto x : b) s += static_cast<char>('0' + x);
    bits.push_back(s);
  }
  j["bits"] = std::move(bits);
  return j;
}

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Multipartition multipartition_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("multipartition: expected a non-empty array of arrays");
  std::vector<Partition> comps;
  for (const auto& c : j) comps.emplace_back(int_array(c, "multipartition"));
  return Multipartition(std::move(comps));
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("tableau: expected an array of components");
  std::vector<Tableau::Rows> fill;
  std::vector<Partition> shape;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw std::invalid_argument("tableau: component must be an array of rows");
    Tableau::Rows rows;
    std::vector<int> lens;
    for (const auto& row : comp) {
      rows.push_back(int_array(row, "tableau"));
      lens.push_back(static_cast<int>(rows.back().size()));
    }
    shape.emplace_back(lens);
    fill.push_back(std::move(rows));
  }
  return Tableau(Multipartition(std::move(shape)), std::move(fill));
}

ColumnStrictTableau column_tableau_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("column tableau: expected an array of columns");
  std::vector<std::vector<int>> cols;
  for (const auto& c : j) cols.push_back(int_array(c, "column tableau"));
  return ColumnStrictTableau(std::move(cols));
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_string()) throw std::invalid_argument("matrix: entries must be rational strings");
      m(i, k) = parse_rational(j[i][k].get<std::string>());
    }
  }
  return m;
}

Element element_from_json(const HeckeAlgebra& alg, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element: expected an array of terms");
  Element out = alg.zero();
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("a") || !t.contains("w") || !t.contains("coef") || !t["coef"].is_string())
      throw std::invalid_argument("element: term needs a, w and coef");
    std::vector<int> w = int_array(t["w"], "element");
    out += parse_rational(t["coef"].get<std::string>()) * alg.monomial(int_array(t["a"], "element"), Permutation::from_one_based(w));
  }
  return out;
}

ZeroOneTuple zero_one_tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || !j.contains("bits")) throw std::invalid_argument("01-tuple: needs lo, hi and bits");
  Window w{j["lo"].get<long>(), j["hi"].get<long>()};
  std::vector<std::vector<std::uint8_t>> bits;
  for (const auto& s : j["bits"]) {
    std::vector<std::uint8_t> b;
    for (char ch : s.get<std::string>()) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("01-tuple: bits must be 0 or 1");
      b.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    bits.push_back(std::move(b));
  }
  return ZeroOneTuple(w, std::move(bits));
}

Multipartition parse_multipartition(const std::string& text, int ell) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw std::invalid_argument("label: not valid JSON: " + text);
  }
  const Multipartition m = multipartition_from_json(j);
  if (m.ell() != ell) throw std::invalid_argument("label: expected " + std::to_string(ell) + " components");
  return m;
}

std::string label_text(const Multipartition& lambda) { return to_json(lambda).dump(); }

std::string block_text(const std::map<long, int>& block) {
  std::string out;
  for (const auto& [res, mult] : block) {
    if (!out.empty()) out += ';';
    out += std::to_string(res) + ":" + std::to_string(mult);
  }
  return out;
}

std::string simples_csv(const std::vector<SimplesRow>& rows) {
  std::string out = "lambda,family,dim_S,dim_D,block\n";
  for (const auto& row : rows)
    out += "\"" + label_text(row.label) + "\"," + row.family + "," + std::to_string(row.dim_cell) + "," +
           std::to_string(row.dim_simple) + "," + block_text(row.block) + "\n";
  return out;
}

std::string simples_jsonl(const std::vector<SimplesRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    Json j;
    j["lambda"] = to_json(row.label);
    j["family"] = row.family;
    j["dim_S"] = row.dim_cell;
    j["dim_D"] = row.dim_simple;
    j["block"] = block_text(row.block);
    out += j.dump() + "\n";
  }
  return out;
}

Json match_table_json(const std::vector<SimpleMatch>& matches) {
  Json j = Json::array();
  for (const auto& m : matches) {
    Json e;
    e["from"] = to_json(m.from);
    e["to"] = to_json(m.to);
    e["certified"] = m.intertwiners >= 1;
    j.push_back(std::move(e));
  }
  return j;
}

std::vector<SimpleMatch> match_table_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("match table: expected an array");
  std::vector<SimpleMatch> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to")) throw std::invalid_argument("match table: entry needs from and to");
    const bool certified = e.contains("certified") && e["certified"].is_boolean() && e["certified"].get<bool>();
    out.push_back({multipartition_from_json(e["from"]), multipartition_from_json(e["to"]), certified ? 1u : 0u});
  }
  return out;
}

std::string crystal_dot(const CrystalComponent& comp, const std::vector<int>& c) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
    std::string label = label_text(gamma(comp.vertices[i], c));
    out << "  " << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : comp.edges) out << "  " << e.from << " -> " << e.to << " [label=\"" << e.j << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace hecke
