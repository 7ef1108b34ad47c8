#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hecke/algebra.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/crystal.hpp"
#include "hecke/label_maps.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

enum class ConfigErrorCode { ParseError, TypeError, UnknownField, MissingField, LengthMismatch, NotAPermutation, InvalidValue };

/// "PARSE_ERROR", "UNKNOWN_FIELD", ...
std::string to_string(ConfigErrorCode code);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorCode code, std::string path, const std::string& message);
  ConfigErrorCode code() const { return code_; }
  /// JSON-pointer style location, e.g. "/omega/1".
  const std::string& path() const { return path_; }

 private:
  ConfigErrorCode code_;
  std::string path_;
};

/// A validated job description. omega, c and xi all have length ell; xi is stored 0-based.
struct JobConfig {
  int ell = 1;
  int r = 1;
  std::vector<long> omega{0};
  std::vector<int> c{0};
  Permutation xi = Permutation::identity(1);
  std::optional<std::string> family;
  std::optional<std::string> family_a;
  std::optional<std::string> family_b;
  std::optional<Multipartition> lambda;
  std::string format = "json";
  unsigned threads = 1;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Parses and validates a JSON config. Fields: ell, r, omega (required); c, xi (1-based),
/// family, familyA, familyB, lambda, format, threads (optional). Throws ConfigError.
JobConfig parse_config(const std::string& text);
/// Checks the cross-field invariants of an assembled config. Throws ConfigError.
void validate_config(const JobConfig& config);
Json config_to_json(const JobConfig& config);

Json to_json(const Partition& p);
Json to_json(const Multipartition& lambda);
/// One array of rows per component.
Json to_json(const Tableau& t);
/// Columns, each read top-down.
Json to_json(const ColumnStrictTableau& a);
/// Rows of "p/q" strings.
Json to_json(const Matrix& m);
/// [{"a": [...], "w": [1-based images], "coef": "p/q"}, ...] in monomial order.
Json to_json(const Element& h);
Json to_json(const ZeroOneTuple& v);

/// The inverse maps; each throws std::invalid_argument on malformed input.
Multipartition multipartition_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
ColumnStrictTableau column_tableau_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Element element_from_json(const HeckeAlgebra& alg, const Json& j);
ZeroOneTuple zero_one_tuple_from_json(const Json& j);

/// Parses "[[2],[1]]"-style label text.
Multipartition parse_multipartition(const std::string& text, int ell);
/// Compact one-line rendering of a multipartition, e.g. [[2,1],[]].
std::string label_text(const Multipartition& lambda);

/// One row of a simples table.
struct SimplesRow {
  Multipartition label;
  std::string family;
  std::size_t dim_cell = 0;
  std::size_t dim_simple = 0;
  /// Residue content: residue -> multiplicity.
  std::map<long, int> block;
};

/// "-1:1;0:2" style rendering of a residue content.
std::string block_text(const std::map<long, int>& block);

std::string simples_csv(const std::vector<SimplesRow>& rows);
/// One JSON object per line.
std::string simples_jsonl(const std::vector<SimplesRow>& rows);

/// [{"from": ..., "to": ..., "certified": true}, ...]
Json match_table_json(const std::vector<SimpleMatch>& matches);
std::vector<SimpleMatch> match_table_from_json(const Json& j);

/// Nodes numbered 0.. in breadth-first order and labeled by their gamma image (JSON),
/// edges labeled by j.
std::string crystal_dot(const CrystalComponent& component, const std::vector<int>& c);

}  // namespace hecke
