#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bibucalc/bibundle.hpp"
#include "bibucalc/calculus.hpp"
#include "bibucalc/group.hpp"
#include "bibucalc/simplicial.hpp"

namespace bibu {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Writers. Every map is written as a label-keyed object or a list of label
// triples, never by index.

Json category_to_json(const FinCategory& c);
Json groupoid_to_json(const FinGroupoid& g);
/// Groupoid refs default to inline objects.
Json bibundle_to_json(const Bibundle& M, const Json& left_ref = nullptr, const Json& right_ref = nullptr);
Json hom_to_json(const GroupoidHom& phi, const Json& source_ref = nullptr, const Json& target_ref = nullptr);
Json sset_to_json(const TruncatedSSet& X);
Json witness_to_json(const IsoWitness& W, const Bibundle& A, const Bibundle& B);
Json pairing_to_json(const Bibundle& M, const Pairing& P);
Json report_to_json(const ValidationReport& r);
Json principality_to_json(const PrincipalityReport& r);

/// SHA-256 of a file's bytes, lower-case hex.
std::string sha256_file(const std::filesystem::path& p);
std::string sha256_bytes(const std::string& bytes);

/// Resolves refs (inline objects, relative paths, {"power": ...}) and keeps
/// the digest of every file it reads. Relative paths are tried against the
/// referring file's directory, then against $BIBUCALC_FIXTURES.
class Loader {
 public:
  /// Parsed JSON of a file, recorded in inputs().
  Json read(const std::filesystem::path& p, const std::filesystem::path& base = {});

  FinCategory category(const Json& j);
  /// Validates unless `check` is false; an axiom failure is a StructuralError.
  GroupoidPtr groupoid(const Json& ref, const std::filesystem::path& base = {}, bool check = true);
  Bibundle bibundle(const Json& ref, const std::filesystem::path& base = {});
  GroupoidHom hom(const Json& ref, const std::filesystem::path& base = {});
  TruncatedSSet sset(const Json& ref, const std::filesystem::path& base = {});
  /// {"groupoid": ref, "mu": ref, "e": ref, "i": ref?}
  StackyGroupData stacky(const Json& ref, const std::filesystem::path& base = {});

  /// (path as given, sha256) in first-read order.
  const std::vector<std::pair<std::string, std::string>>& inputs() const { return inputs_; }

 private:
  std::filesystem::path resolve(const std::string& name, const std::filesystem::path& base) const;
  // resolves a string ref to (json, its directory)
  std::pair<Json, std::filesystem::path> deref(const Json& ref, const std::filesystem::path& base);

  std::map<std::string, GroupoidPtr> groupoid_cache_;
  std::vector<std::pair<std::string, std::string>> inputs_;
};

/// Writes pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& p, const Json& j);

}  // namespace bibu
