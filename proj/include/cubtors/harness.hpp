#pragma once

// Catalog of the paper's fields, curves and families, and the runner that
// re-verifies its claims.

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubtors/torsion.hpp"

namespace cubtors::harness {

using json = nlohmann::json;

struct FieldRecord {
  std::string label;
  std::vector<long> poly;  // low degree first, monic cubic
  Integer field_disc;
  std::string galois;
  std::string provenance;
  FieldRef field;
};

struct CurveRecord {
  std::string label;
  /// "Q" or a field label.
  std::string base;
  std::optional<QCurve> over_q;
  std::optional<KCurve> over_k;
  std::optional<json> marked_point;
  std::optional<std::pair<long, long>> expected_torsion;
  std::string notes;
  std::string provenance;
};

struct FamilyRecord {
  std::string label;
  /// a1, a2, a3, a4, a6 as polynomials in t.
  std::array<QPoly, 5> a;
  /// (prime, residues of t) pairs at which good reduction is asserted.
  std::vector<std::pair<std::uint64_t, std::vector<long>>> reduction_checks;
  std::string provenance;
  WeierstrassCurve<QPoly> generic() const;
  QCurve at(const Rational& t) const;
};

struct ClaimRecord {
  std::string id;
  std::string kind;
  json inputs;
  json expected;
  std::string paper_ref;
};

struct Catalog {
  std::vector<FieldRecord> fields;
  std::vector<CurveRecord> curves;
  std::vector<FamilyRecord> families;
  std::vector<ClaimRecord> claims;
  std::map<std::string, std::string> provenance;
  std::vector<std::string> notes;

  const FieldRecord& field(const std::string& label) const;
  const CurveRecord& curve(const std::string& label) const;
  const FamilyRecord& family(const std::string& label) const;
  const ClaimRecord* claim(const std::string& id) const;
  /// Quote text behind a provenance key.
  std::string quote(const std::string& key) const;
};

/// Parses and validates eagerly. Throws SchemaError or ValidationError.
Catalog load_manifest_text(const std::string& text);
Catalog load_manifest_file(const std::string& path);
Catalog load_default_manifest();
const std::string& default_manifest_text();

/// The claim kinds the runner understands.
const std::vector<std::string>& claim_kinds();

/// Parsing helpers for manifest values.
Rational parse_rational(const json& v);
FieldElement parse_element(const json& v, const FieldRef& k);
QPoly parse_poly(const json& v);

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct ClaimReport {
  std::string id;
  std::string kind;
  Status status = Status::Inconclusive;
  json expected;
  json computed;
  double runtime_ms = 0;
  std::string paper_ref;
};

struct RunConfig {
  std::vector<std::string> ids;  // empty = all
  double timeout_s = 120;
  int jobs = 1;
  bool deterministic = false;
  TorsionConfig torsion{};
};

struct RunResult {
  std::vector<ClaimReport> reports;
  /// Claims whose worker thread was abandoned after a timeout and may still
  /// be running; the process should exit without joining them.
  bool abandoned_workers = false;
};

/// Runs one claim synchronously, without a timeout.
ClaimReport run_claim(const Catalog& catalog, const ClaimRecord& claim, const RunConfig& config);

/// Runs the selected claims, sorted by id. Throws std::out_of_range for an
/// unknown id.
RunResult run_claims(const Catalog& catalog, const RunConfig& config);

/// 0 all pass, 1 any fail, 2 no fail but some inconclusive.
int exit_code(const std::vector<ClaimReport>& reports);

json reports_to_json(const std::vector<ClaimReport>& reports);
std::string reports_to_text(const std::vector<ClaimReport>& reports);

/// Natural order on claim ids: alphabetic prefix, then the numeric suffix.
bool claim_id_less(const std::string& a, const std::string& b);

}  // namespace cubtors::harness
