#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cubtors/harness.hpp"

extern const char* cubtors_default_manifest_data();

namespace cubtors::harness {

namespace {

// Table 1 of the paper, the reference every manifest's K1..K7 must match.
struct TableRow {
  const char* label;
  long c0, c1, c2;
  long disc;
  const char* galois;
};
constexpr TableRow kTable1[] = {
    {"K1", 1, 0, -1, -23, "S3"},  {"K2", -1, 1, 0, -31, "S3"}, {"K3", 1, 1, -1, -44, "S3"},
    {"K4", 1, -2, -1, 49, "C3"},  {"K5", -1, 2, 0, -59, "S3"}, {"K6", -2, -2, 0, -76, "S3"},
    {"K7", -1, -3, 0, 81, "C3"},
};

[[noreturn]] void schema(const std::string& where, const std::string& why) {
  throw SchemaError(where + ": " + why);
}

[[noreturn]] void invalid(const std::string& label, const std::string& why) {
  throw ValidationError(label + ": " + why);
}

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema(where, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) schema(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer n;
    if (n.set_str(v.get<std::string>(), 10) != 0) schema(where, "bad integer '" + v.get<std::string>() + "'");
    return n;
  }
  schema(where, "expected an integer");
}

FieldRecord parse_field(const json& j) {
  FieldRecord r;
  r.label = need_string(j, "label", "field");
  const std::string where = "field " + r.label;
  const json& poly = need(j, "poly", where);
  if (!poly.is_array() || poly.size() != 4) schema(where, "poly must list 4 coefficients");
  for (const auto& c : poly) {
    if (!c.is_number_integer()) schema(where, "poly coefficients must be integers");
    r.poly.push_back(c.get<long>());
  }
  if (r.poly[3] != 1) invalid(r.label, "defining polynomial must be monic");
  r.field_disc = json_integer(need(j, "field_disc", where), where);
  r.galois = need_string(j, "galois", where);
  r.provenance = j.value("provenance", "");
  try {
    r.field = CubicField::make({Integer(r.poly[0]), Integer(r.poly[1]), Integer(r.poly[2])}, r.field_disc, r.label);
  } catch (const Error& e) {
    invalid(r.label, e.what());
  }
  if (to_string(r.field->galois()) != r.galois)
    invalid(r.label, "galois type " + r.galois + " but computed " + to_string(r.field->galois()));
  for (const auto& row : kTable1) {
    if (r.label != row.label) continue;
    if (r.poly[0] != row.c0 || r.poly[1] != row.c1 || r.poly[2] != row.c2)
      invalid(r.label, "polynomial differs from Table 1");
    if (r.field_disc != row.disc) invalid(r.label, "discriminant differs from Table 1 (" + std::to_string(row.disc) + ")");
    if (r.galois != row.galois) invalid(r.label, "galois type differs from Table 1");
  }
  return r;
}

template <class F>
std::optional<CurvePoint<F>> parse_point(const json& v, const std::string& where, auto&& parse_coord) {
  if (v.is_null()) return std::nullopt;
  if (v.is_string() && v.get<std::string>() == "infinity") return CurvePoint<F>::infinity();
  if (!v.is_array() || v.size() != 2) schema(where, "a point is [x, y] or \"infinity\"");
  return CurvePoint<F>(parse_coord(v[0]), parse_coord(v[1]));
}

CurveRecord parse_curve(const json& j, const Catalog& cat) {
  CurveRecord r;
  r.label = need_string(j, "label", "curve");
  const std::string where = "curve " + r.label;
  r.base = need_string(j, "base", where);
  r.notes = j.value("notes", "");
  r.provenance = j.value("provenance", "");
  const json& a = need(j, "a", where);
  if (!a.is_array() || a.size() != 5) schema(where, "a must list a1, a2, a3, a4, a6");
  try {
    if (r.base == "Q") {
      std::array<Rational, 5> c;
      for (int i = 0; i < 5; ++i) c[i] = parse_rational(a[i]);
      r.over_q.emplace(RationalsTag{}, c);
      if (j.contains("marked_point")) {
        auto P = parse_point<Rational>(j["marked_point"], where, [](const json& v) { return parse_rational(v); });
        if (P && !r.over_q->on_curve(*P)) invalid(r.label, "marked point " + P->to_string() + " is not on the curve");
      }
    } else {
      FieldRef k = cat.field(r.base).field;
      std::vector<FieldElement> c;
      for (int i = 0; i < 5; ++i) c.push_back(parse_element(a[i], k));
      r.over_k.emplace(k, std::array<FieldElement, 5>{c[0], c[1], c[2], c[3], c[4]});
      if (j.contains("marked_point")) {
        auto P = parse_point<FieldElement>(j["marked_point"], where, [&](const json& v) { return parse_element(v, k); });
        if (P && !r.over_k->on_curve(*P)) invalid(r.label, "marked point " + P->to_string() + " is not on the curve");
      }
    }
  } catch (const SingularCurve&) {
    invalid(r.label, "singular curve (discriminant 0)");
  } catch (const std::out_of_range&) {
    invalid(r.label, "unknown base field '" + r.base + "'");
  } catch (const ParseError& e) {
    schema(where, e.what());
  }
  if (j.contains("marked_point")) r.marked_point = j["marked_point"];
  if (j.contains("expected_torsion")) {
    const json& t = j["expected_torsion"];
    if (!t.is_array() || t.size() != 2) schema(where, "expected_torsion is [n1, n2]");
    r.expected_torsion = std::make_pair(t[0].get<long>(), t[1].get<long>());
  }
  return r;
}

FamilyRecord parse_family(const json& j) {
  FamilyRecord r;
  r.label = need_string(j, "label", "family");
  const std::string where = "family " + r.label;
  r.provenance = j.value("provenance", "");
  const json& a = need(j, "a", where);
  if (!a.is_array() || a.size() != 5) schema(where, "a must list a1, a2, a3, a4, a6");
  try {
    for (int i = 0; i < 5; ++i) r.a[i] = parse_poly(a[i]);
    (void)r.generic();
  } catch (const SingularCurve&) {
    invalid(r.label, "generic member is singular");
  } catch (const ParseError& e) {
    schema(where, e.what());
  }
  if (j.contains("reduction_checks")) {
    for (const auto& c : j["reduction_checks"]) {
      auto p = need(c, "prime", where).get<std::uint64_t>();
      std::vector<long> res = need(c, "residues", where).get<std::vector<long>>();
      if (!zp::is_prime(p)) invalid(r.label, "reduction check at non-prime " + std::to_string(p));
      auto fp = FiniteField::prime_field(p);
      for (long t : res) {
        try {
          (void)reduce_curve(r.at(Rational(t)), fp);
        } catch (const Error& e) {
          invalid(r.label, "bad reduction at p=" + std::to_string(p) + " for t=" + std::to_string(t) + " (" + e.kind() + ")");
        }
      }
      r.reduction_checks.emplace_back(p, std::move(res));
    }
  }
  return r;
}

// Every label a claim mentions must exist in the catalog.
void check_claim_labels(const ClaimRecord& c, const Catalog& cat) {
  auto check = [&](const char* key, auto&& lookup) {
    if (!c.inputs.contains(key)) return;
    const json& v = c.inputs[key];
    auto one = [&](const json& s) {
      if (!s.is_string()) schema("claim " + c.id, std::string("'") + key + "' must name labels");
      try {
        lookup(s.get<std::string>());
      } catch (const std::out_of_range&) {
        invalid(c.id, std::string("unknown ") + key + " '" + s.get<std::string>() + "'");
      }
    };
    if (v.is_array())
      for (const auto& s : v) one(s);
    else
      one(v);
  };
  auto f = [&](const std::string& l) { (void)cat.field(l); };
  auto cu = [&](const std::string& l) { (void)cat.curve(l); };
  auto fa = [&](const std::string& l) { (void)cat.family(l); };
  check("field", f);
  check("fields", f);
  check("curve", cu);
  check("curves", cu);
  check("family", fa);
  check("families", fa);
}

}  // namespace

WeierstrassCurve<QPoly> FamilyRecord::generic() const { return WeierstrassCurve<QPoly>(RationalsTag{}, a); }

QCurve FamilyRecord::at(const Rational& t) const {
  std::array<Rational, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = a[i].eval(t);
  return QCurve(RationalsTag{}, c);
}

const FieldRecord& Catalog::field(const std::string& label) const {
  for (const auto& f : fields)
    if (f.label == label) return f;
  throw std::out_of_range("unknown field '" + label + "'");
}

const CurveRecord& Catalog::curve(const std::string& label) const {
  for (const auto& c : curves)
    if (c.label == label) return c;
  throw std::out_of_range("unknown curve '" + label + "'");
}

const FamilyRecord& Catalog::family(const std::string& label) const {
  for (const auto& f : families)
    if (f.label == label) return f;
  throw std::out_of_range("unknown family '" + label + "'");
}

const ClaimRecord* Catalog::claim(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

std::string Catalog::quote(const std::string& key) const {
  auto it = provenance.find(key);
  return it == provenance.end() ? std::string() : it->second;
}

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

FieldElement parse_element(const json& v, const FieldRef& k) {
  if (!v.is_array()) return k->element(parse_rational(v));
  if (v.size() != 3) throw ParseError("field element must be [c0, c1, c2]");
  return k->element(parse_rational(v[0]), parse_rational(v[1]), parse_rational(v[2]));
}

QPoly parse_poly(const json& v) {
  if (!v.is_array()) throw ParseError("polynomial must be an array of coefficients, low degree first");
  std::vector<Rational> c;
  for (const auto& x : v) c.push_back(parse_rational(x));
  return QPoly(RationalsTag{}, std::move(c));
}

const std::vector<std::string>& claim_kinds() {
  static const std::vector<std::string> kinds = {
      "disc-equals",      "galois-equals",   "torsion-equals", "point-order",    "has-order",
      "count-equals",     "structure-equals", "divides-exactly", "degree-cert",   "no-y-lift",
      "root-in-field",    "infinite-order",  "sylow-stable",   "frobenius-consistent",
      // sweeps and the interpolation check
      "interp-degree",    "hasse-sweep",     "weil-sweep",     "injection"};
  return kinds;
}

Catalog load_manifest_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("manifest", "top level must be an object");
  if (!doc.contains("schema") || doc["schema"] != 1) schema("manifest", "\"schema\": 1 required");
  for (const char* key : {"fields", "curves", "families", "claims"})
    if (!doc.contains(key) || !doc[key].is_array()) schema("manifest", std::string("missing array '") + key + "'");

  Catalog cat;
  try {
    if (doc.contains("provenance"))
      for (auto& [k, v] : doc["provenance"].items()) cat.provenance[k] = v.get<std::string>();
    if (doc.contains("notes"))
      for (const auto& n : doc["notes"]) cat.notes.push_back(n.get<std::string>());

    std::set<std::string> seen;
    auto unique = [&](const std::string& kind, const std::string& label) {
      if (!seen.insert(kind + ":" + label).second) invalid(label, "duplicate " + kind + " label");
    };
    for (const auto& j : doc["fields"]) {
      cat.fields.push_back(parse_field(j));
      unique("field", cat.fields.back().label);
    }
    for (const auto& j : doc["curves"]) {
      cat.curves.push_back(parse_curve(j, cat));
      unique("curve", cat.curves.back().label);
    }
    for (const auto& j : doc["families"]) {
      cat.families.push_back(parse_family(j));
      unique("family", cat.families.back().label);
    }
    const auto& kinds = claim_kinds();
    for (const auto& j : doc["claims"]) {
      ClaimRecord c;
      c.id = need_string(j, "id", "claim");
      c.kind = need_string(j, "kind", "claim " + c.id);
      c.inputs = j.value("inputs", json::object());
      c.expected = need(j, "expected", "claim " + c.id);
      c.paper_ref = need_string(j, "paper_ref", "claim " + c.id);
      if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end()) invalid(c.id, "unknown claim kind '" + c.kind + "'");
      if (!cat.provenance.count(c.paper_ref)) invalid(c.id, "paper_ref '" + c.paper_ref + "' has no provenance entry");
      unique("claim", c.id);
      check_claim_labels(c, cat);
      cat.claims.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("manifest: ") + e.what());
  }
  std::sort(cat.claims.begin(), cat.claims.end(),
            [](const ClaimRecord& a, const ClaimRecord& b) { return claim_id_less(a.id, b.id); });
  return cat;
}

Catalog load_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read manifest '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_manifest_text(ss.str());
}

const std::string& default_manifest_text() {
  static const std::string text = cubtors_default_manifest_data();
  return text;
}

Catalog load_default_manifest() { return load_manifest_text(default_manifest_text()); }

bool claim_id_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    long n = i < j ? std::stol(s.substr(i, j - i)) : -1;
    return std::make_tuple(s.substr(0, i), n, s.substr(j));
  };
  return split(a) < split(b);
}

}  // namespace cubtors::harness
