#include "liecoh/json_io.hpp"

#include <optional>
#include <string>

namespace liecoh {

namespace {

std::size_t index_in_range(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "index must be an integer");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n) {
    throw ParseError(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(i - 1);
}

Rational coefficient(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(where, "coefficient must be a string \"p\" or \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

std::optional<std::size_t> parse_index_key(const std::string& key, std::size_t n) {
  if (key.empty() || key.size() > 9) return std::nullopt;
  std::size_t value = 0;
  for (char c : key) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value < 1 || value > n) return std::nullopt;
  return value - 1;
}

}  // namespace

StructureTable parse_structure_table(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "document must be a JSON object");

  StructureTable table;
  if (!doc.contains("dim")) throw ParseError("/dim", "missing");
  const Json& dim = doc["dim"];
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    throw ParseError("/dim", "must be a positive integer");
  }
  table.dim = dim.get<std::size_t>();
  const std::size_t n = table.dim;

  if (doc.contains("basis")) {
    const Json& basis = doc["basis"];
    if (!basis.is_array() || basis.size() != n) {
      throw ParseError("/basis", "must be an array of " + std::to_string(n) + " strings");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!basis[i].is_string()) throw ParseError("/basis/" + std::to_string(i), "must be a string");
      table.basis_names.push_back(basis[i].get<std::string>());
    }
  }

  if (doc.contains("brackets")) {
    const Json& brackets = doc["brackets"];
    if (!brackets.is_array()) throw ParseError("/brackets", "must be an array");
    for (std::size_t e = 0; e < brackets.size(); ++e) {
      const std::string at = "/brackets/" + std::to_string(e);
      const Json& b = brackets[e];
      if (!b.is_object()) throw ParseError(at, "must be an object");
      for (const char* key : {"i", "j", "coeffs"}) {
        if (!b.contains(key)) throw ParseError(at + "/" + key, "missing");
      }
      BracketEntry entry{index_in_range(b["i"], n, at + "/i"), index_in_range(b["j"], n, at + "/j"),
                         Vector(n)};
      if (entry.i == entry.j) throw ParseError(at, "i and j must differ");
      const Json& coeffs = b["coeffs"];
      if (!coeffs.is_object()) throw ParseError(at + "/coeffs", "must be an object");
      for (const auto& [key, value] : coeffs.items()) {
        const std::string where = at + "/coeffs/" + key;
        const auto k = parse_index_key(key, n);
        if (!k) throw ParseError(where, "key must be a basis index 1.." + std::to_string(n));
        entry.coeffs[*k] = coefficient(value, where);
      }
      table.brackets.push_back(std::move(entry));
    }
  }
  return table;
}

LieAlgebra parse_algebra(std::string_view text) { return LieAlgebra::create(parse_structure_table(text)); }

Json rational_to_json(const Rational& q) { return q.get_str(); }

Json one_form_to_json(const OneForm& w) {
  Json arr = Json::array();
  for (const auto& q : w.coeffs) arr.push_back(rational_to_json(q));
  return arr;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  Json brackets = Json::array();
  for (const BracketEntry& b : g.table().brackets) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
      if (b.coeffs[k] != 0) coeffs[std::to_string(k + 1)] = rational_to_json(b.coeffs[k]);
    }
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  return doc;
}

Json form_to_json(const ExteriorForm& f) {
  Json terms = Json::array();
  for (const auto& [t, q] : f.terms()) {
    Json indices = Json::array();
    for (std::size_t i : t) indices.push_back(i + 1);
    terms.push_back({{"indices", indices}, {"coeff", rational_to_json(q)}});
  }
  return terms;
}

Json cohomology_to_json(const CohomologyResult& r, bool with_representatives) {
  Json doc;
  doc["omega"] = one_form_to_json(r.omega);
  doc["betti"] = r.betti;
  doc["euler_characteristic"] = euler_characteristic(r);
  if (with_representatives) {
    Json reps = Json::array();
    for (const auto& degree : r.representatives) {
      Json list = Json::array();
      for (const auto& f : degree) list.push_back(form_to_json(f));
      reps.push_back(list);
    }
    doc["representatives"] = reps;
  }
  return doc;
}

Json weights_to_json(const WeightData& w) {
  Json doc;
  doc["closed_block"] = w.closed_block;
  Json basis = Json::array();
  for (std::size_t c = 0; c < w.adapted_change.cols(); ++c) {
    basis.push_back(one_form_to_json(OneForm(w.adapted_change.column(c))));
  }
  doc["adapted_basis"] = basis;
  Json weights = Json::array();
  for (const auto& a : w.weights) weights.push_back(one_form_to_json(a));
  doc["weights"] = weights;
  doc["weight_sum_zero"] = weight_sum_check(w);
  return doc;
}

Json omega_set_to_json(const OmegaSet& s) {
  Json arr = Json::array();
  for (const auto& f : s.elements) arr.push_back(one_form_to_json(f));
  return arr;
}

Json scan_to_json(const ScanTable& t) {
  Json doc;
  doc["direction"] = one_form_to_json(t.direction);
  Json crit = Json::array();
  for (const auto& l : t.critical_lambdas) crit.push_back(rational_to_json(l));
  doc["critical_lambdas"] = crit;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"lambda", rational_to_json(row.lambda)}, {"betti", row.betti}, {"generic", row.generic}});
  }
  doc["rows"] = rows;
  return doc;
}

Json novikov_to_json(const NovikovReport& r) {
  Json doc;
  doc["omega"] = one_form_to_json(r.omega);
  doc["lambda"] = rational_to_json(r.lambda);
  doc["betti"] = r.betti;
  doc["morse_counts"] = r.morse_counts;
  Json verdicts = Json::array();
  for (Verdict v : r.verdicts) verdicts.push_back(v == Verdict::holds ? "holds" : "violated");
  doc["verdicts"] = verdicts;
  doc["all_hold"] = r.all_hold();
  doc["critical"] = r.critical ? Json(*r.critical) : Json(nullptr);
  doc["notes"] = r.notes;
  return doc;
}

}  // namespace liecoh
