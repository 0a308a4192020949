#include "wittkit/json_io.hpp"

#include "wittkit/error.hpp"

namespace wittkit {

namespace {

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw UsageError("coefficient must be an integer or a string \"p/q\", got " + v.dump());
}

Integer integer_from_json(const Json& v) {
  Rational q = rational_from_json(v);
  if (!is_integer(q)) throw UsageError("expected an integer, got " + to_string(q));
  return q.get_num();
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_from_json(const Json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long>() < 0) {
    throw UsageError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Integer> integer_list(const Json& v, const char* key) {
  if (!v.is_array()) throw UsageError(std::string("\"") + key + "\" must be an array");
  std::vector<Integer> out;
  for (const auto& c : v) out.push_back(integer_from_json(c));
  return out;
}

Json string_list(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

TruncatedSeries series_from_json(const Json& j) {
  const std::size_t order = size_from_json(require(j, "order"), "order");
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw UsageError("\"coeffs\" must be an array");
  std::vector<Rational> values;
  for (const auto& c : coeffs) values.push_back(rational_from_json(c));
  return TruncatedSeries(order, std::move(values));
}

Json series_to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

RationalFunction ratfun_from_json(const Json& j) {
  RationalFunction h{integer_list(require(j, "num"), "num"), integer_list(require(j, "den"), "den")};
  if (h.den.empty()) throw UsageError("\"den\" must not be empty");
  return h;
}

Json ratfun_to_json(const RationalFunction& h) { return Json{{"num", string_list(h.num)}, {"den", string_list(h.den)}}; }

BiSeries biseries_from_json(const Json& j) {
  const Json& rows = require(j, "coeffs");
  if (!rows.is_array() || rows.empty()) throw UsageError("\"coeffs\" must be a non-empty array of rows");
  std::size_t J = rows.size() - 1, K = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) throw UsageError("each row of \"coeffs\" must be a non-empty array");
    K = std::max(K, row.size() - 1);
  }
  if (j.contains("J")) J = std::max(J, size_from_json(j.at("J"), "J"));
  if (j.contains("K")) K = std::max(K, size_from_json(j.at("K"), "K"));
  BiSeries out(J, K);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows[a].size(); ++b) out.at(a, b) = integer_from_json(rows[a][b]);
  }
  return out;
}

Json biseries_to_json(const BiSeries& b) {
  Json rows = Json::array();
  for (std::size_t j = 0; j <= b.max_j(); ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= b.max_k(); ++k) row.push_back(to_string(b.at(j, k)));
    rows.push_back(row);
  }
  return Json{{"J", b.max_j()}, {"K", b.max_k()}, {"coeffs", rows}};
}

Json expansion_to_json(const Expansion1D& e) {
  Json map = Json::object();
  for (std::size_t n = 1; n <= e.order(); ++n) map[std::to_string(n)] = to_string(e.e(n));
  return Json{{"order", e.order()}, {"exponents", map}};
}

Json expansion_to_json(const Expansion2D& e) {
  Json map = Json::object();
  const BiSeries& g = e.exponents;
  for (std::size_t k = 0; k <= g.max_k(); ++k) {
    for (std::size_t j = 0; j <= g.max_j(); ++j) {
      if ((j == 0 && k == 0) || g.at(j, k) == 0) continue;
      map[std::to_string(j) + "," + std::to_string(k)] = to_string(g.at(j, k));
    }
  }
  return Json{{"J", g.max_j()}, {"K", g.max_k()}, {"exponents", map}};
}

Json witt_table_to_json(const WittTable& t) {
  Json rows = Json::array();
  for (std::int64_t k = 1; k <= t.max_order(); ++k) {
    Json row = Json::array();
    for (const auto& c : t.row(k).coeffs()) row.push_back(to_string(c));
    rows.push_back(row);
  }
  return Json{{"R", t.max_order()}, {"J", t.max_degree()}, {"rows", rows}};
}

Json identity_report_to_json(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json out{{"id", identity_name(r.id)}, {"params", params}, {"pass", r.pass},
           {"lhs", series_to_json(r.lhs)}, {"rhs", series_to_json(r.rhs)}};
  out["first_difference"] = r.first_difference ? Json(*r.first_difference) : Json(nullptr);
  return out;
}

Json scan_report_to_json(const ScanReport& r) {
  Json out{{"family", scan_family_name(r.family)},
           {"bounds", {{"kmax", r.bounds.kmax}, {"rmax", r.bounds.rmax}, {"cmax", r.bounds.cmax}}},
           {"pass", r.pass},
           {"comparisons", r.comparisons}};
  out["violation"] = r.violation ? Json(*r.violation) : Json(nullptr);
  return out;
}

Json cyclotomic_report_to_json(const CyclotomicReport& r) {
  Json out{{"J", r.J}, {"K", r.K}, {"pass", r.pass}, {"lhs", biseries_to_json(r.lhs)}, {"rhs", biseries_to_json(r.rhs)}};
  out["first_difference"] =
      r.first_difference ? Json{r.first_difference->first, r.first_difference->second} : Json(nullptr);
  return out;
}

Json convergence_report_to_json(const ConvergenceReport& r) {
  Json out{{"status", r.status},
           {"constant_term_zero", r.constant_term_zero},
           {"j0", r.j0},
           {"rho_exact", r.rho_exact},
           {"rho_gt_half", r.rho_ok},
           {"g_half_lt_one", r.g_half_ok},
           {"prime_sum_converges", r.prime_sum_ok},
           {"notes", r.notes}};
  out["rho"] = r.rho ? Json(*r.rho) : Json("inf");
  out["g_half"] = r.g_half ? Json(*r.g_half) : Json("inf");
  return out;
}

Json estimate_to_json(const ProductEstimate& e, int digits) {
  return Json{{"value", e.value.to_string(digits)},
              {"error_estimate", e.error.to_string(3)},
              {"terms", e.terms},
              {"heuristic_tail", e.heuristic}};
}

}  // namespace wittkit
