#pragma once

#include <string>

#include <json.hpp>

#include "wittkit/analytic.hpp"
#include "wittkit/identities.hpp"
#include "wittkit/product.hpp"
#include "wittkit/scan.hpp"
#include "wittkit/series.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

using Json = nlohmann::ordered_json;

// Parses text as JSON; UsageError on syntax errors.
Json parse_json_text(const std::string& text, const char* what);

// {"order": N, "coeffs": ["1", "-1/2", 3, ...]}; missing coefficients are zero.
TruncatedSeries series_from_json(const Json& j);
Json series_to_json(const TruncatedSeries& s);

// {"num": [...], "den": [...]} with ascending integer coefficients.
RationalFunction ratfun_from_json(const Json& j);
Json ratfun_to_json(const RationalFunction& h);

// {"coeffs": [[c(0,0), c(0,1), ...], [c(1,0), ...], ...]} indexed [j][k];
// optional "J" and "K" pad the grid with zeros.
BiSeries biseries_from_json(const Json& j);
Json biseries_to_json(const BiSeries& b);

Json expansion_to_json(const Expansion1D& e);
Json expansion_to_json(const Expansion2D& e);
Json witt_table_to_json(const WittTable& t);
Json identity_report_to_json(const IdentityReport& r);
Json scan_report_to_json(const ScanReport& r);
Json cyclotomic_report_to_json(const CyclotomicReport& r);
Json convergence_report_to_json(const ConvergenceReport& r);
// value rounded to `digits` significant digits, error in scientific form.
Json estimate_to_json(const ProductEstimate& e, int digits);

}  // namespace wittkit
