#include "wittkit/cli.hpp"

#include <CLI11.hpp>

#include "wittkit/analytic.hpp"
#include "wittkit/batteries.hpp"
#include "wittkit/error.hpp"
#include "wittkit/identities.hpp"
#include "wittkit/json_io.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/product.hpp"
#include "wittkit/scan.hpp"
#include "wittkit/witt.hpp"
#include "wittkit/words.hpp"

namespace wittkit {

namespace {

struct Outcome {
  Json body;
  int code = 0;
};

std::string word_text(const Word& w) {
  bool small = true;
  for (int x : w) small = small && x <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

TruncatedSeries series_arg(const std::string& text, const char* name) {
  return series_from_json(parse_json_text(text, name));
}

RealCharacter character_arg(const std::optional<std::int64_t>& kronecker, const std::string& table) {
  if (kronecker && !table.empty()) throw UsageError("give either --kronecker or --table, not both");
  if (kronecker) return RealCharacter::kronecker(*kronecker);
  if (table.empty()) return RealCharacter::trivial();
  std::vector<int> values;
  std::stringstream ss(table);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("malformed character table '" + table + "'");
    }
  }
  return RealCharacter::from_table(values);
}

Json error_json(const char* kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt transforms, necklace counts, product expansions and Euler-product constants", "wittkit"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Outcome result;

  // necklace
  auto* necklace = app.add_subcommand("necklace", "necklace polynomial M(alpha;n) or M(n_1,...,n_r)");
  std::string alpha, content;
  std::int64_t n = 0;
  std::optional<std::size_t> vk;
  necklace->add_option("--alpha", alpha, "integer alpha");
  necklace->add_option("--n", n, "length n >= 1");
  necklace->add_option("--content", content, "letter multiplicities, e.g. 2,3,1");
  necklace->add_option("--vk", vk, "sign-twisted count V_k");
  necklace->callback([&] {
    if (!content.empty()) {
      if (!alpha.empty()) throw UsageError("give either --alpha/--n or --content");
      Composition c = parse_composition(content);
      result.body = {{"value", to_string(vk ? v_count(c, *vk) : necklace_count(c))}};
      return;
    }
    if (alpha.empty()) throw UsageError("necklace needs --alpha and --n, or --content");
    Rational a = parse_rational(alpha);
    if (!is_integer(a)) throw UsageError("--alpha must be an integer");
    result.body = {{"value", to_string(necklace_poly(a.get_num(), n))}};
  });

  // words
  auto* words = app.add_subcommand("words", "Lyndon words and aperiodic classes with a given content");
  std::string wcontent;
  bool list = false, count = false;
  std::uint64_t wbudget = kDefaultWordBudget;
  words->add_option("--content", wcontent, "letter multiplicities")->required();
  words->add_flag("--list", list, "list the Lyndon words");
  words->add_flag("--count", count, "count aperiodic circular words by enumeration");
  words->add_option("--budget", wbudget, "largest word length to enumerate");
  words->callback([&] {
    Composition c = parse_composition(wcontent);
    if (list == count) throw UsageError("words needs exactly one of --list and --count");
    if (count) {
      result.body = {{"value", to_string(aperiodic_count(c, wbudget))}};
      return;
    }
    Json arr = Json::array();
    for (const auto& w : lyndon_words(c, wbudget)) arr.push_back(word_text(w));
    result.body = {{"value", arr}, {"count", std::to_string(arr.size())}};
  });

  // witt
  auto* witt = app.add_subcommand("witt", "r-th Witt transform of a series");
  std::string f_text, g_text;
  std::int64_t r = 1;
  witt->add_option("--f", f_text, "series JSON")->required();
  witt->add_option("--r", r, "order r >= 1")->required();
  witt->callback([&] { result.body = {{"value", series_to_json(witt_transform(series_arg(f_text, "--f"), r))}}; });

  // witt-table
  auto* table = app.add_subcommand("witt-table", "coefficients m_f(j,k) for k <= R, j <= J");
  std::int64_t R = 1;
  std::optional<std::size_t> J;
  table->add_option("--f", f_text, "series JSON")->required();
  table->add_option("--R", R, "largest order")->required();
  table->add_option("--J", J, "largest degree (default: order of f)");
  table->callback([&] { result.body = {{"value", witt_table_to_json(witt_table(series_arg(f_text, "--f"), R, J))}}; });

  // verify
  auto* verify = app.add_subcommand("verify", "check one identity exactly");
  std::string id;
  IdentityParams params;
  std::string p_alpha = "2", p_beta = "2";
  verify->add_option("--id", id, "T3.1 ... T3.6, T1.1, T1.2")->required();
  verify->add_option("--f", f_text, "series JSON");
  verify->add_option("--g", g_text, "series JSON (product identities)");
  verify->add_option("--r", params.r, "order r");
  verify->add_option("--k", params.k, "shift or power k");
  verify->add_option("--v", params.v, "v for T3.6");
  verify->add_option("--w", params.w, "w for T3.6");
  verify->add_option("--alpha", p_alpha, "alpha for T1.1");
  verify->add_option("--beta", p_beta, "beta for T1.*");
  verify->callback([&] {
    IdentityId which = parse_identity_id(id);
    const bool necklace_id = which == IdentityId::kNecklaceProduct || which == IdentityId::kNecklacePower;
    if (!necklace_id && f_text.empty()) throw UsageError("verify " + id + " needs --f");
    TruncatedSeries f = f_text.empty() ? TruncatedSeries() : series_arg(f_text, "--f");
    TruncatedSeries g = g_text.empty() ? TruncatedSeries(f.order()) : series_arg(g_text, "--g");
    if (which == IdentityId::kProduct || which == IdentityId::kMixedPower) {
      if (g_text.empty()) throw UsageError("verify " + id + " needs --g");
    }
    params.alpha = parse_rational(p_alpha).get_num();
    params.beta = parse_rational(p_beta).get_num();
    IdentityReport rep = verify_identity(which, f, g, params);
    result.body = {{"report", identity_report_to_json(rep)}};
    result.code = rep.pass ? 0 : 1;
  });

  // scan
  auto* scan = app.add_subcommand("scan", "finite-window monotonicity check");
  std::string family;
  ScanBounds bounds;
  scan->add_option("--family", family, "T5.1, T5.2, T5.3a-c, T5.4a-c or P6")->required();
  scan->add_option("--f", f_text, "series JSON (not used by P6)");
  scan->add_option("--kmax", bounds.kmax, "largest degree k");
  scan->add_option("--rmax", bounds.rmax, "largest order r");
  scan->add_option("--cmax", bounds.cmax, "largest c for P6");
  scan->callback([&] {
    ScanFamily fam = parse_scan_family(family);
    if (fam != ScanFamily::kP6 && f_text.empty()) throw UsageError("scan " + family + " needs --f");
    TruncatedSeries f = f_text.empty() ? TruncatedSeries() : series_arg(f_text, "--f");
    ScanReport rep = monotonicity_scan(f, fam, bounds);
    result.body = {{"report", scan_report_to_json(rep)}};
    result.code = rep.pass ? 0 : 1;
  });

  // expand
  auto* expand = app.add_subcommand("expand", "exponents e_n with f = prod (1 - z^n)^(-e_n)");
  std::string h_text;
  std::optional<std::size_t> N;
  expand->add_option("--f", f_text, "series JSON");
  expand->add_option("--h", h_text, "rational function JSON");
  expand->add_option("--N", N, "truncation order");
  expand->callback([&] {
    if (f_text.empty() == h_text.empty()) throw UsageError("expand needs exactly one of --f and --h");
    TruncatedSeries f;
    if (!f_text.empty()) {
      f = series_arg(f_text, "--f");
      if (N) {
        if (*N > f.order()) throw UsageError("--N exceeds the truncation order of --f");
        f = f.truncated(*N);
      }
    } else {
      f = ratfun_expand(ratfun_from_json(parse_json_text(h_text, "--h")), N.value_or(24));
    }
    result.body = {{"value", expansion_to_json(peel_1d(f))}};
  });

  // expand2d
  auto* expand2d = app.add_subcommand("expand2d", "exponents e(j,k) with F = prod (1 - z^j y^k)^e(j,k)");
  std::string F_text;
  std::optional<std::size_t> J2, K2;
  bool jmajor = false;
  expand2d->add_option("--F", F_text, "bivariate series JSON")->required();
  expand2d->add_option("--J", J2, "degree in z");
  expand2d->add_option("--K", K2, "degree in y");
  expand2d->add_flag("--j-major", jmajor, "peel in j-major order");
  expand2d->callback([&] {
    BiSeries F = biseries_from_json(parse_json_text(F_text, "--F"));
    std::size_t jj = J2.value_or(F.max_j()), kk = K2.value_or(F.max_k());
    BiSeries G(jj, kk);
    for (std::size_t a = 0; a <= std::min(jj, F.max_j()); ++a)
      for (std::size_t b = 0; b <= std::min(kk, F.max_k()); ++b) G.at(a, b) = F.at(a, b);
    result.body = {{"value", expansion_to_json(peel_2d(G, jmajor ? PeelOrder::kJMajor : PeelOrder::kKMajor))}};
  });

  // cyclotomic
  auto* cyclo = app.add_subcommand("cyclotomic", "compare 1/(1 - y f(z)) with its Witt product");
  std::size_t cj = 8, ck = 8;
  cyclo->add_option("--f", f_text, "series JSON")->required();
  cyclo->add_option("--J", cj, "degree in z");
  cyclo->add_option("--K", ck, "degree in y");
  cyclo->callback([&] {
    CyclotomicReport rep = cyclotomic_check(series_arg(f_text, "--f"), cj, ck);
    result.body = {{"report", cyclotomic_report_to_json(rep)}};
    result.code = rep.pass ? 0 : 1;
  });

  // zeta
  auto* zcmd = app.add_subcommand("zeta", "Riemann, Hurwitz or partial zeta at an integer s >= 2");
  std::int64_t s = 2;
  int digits = 20;
  std::string a_text;
  std::uint64_t m = 0;
  zcmd->add_option("--s", s, "integer s >= 2")->required();
  zcmd->add_option("--digits", digits, "significant digits");
  zcmd->add_option("--a", a_text, "Hurwitz parameter in (0,1]");
  zcmd->add_option("--m", m, "remove the Euler factors of the first m primes");
  zcmd->callback([&] {
    if (!a_text.empty() && m != 0) throw UsageError("--a and --m cannot be combined");
    BigDecimal v = !a_text.empty() ? hurwitz_zeta(s, parse_rational(a_text), digits) : partial_zeta(m, s, digits);
    result.body = {{"value", v.to_string(digits)}, {"digits", digits}};
  });

  // lseries
  auto* lcmd = app.add_subcommand("lseries", "L(s, chi) for a real character");
  std::optional<std::int64_t> kron;
  std::string chi_table;
  lcmd->add_option("--s", s, "integer s >= 2")->required();
  lcmd->add_option("--kronecker", kron, "discriminant D, chi(n) = (D/n)");
  lcmd->add_option("--table", chi_table, "values chi(0),...,chi(q-1)");
  lcmd->add_option("--digits", digits, "significant digits");
  lcmd->callback([&] {
    RealCharacter chi = character_arg(kron, chi_table);
    result.body = {{"value", l_series(s, chi, digits).to_string(digits)},
                   {"character", chi.label()},
                   {"digits", digits}};
  });

  // constant
  auto* ccmd = app.add_subcommand("constant", "prod_{p > p_m} h(1/p) through partial zeta values");
  std::optional<std::uint64_t> direct;
  ccmd->add_option("--h", h_text, "rational function JSON")->required();
  ccmd->add_option("--m", m, "number of initial primes excluded");
  ccmd->add_option("--digits", digits, "significant digits");
  ccmd->add_option("--direct", direct, "also multiply h(1/p) directly over p <= P");
  ccmd->callback([&] {
    EulerProductSpec spec{ratfun_from_json(parse_json_text(h_text, "--h")), m, digits};
    ProductEstimate est = euler_product(spec);
    result.body = estimate_to_json(est, digits);
    if (direct) {
      result.body["direct"] = estimate_to_json(euler_product_direct(spec, *direct), std::min(digits, 15));
    }
  });

  // bchi
  auto* bcmd = app.add_subcommand("bchi", "the constant B_chi for a real character");
  std::optional<std::uint64_t> cross;
  bcmd->add_option("--kronecker", kron, "discriminant D");
  bcmd->add_option("--table", chi_table, "values chi(0),...,chi(q-1)");
  bcmd->add_option("--digits", digits, "significant digits");
  bcmd->add_option("--cross-check", cross, "prime limit for the direct product")
      ->expected(0, 1)
      ->default_str("1000000");
  bcmd->callback([&] {
    RealCharacter chi = character_arg(kron, chi_table);
    std::optional<std::uint64_t> limit;
    if (bcmd->count("--cross-check") > 0) limit = cross.value_or(1000000);
    BChiResult res = b_chi(chi, digits, limit);
    result.body = estimate_to_json(res.lseries, digits);
    result.body["character"] = chi.label();
    result.body["rows"] = res.rows;
    result.body["columns"] = res.columns;
    if (res.direct) {
      result.body["direct"] = estimate_to_json(*res.direct, std::min(digits, 15));
    }
  });

  // convergence
  auto* conv = app.add_subcommand("convergence", "hypotheses of the L-series product for f");
  conv->add_option("--h", h_text, "f as a rational function JSON");
  conv->add_option("--f", f_text, "f as a truncated series JSON");
  conv->callback([&] {
    if (f_text.empty() == h_text.empty()) throw UsageError("convergence needs exactly one of --h and --f");
    ConvergenceReport rep = h_text.empty() ? check_convergence_hypotheses(series_arg(f_text, "--f"))
                                           : check_convergence_hypotheses(ratfun_from_json(parse_json_text(h_text, "--h")));
    result.body = {{"report", convergence_report_to_json(rep)}};
  });

  // verify-all
  auto* all = app.add_subcommand("verify-all", "run the verification batteries");
  std::string scope = "all";
  std::uint64_t budget = 200;
  all->add_option("--scope", scope, "combinatorial, identities, expansion, analytic or all");
  all->add_option("--budget", budget, "caps enumeration sizes and case counts; 0 runs nothing");
  all->callback([&] {
    std::vector<CheckResult> checks = run_batteries(scope, config_for_budget(budget));
    Json arr = Json::array();
    bool ok = true;
    for (const auto& c : checks) {
      ok = ok && c.pass;
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
      err << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    result.body = {{"report", {{"scope", scope}, {"budget", budget}, {"pass", ok}, {"checks", arr}}}};
    result.code = ok ? 0 : 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what()).dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    Json body = error_json("precondition", e.what());
    body["error"]["hypothesis"] = e.hypothesis();
    out << body.dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    out << error_json("usage", e.what()).dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    out << error_json("resource", e.what()).dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    out << error_json("convergence", e.what()).dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    out << error_json("math", e.what()).dump() << "\n";
    err << "wittkit: " << e.what() << "\n";
    return 1;
  }
  out << result.body.dump() << "\n";
  return result.code;
}

}  // namespace wittkit
