#include "ltheta/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/hyperg.hpp"
#include "ltheta/lvalue.hpp"
#include "ltheta/qseries.hpp"
#include "ltheta/suites.hpp"
#include "ltheta/theta.hpp"

namespace ltheta {

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in rational list");
    out.push_back(parse_rational(item));
  }
  return out;
}

ThetaProductForm form_for_id(const std::string& id) {
  if (id == "remark") return remark_form();
  return catalog_entry(id).form;
}

int cmd_verify(int digits, long order, const std::vector<std::string>& entries,
               const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<std::string> canonical;
  for (const auto& e : catalog()) canonical.push_back(e.id);
  canonical.push_back("remark");

  std::vector<std::string> selected;
  if (entries.empty()) {
    selected = canonical;
  } else {
    for (const auto& want : entries) {
      if (std::find(canonical.begin(), canonical.end(), want) == canonical.end()) {
        err << "unknown entry: " << want << "\n";
        return 2;
      }
    }
    for (const auto& id : canonical) {
      if (std::find(entries.begin(), entries.end(), id) != entries.end()) {
        selected.push_back(id);
      }
    }
  }

  const PrecisionContext ctx = PrecisionContext::make(digits);
  MellinOptions opts;
  opts.series_order = order;

  std::vector<LValueReport> reports;
  reports.reserve(selected.size());
  for (const auto& id : selected) {
    reports.push_back(id == "remark" ? verify_remark(ctx, opts)
                                     : verify_entry(catalog_entry(id), ctx, opts));
  }

  int passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
      arr.push_back(nlohmann::json::parse(report_to_json(r, digits)));
    }
    out << arr.dump(2) << "\n";
  } else {
    const int w = digits + 10;
    out << std::left << std::setw(9) << "id" << std::setw(w) << "lhs" << std::setw(w)
        << "rhs" << std::setw(8) << "agreed" << "pass" << "\n";
    for (const auto& r : reports) {
      out << std::left << std::setw(9) << r.entry_id << std::setw(w)
          << r.lhs.str(digits) << std::setw(w) << r.rhs.str(digits) << std::setw(8)
          << r.agreed_digits << (r.pass ? "yes" : "NO") << "\n";
    }
    out << passed << "/" << reports.size() << " passed\n";
  }
  return passed == static_cast<int>(reports.size()) ? 0 : 1;
}

int cmd_identities(int digits, std::uint64_t seed, long order, const std::string& format,
                   std::ostream& out) {
  const PrecisionContext ctx = PrecisionContext::make(digits);
  std::vector<SuiteResult> results = exact_identity_suites(order);
  const std::vector<SuiteResult> numeric = numeric_identity_suites(seed, ctx);
  results.insert(results.end(), numeric.begin(), numeric.end());

  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
      arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(26) << r.name << (r.pass ? "ok   " : "FAIL ")
          << r.detail << "\n";
    }
    out << passed << "/" << results.size() << " suites passed\n";
  }
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int cmd_qexp(const std::string& entry, long order, const std::string& format,
             std::ostream& out) {
  const QExpansion qe = form_qexp(form_for_id(entry), order);
  if (format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (long k = 0; k < qe.truncation; ++k) {
      if (qe.coeff[k] == 0) continue;
      terms.push_back({{"exponent", to_string(rational(k, qe.denom))},
                       {"coefficient", to_string(Rational(qe.coeff[k]) * qe.scale)}});
    }
    const nlohmann::json j = {{"id", entry}, {"order", order}, {"terms", terms}};
    out << j.dump(2) << "\n";
  } else {
    out << to_string(qe, static_cast<std::size_t>(qe.truncation)) << "\n";
  }
  return 0;
}

int cmd_hyp(const std::string& upper_text, const std::string& lower_text,
            const std::string& z_text, const std::string& method, int digits,
            const std::string& format, std::ostream& out) {
  HypParams p;
  p.upper = parse_rational_list(upper_text);
  p.lower = parse_rational_list(lower_text);
  const PrecisionContext ctx = PrecisionContext::make(digits);

  BigFloat z;
  if (z_text.find_first_of(".eE") != std::string::npos) {
    z = ctx.real(z_text);
  } else {
    z = ctx.real(parse_rational(z_text));
  }

  AtOneMethod at_one = AtOneMethod::Auto;
  if (method == "integral") at_one = AtOneMethod::Integral;
  if (method == "series") at_one = AtOneMethod::Series;

  HypEvalReport rep;
  if (z == ctx.real(1)) {
    rep = pfq_at_one(p, ctx, at_one);
  } else if (at_one == AtOneMethod::Integral) {
    rep = euler_integral_eval(p, z, ctx);
  } else {
    rep = pfq_series(p, z, ctx);
  }

  if (format == "json") {
    const nlohmann::json j = {{"value", rep.value.str(digits)},
                              {"method", to_string(rep.method)},
                              {"terms_or_nodes", rep.terms_or_nodes},
                              {"tail_bound", rep.tail_bound.str(3)}};
    out << j.dump(2) << "\n";
  } else {
    out << rep.value.str(digits) << "\n";
    out << "method:         " << to_string(rep.method) << "\n";
    out << "terms_or_nodes: " << rep.terms_or_nodes << "\n";
    out << "tail_bound:     " << rep.tail_bound.str(3) << "\n";
  }
  return 0;
}

int cmd_gamma(const std::string& x_text, int digits, const std::string& format,
              std::ostream& out) {
  const PrecisionContext ctx = PrecisionContext::make(digits);
  const BigFloat v = gamma(parse_rational(x_text), ctx);
  if (format == "json") {
    const nlohmann::json j = {{"x", x_text}, {"value", v.str(digits)}};
    out << j.dump(2) << "\n";
  } else {
    out << v.str(digits) << "\n";
  }
  return 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision verification of weight-3 theta-product L-values"};
  app.name("ltheta");
  app.require_subcommand(1);

  int v_digits = 30;
  long v_order = 2000;
  std::vector<std::string> v_entries;
  std::string v_format = "table";
  auto* verify = app.add_subcommand(
      "verify", "Check catalog entries: Mellin integral vs closed form vs pullback");
  verify->add_option("--digits", v_digits, "Target agreement digits")
      ->check(CLI::Range(10, 200));
  verify->add_option("--order", v_order, "Series order backing the Mellin tail")
      ->check(CLI::Range(64L, 1000000L));
  verify->add_option("--entry", v_entries, "Entry ids to run (repeatable or comma-separated)")
      ->delimiter(',');
  verify->add_option("--format", v_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  int i_digits = 30;
  std::uint64_t i_seed = 42;
  long i_order = 2000;
  std::string i_format = "table";
  auto* identities =
      app.add_subcommand("identities", "Run the exact and randomized identity suites");
  identities->add_option("--digits", i_digits, "Target digits for numeric suites")
      ->check(CLI::Range(10, 200));
  identities->add_option("--seed", i_seed, "Seed for the randomized suites");
  identities->add_option("--order", i_order, "Order of the exact q-series suites")
      ->check(CLI::Range(8L, 1000000L));
  identities->add_option("--format", i_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string q_entry;
  long q_order = 2000;
  std::string q_format = "table";
  auto* qexp = app.add_subcommand("qexp", "Print the q-expansion of a catalog form");
  qexp->add_option("--entry", q_entry, "Entry id (or 'remark')")->required();
  qexp->add_option("--order", q_order, "Truncation order")->check(CLI::Range(2L, 1000000L));
  qexp->add_option("--format", q_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string h_upper;
  std::string h_lower;
  std::string h_z = "1";
  std::string h_method = "auto";
  int h_digits = 30;
  std::string h_format = "table";
  auto* hyp = app.add_subcommand("hyp", "Evaluate a generalized hypergeometric series");
  hyp->add_option("--upper", h_upper, "Upper parameters, comma-separated rationals")
      ->required();
  hyp->add_option("--lower", h_lower, "Lower parameters, comma-separated rationals");
  hyp->add_option("--z", h_z, "Argument: exact rational or decimal in [0,1]");
  hyp->add_option("--method", h_method, "Evaluation method at z = 1")
      ->check(CLI::IsMember({"auto", "integral", "series"}));
  hyp->add_option("--digits", h_digits, "Output digits")->check(CLI::Range(10, 200));
  hyp->add_option("--format", h_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string g_x;
  int g_digits = 30;
  std::string g_format = "table";
  auto* gam = app.add_subcommand("gamma", "Evaluate gamma at an exact rational");
  gam->add_option("--x", g_x, "Argument as an exact rational, e.g. 1/4")->required();
  gam->add_option("--digits", g_digits, "Output digits")->check(CLI::Range(10, 200));
  gam->add_option("--format", g_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(v_digits, v_order, v_entries, v_format, out, err);
    }
    if (identities->parsed()) {
      return cmd_identities(i_digits, i_seed, i_order, i_format, out);
    }
    if (qexp->parsed()) return cmd_qexp(q_entry, q_order, q_format, out);
    if (hyp->parsed()) {
      return cmd_hyp(h_upper, h_lower, h_z, h_method, h_digits, h_format, out);
    }
    if (gam->parsed()) return cmd_gamma(g_x, g_digits, g_format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("ltheta");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ltheta
