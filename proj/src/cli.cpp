#include "macd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace macd {

namespace {

struct RunConfig {
  std::uint64_t p = 3;
  unsigned m = 1;
  std::uint64_t alpha = 0;
  std::uint64_t ell = 0;
  std::string kind;
  std::string mode = "closure";
  std::uint64_t budget = 0;
  bool budget_given = false;
  unsigned workers = 1;
  std::uint64_t beta = 0;
  std::vector<std::string> ids;
  bool ids_given = false;
  bool all = false;
  bool json = false;
  bool deterministic = false;
  std::string output;
};

GroupParams resolve_params(const RunConfig& c) {
  if (c.alpha != 0 && c.ell != 0) throw InvalidParameter("give either --alpha or --ell, not both");
  GroupParams P = c.alpha != 0 ? GroupParams{c.p, c.m, c.alpha}
                               : params_from_ell(c.p, c.m, c.ell != 0 ? c.ell : 1);
  validate(P);
  return P;
}

std::optional<GroupKind> resolve_kind(const std::string& s) {
  if (s.empty() || s == "all") return std::nullopt;
  return parse_kind(s);
}

std::vector<std::string> selection(const RunConfig& c, std::optional<GroupKind> kind) {
  std::vector<std::string> ids;
  if (c.all || !c.ids_given) {
    for (const auto& id : default_check_ids())
      if (!kind || suite_involves(id, *kind)) ids.push_back(id);
  }
  for (const auto& id : c.ids) {
    if (id.empty()) continue;
    if (!is_known_check(id)) throw std::invalid_argument("unknown check id '" + id + "'");
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

void print_report(const TheoremReport& r, std::ostream& out) {
  bool first = true;
  for (const auto& c : r.flatten()) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    if (c.informational) tag = "INFO";
    out << (first ? "" : "    ") << "[" << tag << "] " << c.id;
    if (c.informational) out << "  " << c.observed;
    else out << "  expected " << c.expected << "  observed " << c.observed;
    if (first) out << "  (" << format_ms(c.runtime_ms) << " ms)";
    if (!c.note.empty()) out << "  -- " << c.note;
    out << '\n';
    first = false;
  }
  out.flush();
}

int cmd_info(const RunConfig& c, std::ostream& out) {
  const GroupParams P = resolve_params(c);
  const GroupKind kind = c.kind.empty() ? GroupKind::J : parse_kind(c.kind);
  const GroupPtr G = make_group(P, kind);
  const CentralSeries s = upper_central_series(G);
  out << G->name() << '\n';
  out << "orders: " << G->order() << " / " << G->order_a() << ' ' << G->order_b() << ' '
      << G->order_c() << '\n';
  out << "class: " << s.nilpotency_class() << '\n';
  for (unsigned i = 1; i <= s.nilpotency_class(); ++i) {
    const SubgroupSet& t = s.term(i);
    out << "Z_" << i << ": order " << t.order() << "  <";
    for (std::size_t n = 0; n < t.generators().size(); ++n)
      out << (n ? ", " : "") << word(t.generators()[n]);
    out << ">\n";
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& c, bool report_only, std::ostream& out, std::ostream& err) {
  const GroupParams P = resolve_params(c);
  const auto kind = resolve_kind(c.kind);
  VerifyOptions opt;
  if (c.mode == "brute") opt.mode = Mode::Brute;
  else if (c.mode == "closure") opt.mode = Mode::Closure;
  else throw std::invalid_argument("mode must be brute or closure");
  opt.budget = c.budget_given ? c.budget : default_budget();
  opt.workers = std::max(1u, c.workers);
  opt.beta = c.beta;
  const auto ids = selection(c, kind);

  Workspace ws(P, opt);
  std::vector<TheoremReport> reports;
  bool ok = true;
  const bool human = !report_only && !c.json;
  for (const auto& id : ids) {
    reports.push_back(run_check(id, ws));
    ok = ok && reports.back().status() == Status::Pass;
    if (human) print_report(reports.back(), out);
  }
  const std::string doc =
      reports_to_json(P, kind ? std::string(to_string(*kind)) : "all", reports, c.deterministic);
  if (!c.output.empty()) {
    std::ofstream f(c.output);
    f << doc << '\n';
    if (!f) {
      err << "error: cannot write " << c.output << '\n';
      return kExitFail;
    }
  }
  if (report_only || c.json) out << doc << '\n';
  if (human) {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.status() == Status::Pass;
    out << passed << "/" << reports.size() << " suites passed\n";
  }
  return ok ? kExitPass : kExitFail;
}

void add_params(CLI::App* app, RunConfig& c) {
  app->add_option("--p", c.p, "odd prime");
  app->add_option("--m", c.m, "exponent m >= 1");
  app->add_option("--alpha", c.alpha, "alpha with v_p(alpha - 1) = m");
  app->add_option("--ell", c.ell, "ell with alpha = 1 + ell p^m");
  app->add_option("--kind", c.kind, "J, H or K");
}

void add_verify_flags(CLI::App* app, RunConfig& c) {
  add_params(app, c);
  app->add_option("--id", c.ids, "check id (repeatable, comma separated)")->delimiter(',')
      ->each([&c](const std::string&) { c.ids_given = true; });
  app->add_flag("--all", c.all, "every theorem and presentation suite");
  app->add_option("--mode", c.mode, "closure or brute")->check(CLI::IsMember({"closure", "brute"}));
  app->add_option("--budget", c.budget, "work budget per enumeration")
      ->each([&c](const std::string&) { c.budget_given = true; });
  app->add_option("--workers", c.workers, "threads for exhaustive scans");
  app->add_option("--beta", c.beta, "second parameter for ele");
  app->add_option("--output", c.output, "write the JSON report to a file");
  app->add_flag("--deterministic", c.deterministic, "zero all runtime_ms fields");
}

}  // namespace

bool suite_involves(const std::string& id, GroupKind kind) {
  static const std::map<std::string, std::string> kinds{
      {"autk", "K"},   {"autk2", "K"},   {"autk4", "K"},   {"autk6", "K"},    {"ele", "K"},
      {"auth", "H"},   {"auth2", "H"},   {"tet", "HK"},    {"auth6", "H"},    {"autg", "J"},
      {"autg2", "J"},  {"autj3", "J"},   {"autjfull", "J"}, {"zi2", "JHK"},   {"sylowK", "K"},
      {"sylowH", "H"}, {"sylowJ", "J"},  {"basw", "K"},    {"coli12", "K"},   {"commie2", "J"},
      {"commie3", "J"}, {"commie4", "J"}, {"commie5", "J"}, {"commie6", "J"}, {"coz3", "H"}};
  const auto it = kinds.find(id);
  return it != kinds.end() && it->second.find(to_string(kind)[0]) != std::string::npos;
}

std::string word(const Element& g) {
  std::string s;
  auto part = [&](char letter, std::uint64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += letter;
    if (e != 1) s += "^" + std::to_string(e);
  };
  part('A', g.i);
  part('B', g.j);
  part('C', g.k);
  return s.empty() ? "1" : s;
}

std::string reports_to_json(const GroupParams& params, const std::string& kind,
                            const std::vector<TheoremReport>& reports, bool deterministic) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["params"] = {{"p", std::to_string(params.p)},
                   {"m", std::to_string(params.m)},
                   {"alpha", std::to_string(params.alpha)}};
  doc["kind"] = kind;
  doc["checks"] = ordered_json::array();
  for (const auto& r : reports)
    for (const auto& c : r.flatten()) {
      ordered_json j;
      j["id"] = c.id;
      j["expected"] = c.expected;
      j["observed"] = c.observed;
      j["status"] = std::string(to_string(c.status));
      j["runtime_ms"] = deterministic ? "0" : format_ms(c.runtime_ms);
      doc["checks"].push_back(std::move(j));
    }
  doc["version"] = kVersion;
  return doc.dump(2);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MACD_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"macd: Macdonald group quotients and their automorphisms"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig c;
  auto* info = app.add_subcommand("info", "orders and upper central series");
  add_params(info, c);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_verify_flags(verify, c);
  verify->add_flag("--json", c.json, "print the JSON report instead of text");
  auto* report = app.add_subcommand("report", "print the JSON report");
  add_verify_flags(report, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitInvalid;
  }
  try {
    if (info->parsed()) return cmd_info(c, out);
    return cmd_verify(c, report->parsed(), out, err);
  } catch (const InvalidParameter& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace macd
