#include "grouptool/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouptool/algebra.hpp"
#include "grouptool/catalog.hpp"
#include "grouptool/dsub.hpp"
#include "grouptool/errors.hpp"
#include "grouptool/eseries.hpp"
#include "grouptool/numeric.hpp"
#include "grouptool/report.hpp"
#include "grouptool/verify.hpp"

namespace grouptool {
namespace cli {

namespace {

struct Inputs {
  std::string group;
  std::string gens;
  std::string cayley;
  int m = 0;
  int n = 0;
  std::string pi;
  std::string format = "text";
  std::string out;
};

// Attaches the shared group/parameter/output options to a subcommand.
void add_common(CLI::App* cmd, Inputs& in, bool with_params) {
  auto* g = cmd->add_option("--group", in.group, "catalog group name");
  auto* c = cmd->add_option("--cayley", in.cayley, "Cayley table CSV path");
  auto* s = cmd->add_option("--gens", in.gens,
                            "generators in cycle notation, e.g. \"(1 2)(3 4), (1 2 3)\"");
  g->excludes(c)->excludes(s);
  c->excludes(s);
  if (with_params) {
    auto* m = cmd->add_option("--m", in.m, "first parameter (coprime to --n)");
    auto* n = cmd->add_option("--n", in.n, "second parameter");
    auto* pi = cmd->add_option(
        "--pi", in.pi, "comma-separated primes; m = pi-part of |G|, n = rest");
    m->needs(n);
    n->needs(m);
    pi->excludes(m)->excludes(n);
  }
  cmd->add_option("--format", in.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", in.out, "write the report to a file");
}

GroupPtr build_group(const Inputs& in) {
  int sources = (!in.group.empty()) + (!in.gens.empty()) + (!in.cayley.empty());
  if (sources != 1)
    throw Error(ErrorCode::InvalidParams,
                "provide exactly one of --group, --gens, --cayley");
  if (!in.group.empty()) return catalog::build(in.group);
  if (!in.gens.empty()) return catalog::from_cycles(in.gens, "custom");
  return catalog::load_cayley_csv(in.cayley);
}

CoprimePair resolve_pair(const Inputs& in, const GroupPtr& g) {
  if (!in.pi.empty()) {
    std::vector<int> primes;
    std::stringstream ss(in.pi);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int p = 0;
      try {
        p = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || p < 2)
        throw Error(ErrorCode::InvalidParams,
                    "--pi expects comma-separated primes, got '" + tok + "'");
      primes.push_back(p);
    }
    int m = pi_part(g->order(), primes);
    return CoprimePair(m, g->order() / m);
  }
  if (in.m == 0 || in.n == 0)
    throw Error(ErrorCode::InvalidParams,
                "provide --m and --n together, or --pi");
  return CoprimePair(in.m, in.n);
}

// Writes the rendered report; --out failures are I/O errors (exit 1).
int emit(const std::string& text, const Inputs& in, std::ostream& out,
         std::ostream& err) {
  if (in.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(in.out);
  if (!f) {
    err << "error: cannot open " << in.out << " for writing\n";
    return 1;
  }
  f << text;
  if (!f.good()) {
    err << "error: failed writing " << in.out << "\n";
    return 1;
  }
  return 0;
}

std::string json_text(const report::json& doc) { return doc.dump(2) + "\n"; }

std::string group_header(const GroupPtr& g) {
  std::ostringstream os;
  os << "group " << g->name() << ": order " << g->order() << ", source "
     << g->source() << "\n";
  return os.str();
}

int cmd_dsub(const Inputs& in, std::ostream& out, std::ostream& err) {
  GroupPtr g = build_group(in);
  CoprimePair p = resolve_pair(in, g);
  DResult lm;
  lm.kind = DKind::LSet;
  lm.m = p.m;
  lm.n = p.n;
  lm.members = l_set(*g, p.m);
  DResult dm = d_m_group(g, p.m);
  DResult dmn = d_mn_group(g, p);
  if (in.format == "json") {
    auto doc = report::document(
        "dsub", report::group_info(g),
        report::json{{"m", p.m}, {"n", p.n}},
        report::dsub_result(g, lm, dm, dmn));
    return emit(json_text(doc), in, out, err);
  }
  std::ostringstream os;
  os << group_header(g) << "m=" << p.m << " n=" << p.n << "\n";
  os << report::render_text_members(*g, "L_" + std::to_string(p.m), lm.members)
     << "\n";
  os << report::render_text_members(*g, "D_" + std::to_string(p.m) + "(G)",
                                    dm.members)
     << "\n";
  os << report::render_text_members(*g,
                                    "D_{" + std::to_string(p.m) + "," +
                                        std::to_string(p.n) + "}(G)",
                                    dmn.members);
  if (dmn.nilpotent)
    os << (*dmn.nilpotent ? "  [nilpotent]" : "  [non-nilpotent]");
  os << "\n";
  return emit(os.str(), in, out, err);
}

int cmd_eseries(const Inputs& in, std::ostream& out, std::ostream& err,
                bool classify_only) {
  GroupPtr g = build_group(in);
  CoprimePair p = resolve_pair(in, g);
  ESeriesResult r = compute_e_series(g, p);
  int rc = r.theorem_violation ? 1 : 0;
  if (in.format == "json") {
    auto doc = report::document(
        classify_only ? "classify" : "eseries", report::group_info(g),
        report::json{{"m", p.m}, {"n", p.n}}, report::eseries_result(g, r));
    int io = emit(json_text(doc), in, out, err);
    return io ? io : rc;
  }
  std::ostringstream os;
  os << group_header(g) << "m=" << p.m << " n=" << p.n << "\n";
  if (!classify_only) {
    for (std::size_t i = 0; i < r.terms.size(); ++i)
      os << report::render_text_members(*g, "E" + std::to_string(i),
                                        r.terms[i].members)
         << "\n";
  } else {
    os << "terms";
    for (const auto& t : r.terms) os << " " << t.order();
    os << "\n";
  }
  if (r.reached)
    os << "reaches the group, length " << *r.length << "\n";
  else
    os << "does not reach the group (stabilizes at term "
       << r.stabilized_at.value_or(
              static_cast<int>(r.terms.size()) - 1)
       << ")\n";
  os << "classification: " << to_string(r.classification) << "\n";
  if (r.theorem_violation)
    os << "theorem violation: series length exceeds 4\n";
  int io = emit(os.str(), in, out, err);
  return io ? io : rc;
}

int cmd_verify(const Inputs& in, const std::string& suite, int max_order,
               int subgroup_cap, bool show_timing, std::ostream& out,
               std::ostream& err) {
  verify::VerifyOptions opt;
  opt.max_order = max_order;
  opt.subgroup_cap = subgroup_cap;
  std::vector<verify::SuiteReport> reports;
  if (suite == "all")
    reports = verify::run_all(opt);
  else
    reports.push_back(verify::run_suite(suite, opt));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_passed();
  if (in.format == "json") {
    auto doc = report::document(
        "verify", report::json(),
        report::json{{"max_order", max_order},
                     {"subgroup_cap", subgroup_cap},
                     {"suite", suite}},
        report::suite_reports(reports));
    int io = emit(json_text(doc), in, out, err);
    return io ? io : (ok ? 0 : 1);
  }
  int io = emit(report::render_suites_text(reports, show_timing), in, out, err);
  return io ? io : (ok ? 0 : 1);
}

int cmd_catalog(const Inputs& in, std::ostream& out, std::ostream& err) {
  bool has_source =
      !in.group.empty() || !in.gens.empty() || !in.cayley.empty();
  if (!has_source) {
    const auto& entries = catalog::entries();
    if (in.format == "json") {
      report::json arr = report::json::array();
      for (const auto& e : entries)
        arr.push_back(report::json{{"name", e.name},
                                   {"order", e.order},
                                   {"non_abelian_simple", e.non_abelian_simple}});
      auto doc = report::document("catalog", report::json(), report::json(),
                                  report::json{{"entries", arr}});
      return emit(json_text(doc), in, out, err);
    }
    std::ostringstream os;
    for (const auto& e : entries) {
      os << e.name << " " << e.order;
      if (e.non_abelian_simple) os << " (non-abelian simple)";
      os << "\n";
    }
    return emit(os.str(), in, out, err);
  }
  GroupPtr g = build_group(in);
  Subgroup z = center(g);
  bool nil = is_nilpotent(g);
  bool sol = is_solvable(g);
  if (in.format == "json") {
    auto doc = report::document(
        "catalog", report::group_info(g), report::json(),
        report::json{{"exponent", g->exponent()},
                     {"center_order", z.order()},
                     {"nilpotent", nil},
                     {"solvable", sol}});
    return emit(json_text(doc), in, out, err);
  }
  std::ostringstream os;
  os << group_header(g) << "exponent " << g->exponent() << ", center order "
     << z.order() << ", " << (nil ? "nilpotent" : "not nilpotent") << ", "
     << (sol ? "solvable" : "not solvable") << "\n";
  return emit(os.str(), in, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-group order-operator toolkit", "grouptool"};
  app.require_subcommand(0, 1);

  Inputs dsub_in, ser_in, cls_in, ver_in, cat_in;
  std::string suite = "all";
  int max_order = 200;
  int subgroup_cap = 48;
  bool show_timing = false;
  bool list_flag = false;

  CLI::App* dsub = app.add_subcommand(
      "dsub", "compute L_m, D_m(G) and D_{m,n}(G) for one group");
  add_common(dsub, dsub_in, true);

  CLI::App* ser = app.add_subcommand(
      "eseries", "compute the alternating-operator ascending series");
  add_common(ser, ser_in, true);

  CLI::App* cls = app.add_subcommand(
      "classify", "classify a group by the length of its series");
  add_common(cls, cls_in, true);

  CLI::App* ver = app.add_subcommand(
      "verify", "run theorem-verification suites over the catalog corpus");
  ver->add_option("--suite", suite, "suite id, or 'all'");
  ver->add_option("--max-order", max_order, "corpus order cap");
  ver->add_option("--subgroup-cap", subgroup_cap,
                  "order cap for subgroup-enumeration suites");
  ver->add_flag("--show-timing", show_timing, "include per-suite timings");
  ver->add_option("--format", ver_in.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", ver_in.out, "write the report to a file");

  CLI::App* cat = app.add_subcommand("catalog",
                                     "list built-in groups or inspect one");
  cat->add_flag("--list", list_flag, "list the built-in groups");
  add_common(cat, cat_in, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (dsub->parsed()) return cmd_dsub(dsub_in, out, err);
    if (ser->parsed()) return cmd_eseries(ser_in, out, err, false);
    if (cls->parsed()) return cmd_eseries(cls_in, out, err, true);
    if (ver->parsed())
      return cmd_verify(ver_in, suite, max_order, subgroup_cap, show_timing,
                        out, err);
    if (cat->parsed()) return cmd_catalog(cat_in, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << app.help();
  return 2;
}

}  // namespace cli
}  // namespace grouptool
