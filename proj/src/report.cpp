#include "grouptool/report.hpp"

#include <cstdio>
#include <sstream>

namespace grouptool {
namespace report {

namespace {

const char* outcome_name(verify::Outcome o) {
  switch (o) {
    case verify::Outcome::Pass: return "pass";
    case verify::Outcome::Fail: return "fail";
    case verify::Outcome::Skip: return "skip";
  }
  return "?";
}

json d_result(const GroupPtr& g, const DResult& r) {
  json j;
  j["size"] = static_cast<int>(r.members.size());
  j["members"] = members_json(*g, r.members);
  if (r.kind != DKind::LSet) {
    j["is_subgroup"] = r.is_subgroup;
    if (r.nilpotent) j["nilpotent"] = *r.nilpotent;
  }
  return j;
}

}  // namespace

json group_info(const GroupPtr& g) {
  return json{{"name", g->name()},
              {"order", g->order()},
              {"source", g->source()}};
}

json members_json(const Group& g, const std::vector<int>& members) {
  json arr = json::array();
  for (int x : members)
    arr.push_back(json{{"id", x},
                       {"label", g.label(x)},
                       {"order", g.element_order(x)}});
  return arr;
}

json dsub_result(const GroupPtr& g, const DResult& lm, const DResult& dm,
                 const DResult& dmn) {
  return json{{"l_m", d_result(g, lm)},
              {"d_m", d_result(g, dm)},
              {"d_mn", d_result(g, dmn)}};
}

json eseries_result(const GroupPtr& g, const ESeriesResult& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    json ids = json::array();
    for (int x : t.members) ids.push_back(x);
    terms.push_back(json{{"order", t.order()}, {"members", ids}});
  }
  (void)g;
  return json{{"classification", to_string(r.classification)},
              {"length", r.length ? json(*r.length) : json()},
              {"reached", r.reached},
              {"stabilized_at", r.stabilized_at ? json(*r.stabilized_at)
                                                : json()},
              {"terms", terms},
              {"theorem_violation", r.theorem_violation}};
}

json suite_report(const verify::SuiteReport& r) {
  json outcomes = json::array();
  for (const auto& i : r.results)
    outcomes.push_back(json{{"instance", i.instance},
                            {"outcome", outcome_name(i.outcome)},
                            {"detail", i.detail}});
  return json{{"suite_id", r.suite_id},
              {"statement", r.statement},
              {"pass", r.count(verify::Outcome::Pass)},
              {"fail", r.count(verify::Outcome::Fail)},
              {"skip", r.count(verify::Outcome::Skip)},
              {"outcomes", outcomes}};
}

json suite_reports(const std::vector<verify::SuiteReport>& rs) {
  json suites = json::array();
  bool all = true;
  for (const auto& r : rs) {
    suites.push_back(suite_report(r));
    all = all && r.all_passed();
  }
  return json{{"all_passed", all}, {"suites", suites}};
}

json document(const std::string& command, const json& group,
              const json& params, const json& result) {
  return json{{"command", command},
              {"group", group},
              {"params", params},
              {"result", result},
              {"version", kVersion}};
}

std::string render_text_members(const Group& g, const std::string& title,
                                const std::vector<int>& members) {
  std::ostringstream os;
  os << title << " (" << members.size()
     << (members.size() == 1 ? " element" : " elements") << "): ";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) os << ", ";
    os << g.label(members[i]);
  }
  return os.str();
}

std::string render_suites_text(const std::vector<verify::SuiteReport>& rs,
                               bool show_timing) {
  std::ostringstream os;
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : rs) {
    int p = r.count(verify::Outcome::Pass);
    int f = r.count(verify::Outcome::Fail);
    int s = r.count(verify::Outcome::Skip);
    pass += p;
    fail += f;
    skip += s;
    os << r.suite_id << ": " << p << " pass, " << f << " fail, " << s
       << " skip";
    if (show_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.2fs)", r.elapsed_seconds);
      os << buf;
    }
    os << "\n";
    for (const auto& i : r.results) {
      if (i.outcome == verify::Outcome::Fail)
        os << "  FAIL " << i.instance
           << (i.detail.empty() ? "" : " - " + i.detail) << "\n";
      else if (i.outcome == verify::Outcome::Skip)
        os << "  skip " << i.instance
           << (i.detail.empty() ? "" : " - " + i.detail) << "\n";
    }
  }
  os << "total: " << pass << " pass, " << fail << " fail, " << skip
     << " skip across " << rs.size() << " suites\n";
  return os.str();
}

}  // namespace report
}  // namespace grouptool
