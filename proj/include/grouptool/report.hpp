#pragma once

#include <string>

#include <json.hpp>

#include "grouptool/dsub.hpp"
#include "grouptool/eseries.hpp"
#include "grouptool/group.hpp"
#include "grouptool/verify.hpp"

namespace grouptool {
namespace report {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

json group_info(const GroupPtr& g);
json members_json(const Group& g, const std::vector<int>& members);
json dsub_result(const GroupPtr& g, const DResult& lm, const DResult& dm,
                 const DResult& dmn);
json eseries_result(const GroupPtr& g, const ESeriesResult& r);
json suite_report(const verify::SuiteReport& r);
json suite_reports(const std::vector<verify::SuiteReport>& rs);

// Top-level document: {"command", "group", "params", "result", "version"}.
json document(const std::string& command, const json& group, const json& params,
              const json& result);

std::string render_text_members(const Group& g, const std::string& title,
                                const std::vector<int>& members);
std::string render_suites_text(const std::vector<verify::SuiteReport>& rs,
                               bool show_timing = true);

}  // namespace report
}  // namespace grouptool
