#pragma once

#include <string>
#include <vector>

#include "grouptool/eseries.hpp"
#include "grouptool/group.hpp"

namespace grouptool {
namespace verify {

enum class Outcome { Pass, Fail, Skip };

struct InstanceResult {
  std::string instance;  // e.g. "S4 (8,3)" or "S4 m=8"
  Outcome outcome = Outcome::Pass;
  std::string detail;  // witness on failure, reason on skip, extras on pass
};

struct SuiteReport {
  std::string suite_id;
  std::string statement;
  std::vector<InstanceResult> results;
  double elapsed_seconds = 0.0;  // not serialized

  int count(Outcome o) const;
  bool all_passed() const { return count(Outcome::Fail) == 0; }
};

struct VerifyOptions {
  int max_order = 200;     // corpus bound
  int subgroup_cap = 48;   // bound for suites quantifying over all subgroups
};

std::vector<std::string> list_suites();
std::string suite_statement(const std::string& id);  // UnknownSuite if absent
SuiteReport run_suite(const std::string& id, const VerifyOptions& opt = {});
std::vector<SuiteReport> run_all(const VerifyOptions& opt = {});

}  // namespace verify
}  // namespace grouptool
