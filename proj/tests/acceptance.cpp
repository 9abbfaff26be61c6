// Acceptance gate: one line per criterion, exit 0 only if every line passes.
// argv[1] is the path to the grouptool binary (used by the determinism check).
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grouptool/algebra.hpp"
#include "grouptool/catalog.hpp"
#include "grouptool/dsub.hpp"
#include "grouptool/eseries.hpp"
#include "grouptool/verify.hpp"

using namespace grouptool;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failed = 0;

void line(int id, const std::string& what, bool ok, double secs, int budget,
          const std::string& detail) {
  bool pass = ok && secs <= budget;
  if (!pass) ++g_failed;
  std::cout << "criterion " << id << ": " << (pass ? "pass" : "FAIL") << " - "
            << what << " (" << std::fixed << std::setprecision(2) << secs
            << "s, budget " << budget << "s)";
  if (!ok && !detail.empty()) std::cout << "; " << detail;
  if (ok && secs > budget) std::cout << "; over budget";
  std::cout << "\n";
}

// Runs fn under a timer; any exception counts as a failure with its message.
template <typename Fn>
void criterion(int id, const std::string& what, int budget, Fn&& fn) {
  bool ok = false;
  std::string detail;
  auto t0 = Clock::now();
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  line(id, what, ok, seconds_since(t0), budget, detail);
}

bool even_permutation(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::vector<int> term_orders(const ESeriesResult& r) {
  std::vector<int> out;
  for (const auto& t : r.terms) out.push_back(t.order());
  return out;
}

// Aggregates the named suites out of a shared full run.
struct SuiteGate {
  int fails = 0;
  int passes = 0;
  double secs = 0.0;
  std::string first_fail;

  void add(const std::map<std::string, const verify::SuiteReport*>& by_id,
           const std::string& id) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      ++fails;
      if (first_fail.empty()) first_fail = "missing suite " + id;
      return;
    }
    const auto& r = *it->second;
    secs += r.elapsed_seconds;
    passes += r.count(verify::Outcome::Pass);
    int f = r.count(verify::Outcome::Fail);
    fails += f;
    if (f && first_fail.empty()) {
      for (const auto& inst : r.results)
        if (inst.outcome == verify::Outcome::Fail) {
          first_fail = id + " / " + inst.instance + ": " + inst.detail;
          break;
        }
    }
  }

  bool clean(std::string& detail) const {
    if (fails) {
      detail = std::to_string(fails) + " failure(s); first: " + first_fail;
      return false;
    }
    if (!passes) {
      detail = "no passing instances";
      return false;
    }
    return true;
  }
};

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";

  criterion(1, "operator values on S3 and S3xS3", 1, [](std::string& d) {
    auto s3 = catalog::build("S3");
    auto a3 = l_set(*s3, 3);
    auto d3 = d_m_group(s3, 3);
    auto d32 = d_mn_group(s3, CoprimePair(3, 2));
    if (d3.members.size() != 3 || d3.members != a3) {
      d = "D_3(S3) != A3";
      return false;
    }
    if (d32.members != a3) {
      d = "D_{3,2}(S3) != A3";
      return false;
    }
    auto s33 = catalog::build("S3xS3");
    auto p3 = d_m_group(s33, 3);
    if (p3.members.size() != 9) {
      d = "|D_3(S3xS3)| = " + std::to_string(p3.members.size());
      return false;
    }
    for (int x : p3.members)
      if (s33->element_order(x) > 3) {
        d = "D_3(S3xS3) has an element of order > 3";
        return false;
      }
    auto p32 = d_mn_group(s33, CoprimePair(3, 2));
    if (p32.members.size() != 1) {
      d = "D_{3,2}(S3xS3) is not trivial";
      return false;
    }
    return true;
  });

  criterion(2, "ascending series of S3 at (3,2)", 1, [](std::string& d) {
    auto s3 = catalog::build("S3");
    auto r = compute_e_series(s3, CoprimePair(3, 2));
    if (term_orders(r) != std::vector<int>{1, 3, 6} || !r.reached) {
      d = "term orders differ from [1,3,6]";
      return false;
    }
    if (r.terms[1].members != l_set(*s3, 3)) {
      d = "first nontrivial term is not A3";
      return false;
    }
    if (r.classification != ESeriesClass::Frobenius) {
      d = "classification is " + to_string(r.classification);
      return false;
    }
    return true;
  });

  criterion(3, "ascending series of S4 at (8,3)", 1, [](std::string& d) {
    auto s4 = catalog::build("S4");
    auto r = compute_e_series(s4, CoprimePair(8, 3));
    if (term_orders(r) != std::vector<int>{1, 4, 12, 24} || !r.reached) {
      d = "term orders differ from [1,4,12,24]";
      return false;
    }
    if (r.terms[1].members != p_core(s4, 2).members) {
      d = "E1 is not the Klein four-group O_2(S4)";
      return false;
    }
    for (int x : r.terms[2].members)
      if (!even_permutation(s4->permutation(x))) {
        d = "E2 contains an odd permutation";
        return false;
      }
    if (!is_normal(*s4, r.terms[2].members)) {
      d = "E2 is not normal";
      return false;
    }
    if (r.classification != ESeriesClass::TwoFrobenius) {
      d = "classification is " + to_string(r.classification);
      return false;
    }
    return true;
  });

  // One shared full run backs criteria 4-9; each gate charges the summed
  // per-suite time of the suites it covers.
  std::vector<verify::SuiteReport> reports;
  std::string run_error;
  try {
    reports = verify::run_all({200, 48});
  } catch (const std::exception& e) {
    run_error = e.what();
  }
  std::map<std::string, const verify::SuiteReport*> by_id;
  for (const auto& r : reports) by_id[r.suite_id] = &r;

  auto gate = [&](int id, const std::string& what, int budget,
                  const std::vector<std::string>& ids) {
    SuiteGate g;
    for (const auto& sid : ids) g.add(by_id, sid);
    std::string detail = run_error;
    bool ok = run_error.empty() && g.clean(detail);
    line(id, what, ok, g.secs, budget, detail);
  };

  gate(4, "L-set divisibility across the corpus", 30,
       {"frobenius-divisibility"});
  gate(5, "operator-law suites", 180,
       {"lemma-2.3-i", "lemma-2.3-ii", "lemma-2.3-iii", "lemma-2.3-iv",
        "lemma-2.5-ii", "lemma-2.5-iii", "remark-2.6", "prop-factor-i",
        "cor-nil2"});
  gate(6, "Frobenius-structure suites", 120,
       {"thm-nil", "thm-fro1", "lemma-2.7", "prop-factor-ii"});
  gate(7, "series-classification suites", 120,
       {"thm-3.5", "thm-r", "thm-can", "remark-3.6", "remark-3.7",
        "cor-fitting-height"});
  gate(8, "nilpotency-criterion suites", 120,
       {"thm-min1", "thm-min2", "lemma-2.16"});
  gate(9, "oracle cross-checks", 120, {"baumslag-wiegold", "sylow-oracle"});

  criterion(10, "byte-identical verify reports over two runs", 300,
            [&](std::string& d) {
              if (tool.empty()) {
                d = "usage: acceptance <path-to-grouptool>";
                return false;
              }
              std::string base = "\"" + tool + "\" verify --suite all --format json";
              int rc1 = run_command(base + " > acceptance_run1.json");
              int rc2 = run_command(base + " > acceptance_run2.json");
              if (rc1 != 0 || rc2 != 0) {
                d = "exit codes " + std::to_string(rc1) + " and " +
                    std::to_string(rc2);
                return false;
              }
              std::string a = slurp("acceptance_run1.json");
              std::string b = slurp("acceptance_run2.json");
              if (a.empty()) {
                d = "empty report";
                return false;
              }
              if (a != b) {
                d = "reports differ between runs";
                return false;
              }
              return true;
            });

  if (g_failed) {
    std::cout << g_failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
