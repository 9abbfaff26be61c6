#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouptool/dsub.hpp"
#include "grouptool/group.hpp"

namespace grouptool {

enum class ESeriesClass {
  Nilpotent,      // reaches G with length <= 2
  Frobenius,      // length 3
  TwoFrobenius,   // length 4
  NotENilpotent,  // never reaches G
  Unclassified,   // reaches G with length > 4 (flagged; should not happen)
};

std::string to_string(ESeriesClass c);

struct ESeriesResult {
  CoprimePair params;
  std::vector<Subgroup> terms;  // E_0 = 1, ascending, normal in G
  bool reached = false;
  std::optional<int> length;         // first k with E_k = G, plus one
  std::optional<int> stabilized_at;  // index of the first repeated term
  ESeriesClass classification = ESeriesClass::NotENilpotent;
  bool theorem_violation = false;    // set when length > 4
};

// Ascending series: odd steps apply D_{m,n} and even steps D_{n,m} to
// G/E_k, pulling the result back; a nilpotent quotient jumps straight to G.
// Stops at G, at the first repeated term, or after max_steps.
ESeriesResult compute_e_series(const GroupPtr& g, const CoprimePair& p,
                               int max_steps = 8);

ESeriesClass classify(const GroupPtr& g, const CoprimePair& p);

enum class CheckOutcome { Pass, Fail, Skip };

struct StabilizationReport {
  CheckOutcome outcome = CheckOutcome::Skip;
  std::string detail;
};

// Computes E_0..E_4 (continuing through repeats) and verifies E_3 = E_4.
// Skipped when |G| != m*n, when m or n is 1, or when G is nilpotent.
StabilizationReport stabilization_check(const GroupPtr& g, const CoprimePair& p);

// All (m, n) with m*n = order, gcd(m, n) = 1, m, n > 1 — both orientations,
// ascending in m.
std::vector<CoprimePair> coprime_factorizations(int order);

}  // namespace grouptool
