#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grouptool/algebra.hpp"
#include "grouptool/dsub.hpp"
#include "grouptool/group.hpp"

namespace grouptool {

struct FrobeniusWitness {
  Subgroup kernel;
  std::optional<Subgroup> complement;
  // true once C_K(h) = 1 was confirmed for every nontrivial h in the complement
  bool fixed_point_free_checked = false;
};

struct TwoFrobeniusWitness {
  Subgroup lower;         // K, normal in G
  Subgroup middle;        // L, normal in G, K < L
  GroupPtr middle_group;  // L materialized
  FrobeniusWitness inner;   // L Frobenius with kernel K (inside middle_group)
  QuotientMap by_lower;     // G -> G/K
  FrobeniusWitness outer;   // G/K Frobenius with kernel L/K (inside the quotient)
};

// Kernel criterion: K normal, 1 < |K| < |G|, and C_G(k) <= K for every
// nontrivial k in K. This pins down exactly the Frobenius kernels.
bool is_frobenius_with_kernel(const GroupPtr& g, const std::vector<int>& kernel);

// Scans normal subgroups in (order, members) order and returns the first
// kernel hit; complements are searched when |G| fits the subgroup cap.
std::optional<FrobeniusWitness> find_frobenius(
    const GroupPtr& g, int subgroup_cap = limits::kSubgroupCapDefault,
    int normal_cap = limits::kNormalCapDefault);

std::optional<TwoFrobeniusWitness> find_two_frobenius(
    const GroupPtr& g, int subgroup_cap = limits::kSubgroupCapDefault,
    int normal_cap = limits::kNormalCapDefault);

struct SemidirectLawReport {
  bool frobenius_decomposition = false;  // complement acts fixed-point-freely
  bool order_divides = false;            // o(y) | o(xy) for x in K, y in H
  std::optional<std::pair<int, int>> divides_witness;
  bool order_equal = false;              // o(xy) = o(y) for x in K, y in H \ {1}
  std::optional<std::pair<int, int>> equal_witness;
};

// Requires K normal, H a subgroup, K ∩ H = 1 and |K||H| = |G|
// (NotASemidirectDecomposition otherwise).
SemidirectLawReport semidirect_order_law_check(const GroupPtr& g,
                                               const std::vector<int>& kernel,
                                               const std::vector<int>& complement);

// Prime-set condition: pi(o(xy)) ⊆ pi(o(y)) for all x in L_m, y in L_n \ {1}.
// Requires |G| = m*n (OrderMismatch).
bool fro1_condition(const GroupPtr& g, const CoprimePair& p);

// Unrestricted variant quantifying over all coprime-order pairs; informational.
bool fro1_condition_global(const GroupPtr& g);

// True iff P is cyclic, or |P| = 2^t (t >= 3) with a unique involution.
// Requires P to be a p-group (NotAPGroup).
bool cyclic_or_generalized_quaternion(const GroupPtr& p_group);

}  // namespace grouptool
