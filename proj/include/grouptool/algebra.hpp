#pragma once

#include <optional>
#include <vector>

#include "grouptool/group.hpp"

namespace grouptool {

// All member lists are sorted ascending; functions returning Subgroup attach
// the parent pointer for self-contained results.

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

std::vector<int> centralizer_members(const Group& g, const std::vector<int>& set);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& set);
Subgroup center(const GroupPtr& g);
Subgroup normalizer(const GroupPtr& g, const std::vector<int>& subgroup_members);

bool is_normal(const Group& g, const std::vector<int>& members);
Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& set);

// Coset table of g by the normal subgroup n; representatives are the smallest
// element id in each coset, and the target's labels come from them.
QuotientMap quotient(const GroupPtr& g, const std::vector<int>& normal_members);

// Reindexes a subgroup as a standalone group (labels inherited).
GroupPtr materialize(const GroupPtr& g, const std::vector<int>& members);

// Sylow p-subgroup by normalizer growth: grow a p-subgroup P by adjoining the
// smallest-id p-element of N_G(P) outside P until |P| is the p-part of |G|.
Subgroup sylow(const GroupPtr& g, int p);
Subgroup p_core(const GroupPtr& g, int p);   // intersection of the conjugates of a Sylow p
Subgroup fitting(const GroupPtr& g);         // join of the p-cores

SeriesResult upper_central_series(const GroupPtr& g);
SeriesResult derived_series(const GroupPtr& g);
SeriesResult fitting_series(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);
std::optional<int> fitting_height(const GroupPtr& g);

// Join-closure enumerations; both throw cap-exceeded when |G| is over the cap.
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    int cap = limits::kSubgroupCapDefault);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       int cap = limits::kNormalCapDefault);

}  // namespace grouptool
