#pragma once

#include <optional>
#include <vector>

#include "grouptool/group.hpp"

namespace grouptool {

struct CoprimePair {
  int m = 1;
  int n = 1;
  CoprimePair(int m_, int n_);  // throws InvalidParams unless m,n >= 1 and coprime
  CoprimePair swapped() const { return CoprimePair(n, m); }
};

enum class DKind { LSet, DmOfElement, DmnOfElement, DmGroup, DmnGroup };

struct DResult {
  DKind kind;
  int m = 1;
  int n = 1;
  std::vector<int> members;  // sorted element ids
  bool is_subgroup = false;
  std::optional<bool> nilpotent;  // computed for the D_{m,n} subgroup only
};

// L_m(G) = { x : x^m = 1 }.
std::vector<int> l_set(const Group& g, int m);

// D_m(x) = { y in L_m : o(xy) | m }; requires x in L_m (NotAnMElement).
std::vector<int> d_m_of_element(const Group& g, int x, int m);

// D_{m,n}(x) = { u in L_n : o(xu) | n }; requires x in L_m.
std::vector<int> d_mn_of_element(const Group& g, int x, const CoprimePair& p);

// D_m(G) = { x in L_m : D_m(x) = L_m }. The member set is verified closed
// under multiplication and inverses (InternalInconsistency otherwise).
DResult d_m_group(const GroupPtr& g, int m);

// D_{m,n}(G): trivial when no nontrivial n-element exists; otherwise
// { x in L_m : every u in L_n \ {1} has o(xu) | n }. Closure is always
// verified; nilpotency is computed, and enforced when |G| = m*n.
DResult d_mn_group(const GroupPtr& g, const CoprimePair& p);

Subgroup d_subgroup(const GroupPtr& g, const DResult& r);

}  // namespace grouptool
