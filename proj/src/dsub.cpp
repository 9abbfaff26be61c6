#include "grouptool/dsub.hpp"

#include <algorithm>
#include <numeric>

#include "grouptool/algebra.hpp"
#include "grouptool/errors.hpp"

namespace grouptool {

CoprimePair::CoprimePair(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidParams, "m and n must be >= 1");
  if (std::gcd(m, n) != 1) fail(ErrorCode::InvalidParams, "m and n must be coprime");
}

std::vector<int> l_set(const Group& g, int m) {
  if (m < 1) fail(ErrorCode::InvalidParams, "m must be >= 1");
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (m % g.element_order(x) == 0) out.push_back(x);
  return out;
}

namespace {

void require_m_element(const Group& g, int x, int m) {
  if (x < 0 || x >= g.order())
    fail(ErrorCode::InvalidParams, "element id out of range");
  if (m % g.element_order(x) != 0)
    fail(ErrorCode::NotAnMElement,
         "element " + std::to_string(x) + " has order " +
             std::to_string(g.element_order(x)) + ", not a divisor of " +
             std::to_string(m));
}

}  // namespace

std::vector<int> d_m_of_element(const Group& g, int x, int m) {
  require_m_element(g, x, m);
  std::vector<int> out;
  for (int y : l_set(g, m))
    if (m % g.element_order(g.mult(x, y)) == 0) out.push_back(y);
  return out;
}

std::vector<int> d_mn_of_element(const Group& g, int x, const CoprimePair& p) {
  require_m_element(g, x, p.m);
  std::vector<int> out;
  for (int u : l_set(g, p.n))
    if (p.n % g.element_order(g.mult(x, u)) == 0) out.push_back(u);
  return out;
}

namespace {

void check_closed(const Group& g, const std::vector<int>& members,
                  const char* what) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) in[m] = 1;
  if (!in[g.identity()])
    fail(ErrorCode::InternalInconsistency,
         std::string(what) + " does not contain the identity");
  for (int a : members) {
    if (!in[g.inverse(a)])
      fail(ErrorCode::InternalInconsistency,
           std::string(what) + " is not closed under inverses at " +
               std::to_string(a));
    for (int b : members)
      if (!in[g.mult(a, b)])
        fail(ErrorCode::InternalInconsistency,
             std::string(what) + " is not closed under products at (" +
                 std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

DResult d_m_group(const GroupPtr& g, int m) {
  DResult r{DKind::DmGroup, m, 1, {}, false, std::nullopt};
  std::vector<int> lm = l_set(*g, m);
  for (int x : lm) {
    bool ok = true;
    for (int y : lm) {
      if (m % g->element_order(g->mult(x, y)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) r.members.push_back(x);
  }
  check_closed(*g, r.members, "D_m(G)");
  r.is_subgroup = true;
  return r;
}

DResult d_mn_group(const GroupPtr& g, const CoprimePair& p) {
  DResult r{DKind::DmnGroup, p.m, p.n, {}, false, std::nullopt};
  std::vector<int> ln = l_set(*g, p.n);
  if (p.n == 1 || static_cast<int>(ln.size()) == 1) {
    // No nontrivial n-element (equivalently gcd(exp G, n) = 1): trivial.
    r.members = {g->identity()};
    r.is_subgroup = true;
    r.nilpotent = true;
    return r;
  }
  std::vector<int> ln_star;
  for (int u : ln)
    if (u != g->identity()) ln_star.push_back(u);
  for (int x : l_set(*g, p.m)) {
    bool ok = true;
    for (int u : ln_star) {
      if (p.n % g->element_order(g->mult(x, u)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) r.members.push_back(x);
  }
  check_closed(*g, r.members, "D_{m,n}(G)");
  r.is_subgroup = true;
  r.nilpotent = is_nilpotent(materialize(g, r.members));
  if (!*r.nilpotent &&
      static_cast<long long>(p.m) * p.n == g->order())
    fail(ErrorCode::InternalInconsistency,
         "D_{m,n}(G) not nilpotent though |G| = m*n");
  return r;
}

Subgroup d_subgroup(const GroupPtr& g, const DResult& r) {
  return Subgroup{g, r.members};
}

}  // namespace grouptool
