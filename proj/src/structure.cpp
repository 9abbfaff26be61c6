#include "grouptool/structure.hpp"

#include <algorithm>

#include "grouptool/errors.hpp"
#include "grouptool/numeric.hpp"

namespace grouptool {

namespace {

// Centralizer-confinement check relative to an ambient subgroup amb of g
// (amb = whole group for the plain form). Assumes kernel ⊆ amb.
bool kernel_criterion(const Group& g, const std::vector<int>& amb,
                      const std::vector<int>& kernel) {
  if (kernel.size() <= 1 || kernel.size() >= amb.size()) return false;
  std::vector<char> in_k(g.order(), 0);
  for (int k : kernel) in_k[k] = 1;
  // normal in amb
  for (int a : amb)
    for (int k : kernel)
      if (!in_k[g.conjugate(a, k)]) return false;
  for (int k : kernel) {
    if (k == g.identity()) continue;
    for (int a : amb)
      if (!in_k[a] && g.mult(a, k) == g.mult(k, a)) return false;
  }
  return true;
}

std::vector<int> all_ids(const Group& g) {
  std::vector<int> v(g.order());
  for (int i = 0; i < g.order(); ++i) v[i] = i;
  return v;
}

bool fixed_point_free(const Group& g, const std::vector<int>& kernel,
                      const std::vector<int>& complement) {
  for (int h : complement) {
    if (h == g.identity()) continue;
    for (int k : kernel) {
      if (k == g.identity()) continue;
      if (g.mult(h, k) == g.mult(k, h)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_frobenius_with_kernel(const GroupPtr& g, const std::vector<int>& kernel) {
  return kernel_criterion(*g, all_ids(*g), kernel);
}

std::optional<FrobeniusWitness> find_frobenius(const GroupPtr& g,
                                               int subgroup_cap,
                                               int normal_cap) {
  if (g->order() > normal_cap)
    fail(ErrorCode::CapExceeded,
         "order " + std::to_string(g->order()) + " exceeds normal-enumeration cap");
  for (const Subgroup& n : normal_subgroups(g, normal_cap)) {
    if (!is_frobenius_with_kernel(g, n.members)) continue;
    FrobeniusWitness w{n, std::nullopt, false};
    if (g->order() <= subgroup_cap) {
      const int want = g->order() / n.order();
      for (const Subgroup& h : all_subgroups(g, subgroup_cap)) {
        if (h.order() != want) continue;
        bool meets = false;
        for (int x : h.members)
          if (x != g->identity() && n.contains(x)) {
            meets = true;
            break;
          }
        if (meets) continue;
        w.complement = h;
        w.fixed_point_free_checked = fixed_point_free(*g, n.members, h.members);
        break;
      }
    }
    return w;
  }
  return std::nullopt;
}

std::optional<TwoFrobeniusWitness> find_two_frobenius(const GroupPtr& g,
                                                      int subgroup_cap,
                                                      int normal_cap) {
  std::vector<Subgroup> normals = normal_subgroups(g, normal_cap);
  for (const Subgroup& k : normals) {
    if (k.order() <= 1) continue;
    for (const Subgroup& l : normals) {
      if (l.order() <= k.order() || l.order() >= g->order()) continue;
      if (!std::includes(l.members.begin(), l.members.end(), k.members.begin(),
                         k.members.end()))
        continue;
      if (!kernel_criterion(*g, l.members, k.members)) continue;
      QuotientMap qm = quotient(g, k.members);
      std::vector<int> l_image = qm.image(l.members);
      if (!is_frobenius_with_kernel(qm.target, l_image)) continue;

      TwoFrobeniusWitness w;
      w.lower = k;
      w.middle = l;
      w.middle_group = materialize(g, l.members);
      // reindex K inside the materialized L
      std::vector<int> k_in_l;
      for (std::size_t i = 0; i < l.members.size(); ++i)
        if (k.contains(l.members[i])) k_in_l.push_back(static_cast<int>(i));
      auto inner = find_frobenius(w.middle_group, subgroup_cap,
                                  std::max(normal_cap, w.middle_group->order()));
      if (inner && inner->kernel.members == k_in_l) {
        w.inner = *inner;
      } else {
        w.inner = FrobeniusWitness{Subgroup{w.middle_group, k_in_l}, std::nullopt, false};
      }
      w.by_lower = qm;
      auto outer = find_frobenius(qm.target, subgroup_cap,
                                  std::max(normal_cap, qm.target->order()));
      if (outer && outer->kernel.members == l_image) {
        w.outer = *outer;
      } else {
        w.outer = FrobeniusWitness{Subgroup{qm.target, l_image}, std::nullopt, false};
      }
      return w;
    }
  }
  return std::nullopt;
}

SemidirectLawReport semidirect_order_law_check(const GroupPtr& g,
                                               const std::vector<int>& kernel,
                                               const std::vector<int>& complement) {
  if (!is_normal(*g, kernel))
    fail(ErrorCode::NotASemidirectDecomposition, "K is not normal");
  std::vector<char> in_k(g->order(), 0);
  for (int k : kernel) in_k[k] = 1;
  int meet = 0;
  for (int h : complement)
    if (in_k[h]) ++meet;
  if (meet != 1 ||
      static_cast<long long>(kernel.size()) * complement.size() != g->order())
    fail(ErrorCode::NotASemidirectDecomposition,
         "K and H do not decompose G (|K||H| != |G| or K ∩ H != 1)");

  SemidirectLawReport r;
  r.frobenius_decomposition = fixed_point_free(*g, kernel, complement);
  r.order_divides = true;
  r.order_equal = true;
  for (int y : complement) {
    const int oy = g->element_order(y);
    for (int x : kernel) {
      const int oxy = g->element_order(g->mult(x, y));
      if (oxy % oy != 0 && r.order_divides) {
        r.order_divides = false;
        r.divides_witness = {x, y};
      }
      if (y != g->identity() && oxy != oy && r.order_equal) {
        r.order_equal = false;
        r.equal_witness = {x, y};
      }
    }
  }
  return r;
}

namespace {

bool prime_subset(int a, int b) {
  // primes(a) ⊆ primes(b)
  for (int p : prime_divisors(a))
    if (b % p != 0) return false;
  return true;
}

}  // namespace

bool fro1_condition(const GroupPtr& g, const CoprimePair& p) {
  if (static_cast<long long>(p.m) * p.n != g->order())
    fail(ErrorCode::OrderMismatch, "|G| != m*n");
  std::vector<int> lm = l_set(*g, p.m);
  std::vector<int> ln = l_set(*g, p.n);
  for (int y : ln) {
    if (y == g->identity()) continue;
    const int oy = g->element_order(y);
    for (int x : lm)
      if (!prime_subset(g->element_order(g->mult(x, y)), oy)) return false;
  }
  return true;
}

bool fro1_condition_global(const GroupPtr& g) {
  for (int y = 0; y < g->order(); ++y) {
    if (y == g->identity()) continue;
    const int oy = g->element_order(y);
    for (int x = 0; x < g->order(); ++x) {
      if (x == g->identity()) continue;
      if (std::gcd(g->element_order(x), oy) != 1) continue;
      if (!prime_subset(g->element_order(g->mult(x, y)), oy)) return false;
    }
  }
  return true;
}

bool cyclic_or_generalized_quaternion(const GroupPtr& p_group) {
  int n = p_group->order();
  if (n == 1) return true;  // trivial group counts as cyclic
  int p = 0;
  if (!is_prime_power(n, &p))
    fail(ErrorCode::NotAPGroup, "order " + std::to_string(n) + " is not a prime power");
  for (int x = 0; x < n; ++x) {
    int o = p_group->element_order(x);
    if (o > 1 && o != p_part(o, p))
      fail(ErrorCode::NotAPGroup, "mixed element orders");
  }
  for (int x = 0; x < n; ++x)
    if (p_group->element_order(x) == n) return true;  // cyclic
  if (p != 2 || n < 8) return false;
  int involutions = 0;
  for (int x = 0; x < n; ++x)
    if (p_group->element_order(x) == 2) ++involutions;
  return involutions == 1;
}

}  // namespace grouptool
