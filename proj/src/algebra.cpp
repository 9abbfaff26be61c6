#include "grouptool/algebra.hpp"

#include <algorithm>
#include <set>

#include "grouptool/errors.hpp"
#include "grouptool/numeric.hpp"

namespace grouptool {

namespace {

// Right-multiplication closure from the identity; in a finite group this is
// exactly the generated subgroup.
std::vector<int> closure_members(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out;
  in[g.identity()] = 1;
  out.push_back(g.identity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int gen : gens) {
      int nxt = g.mult(out[i], gen);
      if (!in[nxt]) {
        in[nxt] = 1;
        out.push_back(nxt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members) {
  return Subgroup{g, std::move(members)};
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  return make_subgroup(g, closure_members(*g, gens));
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return make_subgroup(g, {g->identity()});
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return make_subgroup(g, std::move(all));
}

std::vector<int> centralizer_members(const Group& g, const std::vector<int>& set) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : set) {
      if (g.mult(x, s) != g.mult(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& set) {
  return make_subgroup(g, centralizer_members(*g, set));
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return centralizer(g, all);
}

Subgroup normalizer(const GroupPtr& g, const std::vector<int>& subgroup_members) {
  std::vector<char> in(g->order(), 0);
  for (int m : subgroup_members) in[m] = 1;
  std::vector<int> out;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : subgroup_members) {
      if (!in[g->conjugate(x, m)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return make_subgroup(g, std::move(out));
}

bool is_normal(const Group& g, const std::vector<int>& members) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) in[m] = 1;
  for (int x = 0; x < g.order(); ++x)
    for (int m : members)
      if (!in[g.conjugate(x, m)]) return false;
  return true;
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& set) {
  std::vector<int> gens;
  for (int x = 0; x < g->order(); ++x)
    for (int s : set) gens.push_back(g->conjugate(x, s));
  return make_subgroup(g, closure_members(*g, sorted_unique(std::move(gens))));
}

QuotientMap quotient(const GroupPtr& g, const std::vector<int>& normal_members) {
  if (!is_normal(*g, normal_members))
    fail(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const int n = g->order();
  QuotientMap qm;
  qm.source = g;
  qm.kernel_members = sorted_unique(normal_members);
  qm.projection.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (qm.projection[x] >= 0) continue;
    int id = static_cast<int>(qm.representative.size());
    qm.representative.push_back(x);
    for (int m : qm.kernel_members) qm.projection[g->mult(x, m)] = id;
  }
  const int k = static_cast<int>(qm.representative.size());
  if (k > limits::kDenseTableMax)
    fail(ErrorCode::CapExceeded, "quotient order " + std::to_string(k) +
                                     " exceeds dense bound");
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = g->label(qm.representative[i]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      flat[static_cast<std::size_t>(i) * k + j] =
          qm.projection[g->mult(qm.representative[i], qm.representative[j])];
  qm.target = Group::from_trusted_table(
      std::move(flat), k,
      g->name() + "/N" + std::to_string(qm.kernel_members.size()),
      std::move(labels),
      "quotient:" + g->source() + "/N" + std::to_string(qm.kernel_members.size()));
  return qm;
}

GroupPtr materialize(const GroupPtr& g, const std::vector<int>& members_in) {
  std::vector<int> members = sorted_unique(members_in);
  const int k = static_cast<int>(members.size());
  std::vector<int> idx(g->order(), -1);
  for (int i = 0; i < k; ++i) idx[members[i]] = i;
  if (k <= limits::kDenseTableMax) {
    std::vector<int> flat(static_cast<std::size_t>(k) * k);
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = g->label(members[i]);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int v = idx[g->mult(members[i], members[j])];
        if (v < 0)
          fail(ErrorCode::InternalInconsistency,
               "member set is not closed under multiplication");
        flat[static_cast<std::size_t>(i) * k + j] = v;
      }
    return Group::from_trusted_table(
        std::move(flat), k, g->name() + "|sub" + std::to_string(k),
        std::move(labels), "subgroup:" + g->source() + "|" + std::to_string(k));
  }
  if (!g->has_permutations())
    fail(ErrorCode::CapExceeded,
         "subgroup order " + std::to_string(k) + " exceeds dense bound");
  std::vector<Perm> perms;
  perms.reserve(k);
  for (int m : members) perms.push_back(g->permutation(m));
  return Group::from_trusted_perms(perms, g->name() + "|sub" + std::to_string(k),
                                   "subgroup:" + g->source() + "|" + std::to_string(k));
}

Subgroup sylow(const GroupPtr& g, int p) {
  if (p < 2) fail(ErrorCode::InvalidParams, "p must be a prime");
  const int target = p_part(g->order(), p);
  if (target == 1) return trivial_subgroup(g);
  // Seed: the smallest-id element of nontrivial p-power order.
  int seed = -1;
  for (int x = 0; x < g->order(); ++x) {
    int o = g->element_order(x);
    if (o > 1 && o == p_part(o, p)) {
      seed = x;
      break;
    }
  }
  if (seed < 0)
    fail(ErrorCode::InternalInconsistency, "no p-element found though p divides the order");
  Subgroup P = subgroup_generated(g, {seed});
  while (P.order() < target) {
    Subgroup N = normalizer(g, P.members);
    int next = -1;
    for (int x : N.members) {
      if (P.contains(x)) continue;
      int o = g->element_order(x);
      if (o > 1 && o == p_part(o, p)) {
        next = x;
        break;
      }
    }
    if (next < 0)
      fail(ErrorCode::InternalInconsistency,
           "normalizer growth stalled below the full p-part");
    std::vector<int> gens = P.members;
    gens.push_back(next);
    P = subgroup_generated(g, gens);
  }
  return P;
}

Subgroup p_core(const GroupPtr& g, int p) {
  Subgroup P = sylow(g, p);
  std::vector<char> common(g->order(), 0);
  for (int m : P.members) common[m] = 1;
  for (int x = 0; x < g->order(); ++x) {
    std::vector<char> conj(g->order(), 0);
    for (int m : P.members) conj[g->conjugate(x, m)] = 1;
    for (int i = 0; i < g->order(); ++i) common[i] = common[i] && conj[i];
  }
  std::vector<int> members;
  for (int i = 0; i < g->order(); ++i)
    if (common[i]) members.push_back(i);
  return make_subgroup(g, std::move(members));
}

Subgroup fitting(const GroupPtr& g) {
  std::vector<int> gens;
  for (int p : prime_divisors(g->order())) {
    Subgroup c = p_core(g, p);
    gens.insert(gens.end(), c.members.begin(), c.members.end());
  }
  if (gens.empty()) return trivial_subgroup(g);
  return make_subgroup(g, closure_members(*g, sorted_unique(std::move(gens))));
}

SeriesResult upper_central_series(const GroupPtr& g) {
  SeriesResult r{SeriesKind::UpperCentral, {}, false};
  std::vector<char> in(g->order(), 0);
  in[g->identity()] = 1;
  r.terms.push_back(trivial_subgroup(g));
  while (true) {
    // Z_{i+1} = { x : [x,y] in Z_i for all y }
    std::vector<int> next;
    for (int x = 0; x < g->order(); ++x) {
      bool ok = true;
      for (int y = 0; y < g->order(); ++y) {
        if (!in[g->commutator(x, y)]) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(x);
    }
    if (static_cast<int>(next.size()) == r.terms.back().order()) break;
    std::fill(in.begin(), in.end(), 0);
    for (int x : next) in[x] = 1;
    r.terms.push_back(make_subgroup(g, std::move(next)));
  }
  r.reached = r.terms.back().order() == g->order();
  return r;
}

namespace {

std::vector<int> commutator_subgroup_members(const Group& g,
                                             const std::vector<int>& members) {
  std::vector<int> gens;
  for (int a : members)
    for (int b : members) gens.push_back(g.commutator(a, b));
  return closure_members(g, sorted_unique(std::move(gens)));
}

}  // namespace

SeriesResult derived_series(const GroupPtr& g) {
  SeriesResult r{SeriesKind::Derived, {}, false};
  r.terms.push_back(whole_group(g));
  while (true) {
    std::vector<int> next = commutator_subgroup_members(*g, r.terms.back().members);
    if (static_cast<int>(next.size()) == r.terms.back().order()) break;
    r.terms.push_back(make_subgroup(g, std::move(next)));
  }
  r.reached = r.terms.back().order() == 1;
  return r;
}

SeriesResult fitting_series(const GroupPtr& g) {
  SeriesResult r{SeriesKind::Fitting, {}, false};
  r.terms.push_back(trivial_subgroup(g));
  if (g->order() == 1) {
    r.reached = true;
    return r;
  }
  while (true) {
    QuotientMap qm = quotient(g, r.terms.back().members);
    Subgroup f = fitting(qm.target);
    std::vector<int> next = qm.preimage(f.members);
    if (static_cast<int>(next.size()) == r.terms.back().order()) break;  // stalled
    r.terms.push_back(make_subgroup(g, std::move(next)));
    if (r.terms.back().order() == g->order()) {
      r.reached = true;
      break;
    }
  }
  return r;
}

bool is_nilpotent(const GroupPtr& g) { return upper_central_series(g).reached; }

bool is_solvable(const GroupPtr& g) { return derived_series(g).reached; }

std::optional<int> fitting_height(const GroupPtr& g) {
  SeriesResult s = fitting_series(g);
  if (!s.reached) return std::nullopt;
  return std::max<int>(1, static_cast<int>(s.terms.size()) - 1);
}

namespace {

// Join-closure over a seed family of subgroups (member vectors, sorted).
std::vector<std::vector<int>> join_closure(const Group& g,
                                           std::set<std::vector<int>> seeds) {
  std::vector<std::vector<int>> work(seeds.begin(), seeds.end());
  std::set<std::vector<int>> all = std::move(seeds);
  for (std::size_t i = 0; i < work.size(); ++i) {
    // Join work[i] with everything discovered so far.
    std::vector<std::vector<int>> snapshot(all.begin(), all.end());
    for (const auto& other : snapshot) {
      std::vector<int> gens = work[i];
      gens.insert(gens.end(), other.begin(), other.end());
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      std::vector<int> j = closure_members(g, gens);
      if (all.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<std::vector<int>> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap) {
  if (g->order() > cap)
    fail(ErrorCode::CapExceeded, "order " + std::to_string(g->order()) +
                                     " exceeds subgroup-enumeration cap " +
                                     std::to_string(cap));
  std::set<std::vector<int>> seeds;
  for (int x = 0; x < g->order(); ++x)
    seeds.insert(closure_members(*g, {x}));
  std::vector<Subgroup> out;
  for (auto& m : join_closure(*g, std::move(seeds)))
    out.push_back(make_subgroup(g, std::move(m)));
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, int cap) {
  if (g->order() > cap)
    fail(ErrorCode::CapExceeded, "order " + std::to_string(g->order()) +
                                     " exceeds normal-enumeration cap " +
                                     std::to_string(cap));
  std::set<std::vector<int>> seeds;
  seeds.insert({g->identity()});
  for (int x = 0; x < g->order(); ++x)
    seeds.insert(normal_closure(g, {x}).members);
  std::vector<Subgroup> out;
  for (auto& m : join_closure(*g, std::move(seeds)))
    out.push_back(make_subgroup(g, std::move(m)));
  return out;
}

}  // namespace grouptool
