#include "grouptool/eseries.hpp"

#include <algorithm>

#include "grouptool/algebra.hpp"
#include "grouptool/errors.hpp"
#include "grouptool/numeric.hpp"

namespace grouptool {

std::string to_string(ESeriesClass c) {
  switch (c) {
    case ESeriesClass::Nilpotent: return "nilpotent";
    case ESeriesClass::Frobenius: return "frobenius";
    case ESeriesClass::TwoFrobenius: return "two-frobenius";
    case ESeriesClass::NotENilpotent: return "not-e-nilpotent";
    case ESeriesClass::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

// One step of the series on the current term; step_index is 1-based.
std::vector<int> e_step(const GroupPtr& g, const std::vector<int>& current,
                        const CoprimePair& p, int step_index) {
  QuotientMap qm = quotient(g, current);
  if (is_nilpotent(qm.target)) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return all;
  }
  CoprimePair use = (step_index % 2 == 1) ? p : p.swapped();
  DResult d = d_mn_group(qm.target, use);
  return qm.preimage(d.members);
}

}  // namespace

ESeriesResult compute_e_series(const GroupPtr& g, const CoprimePair& p,
                               int max_steps) {
  ESeriesResult r{p, {}, false, std::nullopt, std::nullopt,
                  ESeriesClass::NotENilpotent, false};
  r.terms.push_back(trivial_subgroup(g));
  if (g->order() == 1) {
    r.reached = true;
    r.length = 1;
  }
  for (int s = 1; !r.reached && s <= max_steps; ++s) {
    std::vector<int> next = e_step(g, r.terms.back().members, p, s);
    if (!is_normal(*g, next))
      fail(ErrorCode::InternalInconsistency, "series term not normal");
    bool repeat = next == r.terms.back().members;
    r.terms.push_back(Subgroup{g, std::move(next)});
    if (r.terms.back().order() == g->order()) {
      r.reached = true;
      r.length = static_cast<int>(r.terms.size());
      break;
    }
    if (repeat) {
      r.stabilized_at = static_cast<int>(r.terms.size()) - 1;
      break;
    }
  }
  if (r.reached) {
    int len = *r.length;
    if (len <= 2) r.classification = ESeriesClass::Nilpotent;
    else if (len == 3) r.classification = ESeriesClass::Frobenius;
    else if (len == 4) r.classification = ESeriesClass::TwoFrobenius;
    else {
      r.classification = ESeriesClass::Unclassified;
      r.theorem_violation = true;
    }
  } else {
    r.classification = ESeriesClass::NotENilpotent;
  }
  return r;
}

ESeriesClass classify(const GroupPtr& g, const CoprimePair& p) {
  return compute_e_series(g, p).classification;
}

StabilizationReport stabilization_check(const GroupPtr& g, const CoprimePair& p) {
  StabilizationReport rep;
  if (p.m == 1 || p.n == 1) {
    rep.outcome = CheckOutcome::Skip;
    rep.detail = "m and n must both exceed 1";
    return rep;
  }
  if (static_cast<long long>(p.m) * p.n != g->order()) {
    rep.outcome = CheckOutcome::Skip;
    rep.detail = "|G| != m*n";
    return rep;
  }
  if (is_nilpotent(g)) {
    rep.outcome = CheckOutcome::Skip;
    rep.detail = "G is nilpotent";
    return rep;
  }
  // E_0..E_4 by raw operator application: unlike the series proper, a
  // nilpotent quotient does not promote the term to G here.
  std::vector<std::vector<int>> terms;
  terms.push_back({g->identity()});
  for (int s = 1; s <= 4; ++s) {
    QuotientMap qm = quotient(g, terms.back());
    CoprimePair use = (s % 2 == 1) ? p : p.swapped();
    terms.push_back(qm.preimage(d_mn_group(qm.target, use).members));
  }
  bool ok = terms[3] == terms[4];
  rep.outcome = ok ? CheckOutcome::Pass : CheckOutcome::Fail;
  std::string orders;
  for (const auto& t : terms) {
    if (!orders.empty()) orders += ",";
    orders += std::to_string(t.size());
  }
  rep.detail = "term orders [" + orders + "]";
  return rep;
}

std::vector<CoprimePair> coprime_factorizations(int order) {
  std::vector<CoprimePair> out;
  auto f = factorize(order);
  const int k = static_cast<int>(f.size());
  if (k < 2) return out;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    int m = 1;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) m *= p_part(order, f[i].first);
    out.emplace_back(m, order / m);
  }
  std::sort(out.begin(), out.end(),
            [](const CoprimePair& a, const CoprimePair& b) { return a.m < b.m; });
  return out;
}

}  // namespace grouptool
