#include "grouptool/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grouptool/algebra.hpp"
#include "grouptool/catalog.hpp"
#include "grouptool/dsub.hpp"
#include "grouptool/errors.hpp"
#include "grouptool/eseries.hpp"
#include "grouptool/numeric.hpp"
#include "grouptool/structure.hpp"

namespace grouptool::verify {
namespace {

// Shared sweep state: the corpus under the order cap plus lazy caches for the
// group builds and the expensive per-group computations reused across suites.
struct Ctx {
  VerifyOptions opt;
  std::vector<catalog::CatalogEntry> corpus;

  std::map<std::string, GroupPtr> groups;
  std::map<std::string, DResult> dm_cache;
  std::map<std::string, DResult> dmn_cache;
  std::map<std::string, std::vector<Subgroup>> subs_cache;
  std::map<std::string, std::vector<Subgroup>> normals_cache;
  std::map<std::string, std::optional<FrobeniusWitness>> frob_cache;
  std::map<std::string, ESeriesResult> series_cache;
  std::map<std::string, bool> nilpotent_cache;

  explicit Ctx(const VerifyOptions& o)
      : opt(o), corpus(catalog::standard_corpus(o.max_order)) {}

  bool in_corpus(const std::string& name) const {
    for (const auto& e : corpus)
      if (e.name == name) return true;
    return false;
  }

  const GroupPtr& get(const std::string& name) {
    auto it = groups.find(name);
    if (it == groups.end()) it = groups.emplace(name, catalog::build(name)).first;
    return it->second;
  }

  const DResult& dm(const std::string& name, const GroupPtr& g, int m) {
    std::string key = name + "|" + std::to_string(m);
    auto it = dm_cache.find(key);
    if (it == dm_cache.end())
      it = dm_cache.emplace(key, d_m_group(g, m)).first;
    return it->second;
  }

  const DResult& dmn(const std::string& name, const GroupPtr& g,
                     const CoprimePair& p) {
    std::string key =
        name + "|" + std::to_string(p.m) + "," + std::to_string(p.n);
    auto it = dmn_cache.find(key);
    if (it == dmn_cache.end())
      it = dmn_cache.emplace(key, d_mn_group(g, p)).first;
    return it->second;
  }

  // Cap-free on purpose: callers gate on group order before asking.
  const std::vector<Subgroup>& subgroups(const std::string& name,
                                         const GroupPtr& g) {
    auto it = subs_cache.find(name);
    if (it == subs_cache.end())
      it = subs_cache.emplace(name, all_subgroups(g, g->order())).first;
    return it->second;
  }

  const std::vector<Subgroup>& normals(const std::string& name,
                                       const GroupPtr& g) {
    auto it = normals_cache.find(name);
    if (it == normals_cache.end())
      it = normals_cache.emplace(name, normal_subgroups(g)).first;
    return it->second;
  }

  const std::optional<FrobeniusWitness>& frobenius(const std::string& name,
                                                   const GroupPtr& g) {
    auto it = frob_cache.find(name);
    if (it == frob_cache.end())
      it = frob_cache.emplace(name, find_frobenius(g, opt.subgroup_cap)).first;
    return it->second;
  }

  const ESeriesResult& series(const std::string& name, const GroupPtr& g,
                              const CoprimePair& p) {
    std::string key =
        name + "|" + std::to_string(p.m) + "," + std::to_string(p.n);
    auto it = series_cache.find(key);
    if (it == series_cache.end())
      it = series_cache.emplace(key, compute_e_series(g, p)).first;
    return it->second;
  }

  bool nilpotent(const std::string& name, const GroupPtr& g) {
    auto it = nilpotent_cache.find(name);
    if (it == nilpotent_cache.end())
      it = nilpotent_cache.emplace(name, is_nilpotent(g)).first;
    return it->second;
  }
};

std::string pair_tag(const std::string& name, const CoprimePair& p) {
  return name + " (" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

std::string show(const Group& g, int x) {
  return g.label(x) + "#" + std::to_string(x);
}

void add_pass(SuiteReport& r, std::string inst, std::string detail = "") {
  r.results.push_back({std::move(inst), Outcome::Pass, std::move(detail)});
}

void add_fail(SuiteReport& r, std::string inst, std::string detail) {
  r.results.push_back({std::move(inst), Outcome::Fail, std::move(detail)});
}

void add_skip(SuiteReport& r, std::string inst, std::string reason) {
  r.results.push_back({std::move(inst), Outcome::Skip, std::move(reason)});
}

void check(SuiteReport& r, std::string inst, bool ok, std::string fail_detail,
           std::string pass_detail = "") {
  if (ok)
    add_pass(r, std::move(inst), std::move(pass_detail));
  else
    add_fail(r, std::move(inst), std::move(fail_detail));
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool closed_set(const Group& g, const std::vector<int>& members) {
  for (int a : members) {
    if (!std::binary_search(members.begin(), members.end(), g.inverse(a)))
      return false;
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), g.mult(a, b)))
        return false;
  }
  return true;
}

std::vector<int> product_set(const Group& g, const std::vector<int>& xs,
                             const std::vector<int>& ys) {
  std::vector<int> out;
  out.reserve(xs.size() * ys.size());
  for (int x : xs)
    for (int y : ys) out.push_back(g.mult(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Element ids of A x B for the pairs (a, b), a in xs, b in ys (id = a*|B|+b).
std::vector<int> cartesian_ids(const std::vector<int>& xs,
                               const std::vector<int>& ys, int nb) {
  std::vector<int> out;
  out.reserve(xs.size() * ys.size());
  for (int a : xs)
    for (int b : ys) out.push_back(a * nb + b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> index_in(const std::vector<int>& members,
                          const std::vector<int>& subset) {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int x : subset) {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    out.push_back(static_cast<int>(it - members.begin()));
  }
  return out;
}

std::string orders_of(const std::vector<Subgroup>& terms) {
  std::string s = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(terms[i].order());
  }
  return s + "]";
}

template <typename Fn>
void for_each_pair(Ctx& ctx, Fn&& fn) {
  for (const auto& e : ctx.corpus) {
    auto pairs = coprime_factorizations(e.order);
    if (pairs.empty()) continue;
    const GroupPtr& g = ctx.get(e.name);
    for (const auto& p : pairs) fn(e.name, g, p);
  }
}

std::string cap_reason(const Ctx& ctx) {
  return "order exceeds subgroup cap (" + std::to_string(ctx.opt.subgroup_cap) +
         ")";
}

// --------------------------------------------------------------------------
// Worked examples pinned to exact values.

void suite_example_2_4(Ctx& ctx, SuiteReport& rep) {
  if (ctx.in_corpus("S3")) {
    const GroupPtr& s3 = ctx.get("S3");
    const auto& d3 = ctx.dm("S3", s3, 3);
    const auto& d32 = ctx.dmn("S3", s3, CoprimePair(3, 2));
    check(rep, "D_3(S3)", d3.members.size() == 3,
          "expected order 3, got " + std::to_string(d3.members.size()),
          "order 3, cyclic");
    check(rep, "D_{3,2}(S3)",
          d32.members.size() == 3 && d32.members == d3.members,
          "expected the same order-3 subgroup as D_3(S3)", "equals D_3(S3)");
  }
  if (ctx.in_corpus("S3xS3")) {
    const GroupPtr& s33 = ctx.get("S3xS3");
    const auto& d3 = ctx.dm("S3xS3", s33, 3);
    const auto& d32 = ctx.dmn("S3xS3", s33, CoprimePair(3, 2));
    bool exp3 = true;
    for (int x : d3.members)
      if (s33->element_order(x) > 3) exp3 = false;
    check(rep, "D_3(S3xS3)", d3.members.size() == 9 && exp3,
          "expected order 9 of exponent 3, got order " +
              std::to_string(d3.members.size()),
          "order 9, exponent 3");
    check(rep, "D_{3,2}(S3xS3)", d32.members.size() == 1,
          "expected the trivial subgroup, got order " +
              std::to_string(d32.members.size()),
          "trivial");
  }
}

void suite_example_3_3(Ctx& ctx, SuiteReport& rep) {
  if (!ctx.in_corpus("S3")) return;
  const GroupPtr& s3 = ctx.get("S3");
  const auto& ser = ctx.series("S3", s3, CoprimePair(3, 2));
  check(rep, "S3 (3,2) terms",
        ser.reached && orders_of(ser.terms) == "[1,3,6]",
        "expected [1,3,6], got " + orders_of(ser.terms), orders_of(ser.terms));
  check(rep, "S3 (3,2) classification",
        ser.classification == ESeriesClass::Frobenius,
        "expected frobenius, got " + to_string(ser.classification));
  check(rep, "S3 (3,2) first term",
        ser.terms.size() > 1 && ser.terms[1].members == fitting(s3).members,
        "first nontrivial term differs from the Fitting subgroup",
        "equals Fit(S3)");
}

void suite_example_3_4(Ctx& ctx, SuiteReport& rep) {
  if (!ctx.in_corpus("S4")) return;
  const GroupPtr& s4 = ctx.get("S4");
  const auto& ser = ctx.series("S4", s4, CoprimePair(8, 3));
  check(rep, "S4 (8,3) terms",
        ser.reached && orders_of(ser.terms) == "[1,4,12,24]",
        "expected [1,4,12,24], got " + orders_of(ser.terms),
        orders_of(ser.terms));
  check(rep, "S4 (8,3) classification",
        ser.classification == ESeriesClass::TwoFrobenius,
        "expected two-frobenius, got " + to_string(ser.classification));
  check(rep, "S4 (8,3) first term",
        ser.terms.size() > 1 &&
            ser.terms[1].members == p_core(s4, 2).members,
        "first nontrivial term differs from O_2(S4)", "equals O_2(S4)");
  bool e2_ok = false;
  if (ser.terms.size() > 2) {
    for (const auto& n : ctx.normals("S4", s4))
      if (n.order() == 12 && n.members == ser.terms[2].members) e2_ok = true;
  }
  check(rep, "S4 (8,3) second term", e2_ok,
        "second term is not the order-12 normal subgroup",
        "the order-12 normal subgroup");
}

// --------------------------------------------------------------------------
// Operator laws.

void suite_lemma_2_3_i(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& normals = ctx.normals(name, g);
    for (std::size_t ni = 0; ni < normals.size(); ++ni) {
      const auto& n = normals[ni];
      std::string inst = pair_tag(name, p) + " N" + std::to_string(ni + 1) +
                         "=" + std::to_string(n.order());
      QuotientMap q = quotient(g, n.members);
      const Group& t = *q.target;
      bool ok = true;
      std::string wit;
      for (int x : l_set(*g, p.m)) {
        int xq = q.projection[x];
        auto im_dm = q.image(d_m_of_element(*g, x, p.m));
        if (!subset_of(im_dm, d_m_of_element(t, xq, p.m))) {
          ok = false;
          wit = "D_m image escapes at x=" + show(*g, x);
          break;
        }
        auto im_dmn = q.image(d_mn_of_element(*g, x, p));
        if (!subset_of(im_dmn, d_mn_of_element(t, xq, p))) {
          ok = false;
          wit = "D_{m,n} image escapes at x=" + show(*g, x);
          break;
        }
      }
      check(rep, inst, ok, wit);
    }
  });
}

void suite_lemma_2_3_ii(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& normals = ctx.normals(name, g);
    for (std::size_t ni = 0; ni < normals.size(); ++ni) {
      const auto& n = normals[ni];
      std::string inst = pair_tag(name, p) + " N" + std::to_string(ni + 1) +
                         "=" + std::to_string(n.order());
      QuotientMap q = quotient(g, n.members);
      auto im_dm = q.image(ctx.dm(name, g, p.m).members);
      auto im_dmn = q.image(ctx.dmn(name, g, p).members);
      bool ok_m = subset_of(im_dm, d_m_group(q.target, p.m).members);
      bool ok_mn = subset_of(im_dmn, d_mn_group(q.target, p).members);
      check(rep, inst, ok_m && ok_mn,
            ok_m ? "image of D_{m,n}(G) escapes D_{m,n}(G/N)"
                 : "image of D_m(G) escapes D_m(G/N)");
    }
  });
}

void suite_lemma_2_3_iii(Ctx& ctx, SuiteReport& rep) {
  constexpr int kProductMax = 64;
  for (std::size_t i = 0; i < ctx.corpus.size(); ++i) {
    for (std::size_t j = i; j < ctx.corpus.size(); ++j) {
      const auto& ea = ctx.corpus[i];
      const auto& eb = ctx.corpus[j];
      if (ea.order < 2 || eb.order < 2) continue;
      if (ea.order * eb.order > kProductMax) continue;
      auto pairs = coprime_factorizations(ea.order * eb.order);
      if (pairs.empty()) continue;
      const GroupPtr& a = ctx.get(ea.name);
      const GroupPtr& b = ctx.get(eb.name);
      GroupPtr prod = Group::direct_product(a, b);
      int nb = b->order();
      for (const auto& p : pairs) {
        std::string inst = pair_tag(prod->name(), p);
        auto dm_prod = d_m_group(prod, p.m).members;
        auto dm_want = cartesian_ids(ctx.dm(ea.name, a, p.m).members,
                                     ctx.dm(eb.name, b, p.m).members, nb);
        if (dm_prod != dm_want) {
          add_fail(rep, inst,
                   "D_m of the product has order " +
                       std::to_string(dm_prod.size()) + ", expected " +
                       std::to_string(dm_want.size()));
          continue;
        }
        auto dmn_prod = d_mn_group(prod, p).members;
        auto dmn_bound = cartesian_ids(ctx.dmn(ea.name, a, p).members,
                                       ctx.dmn(eb.name, b, p).members, nb);
        check(rep, inst, subset_of(dmn_prod, dmn_bound),
              "D_{m,n} of the product escapes the factorwise product");
      }
    }
  }
}

void suite_lemma_2_3_iv(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    auto pairs = coprime_factorizations(e.order);
    if (pairs.empty()) continue;
    if (e.order > ctx.opt.subgroup_cap) {
      add_skip(rep, e.name, cap_reason(ctx));
      continue;
    }
    const GroupPtr& g = ctx.get(e.name);
    const auto& subs = ctx.subgroups(e.name, g);
    for (const auto& p : pairs) {
      auto lm_g = l_set(*g, p.m);
      auto ln_g = l_set(*g, p.n);
      bool ok = true;
      std::string wit;
      for (const auto& h : subs) {
        // Membership on the subgroup side is the defining condition over H's
        // own elements; an H without nontrivial n-elements admits all of its
        // L_m vacuously, where the group-level value would collapse to 1.
        auto lm_h = intersect(lm_g, h.members);
        auto ln_h = intersect(ln_g, h.members);
        auto in_dm_h = [&](int x) {
          for (int y : lm_h)
            if (p.m % g->element_order(g->mult(x, y)) != 0) return false;
          return true;
        };
        auto in_dmn_h = [&](int x) {
          for (int u : ln_h) {
            if (u == g->identity()) continue;
            if (p.n % g->element_order(g->mult(x, u)) != 0) return false;
          }
          return true;
        };
        for (int x : intersect(ctx.dm(e.name, g, p.m).members, h.members))
          if (!in_dm_h(x)) ok = false;
        for (int x : intersect(ctx.dmn(e.name, g, p).members, h.members))
          if (!in_dmn_h(x)) ok = false;
        if (!ok) {
          wit = "restriction escapes in the order-" +
                std::to_string(h.order()) + " subgroup";
          break;
        }
      }
      check(rep, pair_tag(e.name, p), ok, wit,
            "checked " + std::to_string(subs.size()) + " subgroups");
    }
  }
}

void suite_lemma_2_5_i(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    bool ok = true;
    std::string wit;
    for (const auto* d :
         {&ctx.dm(name, g, p.m).members, &ctx.dmn(name, g, p).members}) {
      for (int a = 0; a < g->order() && ok; ++a)
        for (int x : *d) {
          if (!std::binary_search(d->begin(), d->end(), g->conjugate(a, x))) {
            ok = false;
            wit = "conjugate of " + show(*g, x) + " by " + show(*g, a) +
                  " escapes";
            break;
          }
        }
    }
    check(rep, pair_tag(name, p), ok, wit);
  });
}

void suite_lemma_2_5_ii(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& dm = ctx.dm(name, g, p.m);
    const auto& dmn = ctx.dmn(name, g, p);
    bool ok_m = closed_set(*g, dm.members) &&
                std::binary_search(dm.members.begin(), dm.members.end(),
                                   g->identity());
    bool ok_mn = closed_set(*g, dmn.members) &&
                 std::binary_search(dmn.members.begin(), dmn.members.end(),
                                    g->identity());
    check(rep, pair_tag(name, p), ok_m && ok_mn,
          ok_m ? "D_{m,n}(G) is not closed" : "D_m(G) is not closed");
  });
}

void suite_lemma_2_5_iii(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    check(rep, pair_tag(name, p),
          subset_of(ctx.dmn(name, g, p).members, ctx.dm(name, g, p.m).members),
          "D_{m,n}(G) is not inside D_m(G)");
  });
}

void suite_remark_2_6(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    auto size = ctx.dmn(name, g, p).members.size();
    check(rep, pair_tag(name, p), static_cast<int>(size) < g->order(),
          "D_{m,n}(G) is the whole group");
  });
}

void suite_prop_factor_i(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    QuotientMap q = quotient(g, ctx.dmn(name, g, p).members);
    auto again = d_mn_group(q.target, p).members;
    check(rep, pair_tag(name, p), again.size() == 1,
          "the quotient still has a nontrivial subgroup of order " +
              std::to_string(again.size()));
  });
}

void suite_cor_nil2(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& d = ctx.dmn(name, g, p);
    bool normal = is_normal(*g, d.members);
    bool nil = is_nilpotent(materialize(g, d.members));
    check(rep, pair_tag(name, p), normal && nil,
          normal ? "the subgroup is not nilpotent" : "the set is not normal",
          "order " + std::to_string(d.members.size()));
  });
}

// --------------------------------------------------------------------------
// Frobenius structure.

void suite_thm_nil(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& d = ctx.dmn(name, g, p).members;
    std::string base = pair_tag(name, p);

    if (d.size() <= 1) {
      add_skip(rep, base + " kernel", "D_{m,n}(G) is trivial");
    } else {
      bool ok = true;
      std::string wit;
      auto ln = l_set(*g, p.n);
      for (int x : ln) {
        if (x == g->identity()) continue;
        auto gens = d;
        gens.push_back(x);
        Subgroup s = subgroup_generated(g, gens);
        GroupPtr mat = materialize(g, s.members);
        auto kernel = index_in(s.members, d);
        if (!is_frobenius_with_kernel(mat, kernel)) {
          ok = false;
          wit = "D<x> is not Frobenius over the kernel at x=" + show(*g, x);
          break;
        }
      }
      check(rep, base + " kernel", ok, wit,
            "checked " + std::to_string(ln.size() - 1) + " cyclic extensions");
    }

    if (g->order() > ctx.opt.subgroup_cap) {
      add_skip(rep, base + " hall", cap_reason(ctx));
      return;
    }
    bool lhs = d.size() > 1 && static_cast<int>(d.size()) == p.m;
    bool rhs = false;
    auto lm = l_set(*g, p.m);
    for (const auto& h : ctx.subgroups(name, g)) {
      if (h.order() != p.n) continue;
      if (intersect(d, h.members).size() != 1) continue;
      auto dh = product_set(*g, d, h.members);
      auto lh = product_set(*g, lm, h.members);
      if (dh != lh || !closed_set(*g, dh)) continue;
      GroupPtr mat = materialize(g, dh);
      if (is_frobenius_with_kernel(mat, index_in(dh, d))) {
        rhs = true;
        break;
      }
    }
    check(rep, base + " hall", lhs == rhs,
          lhs ? "Hall-sized D_{m,n}(G) without a Frobenius splitting"
              : "Frobenius splitting without a Hall-sized D_{m,n}(G)");
  });
}

void suite_thm_fro1(Ctx& ctx, SuiteReport& rep) {
  std::map<std::string, bool> global_cache;
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    bool lhs = fro1_condition(g, p);
    const auto& w = ctx.frobenius(name, g);
    bool rhs = w.has_value() && w->kernel.order() == p.m;
    auto it = global_cache.find(name);
    if (it == global_cache.end())
      it = global_cache.emplace(name, fro1_condition_global(g)).first;
    check(rep, pair_tag(name, p), lhs == rhs,
          lhs ? "order condition holds but the group is not Frobenius with "
                "kernel of order m"
              : "Frobenius with kernel of order m but the order condition "
                "fails",
          std::string("unrestricted form ") +
              (it->second ? "holds" : "fails"));
  });
}

void suite_lemma_2_7(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    if (e.order > ctx.opt.subgroup_cap) {
      add_skip(rep, e.name, cap_reason(ctx));
      continue;
    }
    const GroupPtr& g = ctx.get(e.name);
    bool ok = true;
    std::string wit;
    int count = 0;
    for (const auto& k : ctx.normals(e.name, g)) {
      for (const auto& h : ctx.subgroups(e.name, g)) {
        if (k.order() * h.order() != e.order) continue;
        if (intersect(k.members, h.members).size() != 1) continue;
        auto law = semidirect_order_law_check(g, k.members, h.members);
        ++count;
        if (!law.order_divides) {
          ok = false;
          wit = "o(y) fails to divide o(xy) at x=" +
                show(*g, law.divides_witness->first) + ", y=" +
                show(*g, law.divides_witness->second);
          break;
        }
        if (law.frobenius_decomposition && !law.order_equal) {
          ok = false;
          wit = "fixed-point-free action but o(xy) != o(y) at x=" +
                show(*g, law.equal_witness->first) + ", y=" +
                show(*g, law.equal_witness->second);
          break;
        }
      }
      if (!ok) break;
    }
    check(rep, e.name, ok, wit,
          "checked " + std::to_string(count) + " decompositions");
  }
}

void suite_prop_factor_ii(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& d = ctx.dmn(name, g, p).members;
    std::string base = pair_tag(name, p);
    if (d.size() <= 1) {
      add_skip(rep, base, "D_{m,n}(G) is trivial");
      return;
    }
    bool ok = true;
    std::string wit;
    bool syl2_cyclic = false;
    for (int q : prime_divisors(p.n)) {
      Subgroup syl = sylow(g, q);
      GroupPtr mat = materialize(g, syl.members);
      bool good = cyclic_or_generalized_quaternion(mat);
      if (q == 2 && good && mat->exponent() == mat->order())
        syl2_cyclic = true;
      if (!good) {
        ok = false;
        wit = "Sylow " + std::to_string(q) +
              " is neither cyclic nor generalized quaternion";
        break;
      }
    }
    check(rep, base + " sylow", ok, wit);
    if (!ok) return;

    if (p.n % 2 == 0 && (syl2_cyclic || g->order() % 3 != 0)) {
      if (g->order() > ctx.opt.subgroup_cap) {
        add_skip(rep, base + " split", cap_reason(ctx));
        return;
      }
      bool have_m = false, have_n = false;
      for (const auto& h : ctx.subgroups(name, g)) {
        if (h.order() == p.m) have_m = true;
        if (h.order() == p.n) have_n = true;
      }
      check(rep, base + " split", have_m && have_n,
            have_m ? "no Hall subgroup of order n" :
                     "no Hall subgroup of order m",
            "G = KH with |K|=" + std::to_string(p.m) + ", |H|=" +
                std::to_string(p.n));
    }
  });
}

void suite_thm_frob(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& d = ctx.dmn(name, g, p).members;
    QuotientMap q1 = quotient(g, d);
    auto u = q1.preimage(d_mn_group(q1.target, p.swapped()).members);
    QuotientMap q2 = quotient(g, u);
    auto v = q2.preimage(d_mn_group(q2.target, p).members);
    QuotientMap q3 = quotient(g, v);
    auto tail = d_mn_group(q3.target, p).members;
    std::string base = pair_tag(name, p);
    check(rep, base + " (a)", tail.size() == 1,
          "the third quotient still has a nontrivial subgroup");

    if (u == v && u == d) {
      add_pass(rep, base + " (b)", "vacuous: U = V = D_{m,n}(G)");
      return;
    }
    if (d.size() <= 1) {
      add_skip(rep, base + " (b)", "D_{m,n}(G) is trivial");
      return;
    }
    bool ok = true;
    std::string wit;
    if (u != v) {
      GroupPtr mat = materialize(g, v);
      if (!find_two_frobenius(mat, ctx.opt.subgroup_cap).has_value()) {
        ok = false;
        wit = "V of order " + std::to_string(v.size()) + " is not 2-Frobenius";
      }
    }
    if (ok && u != d) {
      GroupPtr mat = materialize(g, u);
      if (!find_frobenius(mat, ctx.opt.subgroup_cap).has_value()) {
        ok = false;
        wit = "U of order " + std::to_string(u.size()) + " is not Frobenius";
      }
    }
    check(rep, base + " (b)", ok, wit);
  });
}

void suite_frobenius_divisibility(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    const GroupPtr& g = ctx.get(e.name);
    bool ok = true;
    std::string wit;
    for (int m : divisors(e.order)) {
      auto ls = l_set(*g, m);
      if (ls.size() % static_cast<std::size_t>(m) != 0) {
        ok = false;
        wit = "|L_" + std::to_string(m) + "| = " +
              std::to_string(ls.size()) + " is not a multiple of " +
              std::to_string(m);
        break;
      }
    }
    check(rep, e.name, ok, wit,
          "checked " + std::to_string(divisors(e.order).size()) +
              " divisors");
  }
}

// --------------------------------------------------------------------------
// E-series.

void suite_thm_3_5(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& ser = ctx.series(name, g, p);
    bool len2 = ser.reached && ser.length == 2;
    bool nil = ctx.nilpotent(name, g);
    check(rep, pair_tag(name, p), len2 == nil,
          len2 ? "length-2 series on a non-nilpotent group"
               : "nilpotent group without a length-2 series");
  });
}

void suite_remark_3_2(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& d = ctx.dmn(name, g, p).members;
    QuotientMap q = quotient(g, d);
    auto next = q.preimage(d_mn_group(q.target, p).members);
    check(rep, pair_tag(name, p),
          next == d && static_cast<int>(d.size()) < g->order(),
          "repeating the same operator did not stall");
  });
}

void suite_remark_3_6(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& ser = ctx.series(name, g, p);
    check(rep, pair_tag(name, p), !ser.reached || is_solvable(g),
          "the series reaches a non-solvable group",
          ser.reached ? "reached" : "vacuous (series does not reach)");
  });
}

void suite_remark_3_7(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    if (!e.non_abelian_simple) continue;
    auto pairs = coprime_factorizations(e.order);
    const GroupPtr& g = ctx.get(e.name);
    for (const auto& p : pairs) {
      const auto& d = ctx.dmn(e.name, g, p).members;
      const auto& ser = ctx.series(e.name, g, p);
      bool stuck = !ser.reached;
      for (const auto& t : ser.terms)
        if (t.order() != 1) stuck = false;
      check(rep, pair_tag(e.name, p), d.size() == 1 && stuck,
            d.size() == 1 ? "the series leaves the trivial subgroup"
                          : "D_{m,n}(G) is nontrivial on a simple group");
    }
  }
}

void suite_thm_can(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    auto r = stabilization_check(g, p);
    switch (r.outcome) {
      case CheckOutcome::Pass:
        add_pass(rep, pair_tag(name, p), r.detail);
        break;
      case CheckOutcome::Fail:
        add_fail(rep, pair_tag(name, p), r.detail);
        break;
      case CheckOutcome::Skip:
        add_skip(rep, pair_tag(name, p), r.detail);
        break;
    }
  });
}

void suite_thm_r(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& ser = ctx.series(name, g, p);
    std::string inst = pair_tag(name, p);
    if (!ser.reached) {
      add_skip(rep, inst, "series does not reach the group");
      return;
    }
    int r = *ser.length;
    if (r == 2) {
      check(rep, inst, ctx.nilpotent(name, g),
            "length 2 but the group is not nilpotent", "length 2: nilpotent");
      return;
    }
    if (r == 3) {
      const auto& e1 = ser.terms[1].members;
      if (static_cast<int>(e1.size()) != p.m) {
        add_skip(rep, inst,
                 "first layer is not a Hall subgroup (|E1|=" +
                     std::to_string(e1.size()) + ", m=" + std::to_string(p.m) +
                     ")");
        return;
      }
      check(rep, inst, is_frobenius_with_kernel(g, e1),
            "length 3 with Hall first layer but not Frobenius over it",
            "length 3: Frobenius with kernel of order " +
                std::to_string(e1.size()));
      return;
    }
    if (r == 4) {
      const auto& e1 = ser.terms[1].members;
      const auto& e2 = ser.terms[2].members;
      if (e2.size() != e1.size() * static_cast<std::size_t>(p.n)) {
        add_skip(rep, inst,
                 "second layer is not a Hall subgroup (|E2|/|E1| != n)");
        return;
      }
      GroupPtr mid = materialize(g, e2);
      bool inner = is_frobenius_with_kernel(mid, index_in(e2, e1));
      QuotientMap q = quotient(g, e1);
      bool outer = is_frobenius_with_kernel(q.target, q.image(e2));
      check(rep, inst, inner && outer,
            inner ? "G/E1 is not Frobenius with kernel E2/E1"
                  : "E2 is not Frobenius with kernel E1",
            "length 4: 2-Frobenius through E1 < E2");
      return;
    }
    add_fail(rep, inst, "series length " + std::to_string(r) + " exceeds 4");
  });
}

void suite_cor_fitting_height(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    const auto& ser = ctx.series(name, g, p);
    if (!ser.reached) {
      add_pass(rep, pair_tag(name, p), "vacuous (series does not reach)");
      return;
    }
    auto h = fitting_height(g);
    check(rep, pair_tag(name, p), h.has_value() && *h <= 4,
          "Fitting height " + (h ? std::to_string(*h) : "undefined") +
              " exceeds 4",
          "height " + std::to_string(h.value_or(0)));
  });
}

// --------------------------------------------------------------------------
// Nilpotency criteria.

void suite_thm_min1(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    auto pairs = coprime_factorizations(e.order);
    if (pairs.empty()) continue;
    if (e.order > ctx.opt.subgroup_cap) {
      add_skip(rep, e.name, cap_reason(ctx));
      continue;
    }
    const GroupPtr& g = ctx.get(e.name);
    const auto& subs = ctx.subgroups(e.name, g);
    bool nil = ctx.nilpotent(e.name, g);
    // The hypothesis quantifies over every coprime factorization: a single
    // orientation can trivialize all central quotients while G stays
    // non-nilpotent (S3 at (2,3)); the swapped orientation then recovers a
    // witness inside a minimal non-nilpotent subgroup.
    std::vector<std::pair<int, GroupPtr>> quots;
    quots.reserve(subs.size());
    for (const auto& m : subs) {
      GroupPtr mat = materialize(g, m.members);
      quots.emplace_back(m.order(), quotient(mat, center(mat).members).target);
    }
    bool hyp = true;
    std::string wit;
    for (const auto& p : pairs) {
      for (const auto& [ord, q] : quots) {
        if (d_mn_group(q, p).members.size() != 1) {
          hyp = false;
          wit = "order-" + std::to_string(ord) + " subgroup at (" +
                std::to_string(p.m) + "," + std::to_string(p.n) + ")";
          break;
        }
      }
      if (!hyp) break;
    }
    check(rep, e.name, hyp == nil,
          hyp ? "central quotients trivialize at every coprime factorization "
                "but G is not nilpotent"
              : "nilpotent G with a nontrivial central-quotient subgroup (" +
                    wit + ")",
          nil ? "nilpotent" : "blocked by a " + wit);
  }
}

void suite_thm_min2(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    auto pairs = coprime_factorizations(e.order);
    if (pairs.empty()) continue;
    if (e.order > ctx.opt.subgroup_cap) {
      add_skip(rep, e.name, cap_reason(ctx));
      continue;
    }
    const GroupPtr& g = ctx.get(e.name);
    const auto& subs = ctx.subgroups(e.name, g);
    for (const auto& p : pairs) {
      const auto& d = ctx.dmn(e.name, g, p).members;
      if (d.size() <= 1) {
        add_skip(rep, pair_tag(e.name, p), "D_{m,n}(G) is trivial");
        continue;
      }
      bool hyp = true;
      for (const auto& m : subs) {
        if (m.order() == e.order) continue;
        GroupPtr mat = materialize(g, m.members);
        if (is_nilpotent(mat)) continue;
        QuotientMap q = quotient(mat, center(mat).members);
        if (d_mn_group(q.target, p).members.size() != 1) {
          hyp = false;
          break;
        }
      }
      if (!hyp) {
        add_skip(rep, pair_tag(e.name, p),
                 "a proper non-nilpotent subgroup keeps a nontrivial "
                 "D_{m,n}(M/Z(M))");
        continue;
      }
      check(rep, pair_tag(e.name, p), is_frobenius_with_kernel(g, d),
            "hypotheses hold but G is not Frobenius over D_{m,n}(G)",
            "Frobenius with kernel of order " + std::to_string(d.size()));
    }
  }
}

void suite_lemma_2_16(Ctx& ctx, SuiteReport& rep) {
  for_each_pair(ctx, [&](const std::string& name, const GroupPtr& g,
                         const CoprimePair& p) {
    if (!ctx.nilpotent(name, g)) return;
    check(rep, pair_tag(name, p), ctx.dmn(name, g, p).members.size() == 1,
          "nilpotent group with nontrivial D_{m,n}(G)");
  });
}

// --------------------------------------------------------------------------
// Independent oracles.

void suite_baumslag_wiegold(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    const GroupPtr& g = ctx.get(e.name);
    bool law = true;
    std::string wit;
    for (int a = 0; a < g->order() && law; ++a) {
      int oa = g->element_order(a);
      for (int b = 0; b < g->order(); ++b) {
        int ob = g->element_order(b);
        if (std::gcd(oa, ob) != 1) continue;
        if (g->element_order(g->mult(a, b)) != oa * ob) {
          law = false;
          wit = "o(xy) != o(x)o(y) at x=" + show(*g, a) + ", y=" + show(*g, b);
          break;
        }
      }
    }
    bool nil = ctx.nilpotent(e.name, g);
    check(rep, e.name, law == nil,
          law ? "product law holds but the group is not nilpotent"
              : "nilpotent group violating the product law (" + wit + ")",
          nil ? "nilpotent, law holds" : "non-nilpotent, law fails");
  }
}

void suite_sylow_oracle(Ctx& ctx, SuiteReport& rep) {
  for (const auto& e : ctx.corpus) {
    const GroupPtr& g = ctx.get(e.name);
    for (int q : prime_divisors(e.order)) {
      std::string inst = e.name + " p=" + std::to_string(q);
      Subgroup syl = sylow(g, q);
      if (syl.order() != p_part(e.order, q)) {
        add_fail(rep, inst,
                 "order " + std::to_string(syl.order()) + " is not the " +
                     std::to_string(q) + "-part of " + std::to_string(e.order));
        continue;
      }
      bool pure = true;
      for (int x : syl.members)
        if (g->element_order(x) != p_part(g->element_order(x), q)) pure = false;
      if (!pure) {
        add_fail(rep, inst, "contains an element of foreign order");
        continue;
      }
      int idx = e.order / normalizer(g, syl.members).order();
      if (idx % q != 1) {
        add_fail(rep, inst,
                 "normalizer index " + std::to_string(idx) +
                     " is not 1 mod " + std::to_string(q));
        continue;
      }
      if (e.order <= limits::kSubgroupCapDefault) {
        bool found = false;
        int max_order = 1;
        for (const auto& h : ctx.subgroups(e.name, g)) {
          if (h.order() != p_part(h.order(), q)) continue;
          max_order = std::max(max_order, h.order());
          if (h.members == syl.members) found = true;
        }
        if (!found || max_order != syl.order()) {
          add_fail(rep, inst, "disagrees with exhaustive enumeration");
          continue;
        }
        add_pass(rep, inst, "matches exhaustive enumeration");
      } else {
        add_pass(rep, inst, "enumeration cross-check skipped above order " +
                                std::to_string(limits::kSubgroupCapDefault));
      }
    }
  }
}

// --------------------------------------------------------------------------

using SuiteFn = void (*)(Ctx&, SuiteReport&);

struct SuiteDef {
  const char* id;
  const char* statement;
  SuiteFn fn;
};

const SuiteDef kSuites[] = {
    {"example-2.4",
     "On S3, D_3 and D_{3,2} agree with order 3; on S3xS3, D_3 has order 9 "
     "and exponent 3 while D_{3,2} is trivial.",
     suite_example_2_4},
    {"example-3.3",
     "The (3,2) series of S3 is 1 <= A3 <= S3: length 3, Frobenius, first "
     "term the Fitting subgroup.",
     suite_example_3_3},
    {"example-3.4",
     "The (8,3) series of S4 is 1 <= V4 <= A4 <= S4: length 4, 2-Frobenius, "
     "with O_2(S4) and the order-12 normal subgroup as layers.",
     suite_example_3_4},
    {"lemma-2.3-i",
     "For x in L_m and N normal, the image of D_m(x) lies in D_m(xN) and the "
     "image of D_{m,n}(x) lies in D_{m,n}(xN).",
     suite_lemma_2_3_i},
    {"lemma-2.3-ii",
     "The image of D_m(G) in G/N lies in D_m(G/N); likewise for D_{m,n}.",
     suite_lemma_2_3_ii},
    {"lemma-2.3-iii",
     "D_m(AxB) = D_m(A) x D_m(B), and D_{m,n}(AxB) lies inside "
     "D_{m,n}(A) x D_{m,n}(B) (products up to order 64).",
     suite_lemma_2_3_iii},
    {"lemma-2.3-iv",
     "For H <= G, D_m(G) meet H lies in D_m(H) and D_{m,n}(G) meet H lies in "
     "D_{m,n}(H).",
     suite_lemma_2_3_iv},
    {"lemma-2.5-i",
     "D_m(G) and D_{m,n}(G) are invariant under conjugation.",
     suite_lemma_2_5_i},
    {"lemma-2.5-ii",
     "D_m(G) and D_{m,n}(G) are subgroups: they contain the identity and are "
     "closed under products and inverses.",
     suite_lemma_2_5_ii},
    {"lemma-2.5-iii", "D_{m,n}(G) is contained in D_m(G).",
     suite_lemma_2_5_iii},
    {"remark-2.6",
     "For n > 1 coprime to m, D_{m,n}(G) is a proper subgroup.",
     suite_remark_2_6},
    {"prop-factor-i", "D_{m,n}(G / D_{m,n}(G)) = 1.", suite_prop_factor_i},
    {"cor-nil2",
     "When |G| = mn with gcd(m,n) = 1, D_{m,n}(G) is a normal nilpotent "
     "subgroup.",
     suite_cor_nil2},
    {"thm-nil",
     "Kernel: D_{m,n}(G)<x> is Frobenius with kernel D_{m,n}(G) for each "
     "nontrivial x in L_n. Hall: nontrivial D_{m,n}(G) has order m exactly "
     "when some order-n subgroup H makes L_m(G)H a Frobenius group over it.",
     suite_thm_nil},
    {"thm-fro1",
     "pi(o(xy)) within pi(o(y)) for all x in L_m and nontrivial y in L_n "
     "holds exactly when G is Frobenius with kernel of order m.",
     suite_thm_fro1},
    {"lemma-2.7",
     "In G = K x| H with K normal and K meet H = 1: o(y) divides o(xy); and "
     "when H acts fixed-point-freely, o(xy) = o(y) for nontrivial y.",
     suite_lemma_2_7},
    {"prop-factor-ii",
     "When D_{m,n}(G) != 1: Sylow subgroups at primes dividing n are cyclic "
     "or generalized quaternion; with a cyclic Sylow 2 (or 3 not dividing "
     "|G|), G splits into Hall subgroups of orders m and n.",
     suite_prop_factor_ii},
    {"thm-frob",
     "With U over D_{m,n}(G) taken by D_{n,m} and V over U taken by D_{m,n}: "
     "(a) D_{m,n}(G/V) = 1; (b) for nontrivial D_{m,n}(G), U != V forces V "
     "2-Frobenius and U != D_{m,n}(G) forces U Frobenius.",
     suite_thm_frob},
    {"frobenius-divisibility",
     "The number of solutions of x^m = 1 is a multiple of m for every "
     "divisor m of |G|.",
     suite_frobenius_divisibility},
    {"thm-3.5",
     "The series has length 2 exactly for nilpotent groups.", suite_thm_3_5},
    {"remark-3.2",
     "Iterating D_{m,n} without alternating parameters stalls after one step "
     "below the whole group.",
     suite_remark_3_2},
    {"remark-3.6", "If the series reaches G, then G is solvable.",
     suite_remark_3_6},
    {"remark-3.7",
     "On a non-abelian simple group the operators are trivial and the series "
     "never leaves 1.",
     suite_remark_3_7},
    {"thm-can",
     "With terms built by operator application alone, the fourth term equals "
     "the third.",
     suite_thm_can},
    {"thm-r",
     "Length 2 means nilpotent; length 3 with a Hall first layer means "
     "Frobenius with that kernel; length 4 with a Hall second layer means "
     "2-Frobenius through the first two layers.",
     suite_thm_r},
    {"cor-fitting-height",
     "A group reached by its series has Fitting height at most 4.",
     suite_cor_fitting_height},
    {"thm-min1",
     "D_{m,n}(M/Z(M)) = 1 for every subgroup M and every coprime "
     "factorization |G| = m*n exactly when G is nilpotent.",
     suite_thm_min1},
    {"thm-min2",
     "If D_{m,n}(G) != 1 and every proper non-nilpotent subgroup M has "
     "D_{m,n}(M/Z(M)) = 1, then G is Frobenius with kernel D_{m,n}(G).",
     suite_thm_min2},
    {"lemma-2.16",
     "A nilpotent group of coprime-factored order mn has D_{m,n}(G) = 1.",
     suite_lemma_2_16},
    {"baumslag-wiegold",
     "G is nilpotent exactly when o(xy) = o(x)o(y) for every pair of "
     "elements of coprime order.",
     suite_baumslag_wiegold},
    {"sylow-oracle",
     "Sylow subgroups from normalizer growth have the p-part order, consist "
     "of p-elements, satisfy the index congruence, and match exhaustive "
     "enumeration on small groups.",
     suite_sylow_oracle},
};

const SuiteDef* find_suite(const std::string& id) {
  for (const auto& s : kSuites)
    if (id == s.id) return &s;
  return nullptr;
}

SuiteReport run_one(const SuiteDef& def, Ctx& ctx) {
  SuiteReport rep;
  rep.suite_id = def.id;
  rep.statement = def.statement;
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.fn(ctx, rep);
  } catch (const Error& e) {
    rep.results.push_back({"suite-error", Outcome::Fail, e.what()});
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace

int SuiteReport::count(Outcome o) const {
  int c = 0;
  for (const auto& r : results)
    if (r.outcome == o) ++c;
  return c;
}

std::vector<std::string> list_suites() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.id);
  return out;
}

std::string suite_statement(const std::string& id) {
  const SuiteDef* def = find_suite(id);
  if (!def) throw Error(ErrorCode::UnknownSuite, "unknown suite: " + id);
  return def->statement;
}

SuiteReport run_suite(const std::string& id, const VerifyOptions& opt) {
  const SuiteDef* def = find_suite(id);
  if (!def) throw Error(ErrorCode::UnknownSuite, "unknown suite: " + id);
  Ctx ctx(opt);
  return run_one(*def, ctx);
}

std::vector<SuiteReport> run_all(const VerifyOptions& opt) {
  Ctx ctx(opt);
  std::vector<SuiteReport> out;
  out.reserve(std::size(kSuites));
  for (const auto& s : kSuites) out.push_back(run_one(s, ctx));
  return out;
}

}  // namespace grouptool::verify
